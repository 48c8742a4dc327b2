"""Shared fixtures and the acceptance summary hook."""

from __future__ import annotations

import pytest

from ogcalc.quantum import Solver

_ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def record_criterion(num: int, name: str, ok: bool) -> None:
    _ACCEPTANCE[num] = (name, ok)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        name, ok = _ACCEPTANCE[num]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {num} ({name}): {status}")


@pytest.fixture(scope="session")
def solver() -> Solver:
    # seeds every degree-1 invariant once for the whole run
    return Solver()
