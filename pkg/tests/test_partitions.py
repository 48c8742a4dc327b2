"""Strict and odd partition enumeration."""

from __future__ import annotations

from itertools import combinations

import pytest

from ogcalc.partitions import (
    check_strict,
    is_strict,
    odd_partitions,
    strict_partitions,
    weight,
)


def brute_strict(n: int, max_part: int | None = None) -> set:
    top = max_part if max_part is not None else n
    out = set()
    for k in range(top + 1):
        for combo in combinations(range(1, top + 1), k):
            if sum(combo) == n:
                out.add(tuple(sorted(combo, reverse=True)))
    return out


def test_strict_partitions_match_brute_force():
    for n in range(13):
        got = set(strict_partitions(n))
        assert got == brute_strict(n)


def test_strict_partitions_respect_max_part():
    for n in range(11):
        got = set(strict_partitions(n, max_part=4))
        assert got == brute_strict(n, max_part=4)


def test_parts_strictly_decrease():
    for n in range(12):
        for lam in strict_partitions(n):
            assert all(a > b for a, b in zip(lam, lam[1:]))
            assert weight(lam) == n


def test_odd_partitions_have_odd_parts():
    for n in range(14):
        for lam in odd_partitions(n):
            assert all(p % 2 == 1 for p in lam)
            assert weight(lam) == n
            assert all(a >= b for a, b in zip(lam, lam[1:]))


def test_odd_partition_count_euler():
    # partitions into odd parts are equinumerous with strict partitions
    for n in range(14):
        assert len(list(odd_partitions(n))) == len(list(strict_partitions(n)))


def test_check_strict_passes_and_normalizes():
    assert check_strict((4, 2, 1)) == (4, 2, 1)
    assert check_strict([3, 1]) == (3, 1)
    assert check_strict(()) == ()


def test_check_strict_rejects_repeats_and_disorder():
    with pytest.raises(ValueError):
        check_strict((2, 2))
    with pytest.raises(ValueError):
        check_strict((1, 3))
    with pytest.raises(ValueError):
        check_strict((0,))


def test_is_strict():
    assert is_strict((3, 2))
    assert not is_strict((2, 2))
