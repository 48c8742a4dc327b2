"""Command line interface.

The subcommands mirror the package layers: ``classical`` for ring
arithmetic, ``lines`` for the degree-1 operator formula, ``gw`` and
``bootstrap`` for the WDVV solver and its cache file, ``verify`` for the
bundled reference tables, and ``defcheck`` for the surface deformation
system.  Exit codes: 0 success, 1 value mismatch or not-unramified,
2 usage error.
"""

from __future__ import annotations

import json
import os
import sys
from time import monotonic

import click

from . import fixtures
from .cohomology import check_class, mult, triple
from .deformation import DeformationFixture, check_unramified
from .divdiff import enumerate_line_numbers, line_invariant
from .exact import ExactnessError
from .quantum import (
    GWTable,
    Solver,
    UnderdeterminedError,
    class_sort_key,
    conic_census,
)


def parse_class(token: str):
    """A partition from CLI text: digit string 431 or comma form 4,3,1."""
    try:
        if token == "0":
            parts: tuple = ()
        elif "," in token:
            parts = tuple(int(p) for p in token.split(","))
        else:
            parts = tuple(int(ch) for ch in token)
        return check_class(parts)
    except (TypeError, ValueError):
        raise click.UsageError(
            f"bad class {token!r}: parts must be strictly decreasing digits 1..4, "
            "e.g. 431 or 4,3,1 (0 for the fundamental class)"
        )


def class_str(lam) -> str:
    return "".join(str(p) for p in lam) if lam else "0"


def _sum_str(terms) -> str:
    """Render {partition: coeff} as tau[..] + 2*tau[..], sorted."""
    ordered = sorted(terms.items(), key=lambda kv: class_sort_key(kv[0]))
    if not ordered:
        return "0"
    return " + ".join(
        ("" if c == 1 else f"{c}*") + f"tau[{class_str(nu)}]" for nu, c in ordered
    )


format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Output format.",
)


def _check_jobs(jobs: int) -> None:
    if jobs < 1:
        raise click.UsageError("--jobs must be >= 1")


def _load_table(path) -> GWTable:
    if path and os.path.exists(path):
        return GWTable.load(path)
    return GWTable()


@click.group()
def main() -> None:
    """Exact Schubert calculus and Gromov-Witten invariants of OG(5,10)."""


@main.command("classical")
@click.argument("classes", nargs=-1, required=True)
@format_option
def cmd_classical(classes, fmt) -> None:
    """Product of two classes, or the triple intersection number of three."""
    lams = [parse_class(t) for t in classes]
    if len(lams) == 2:
        prod = mult(*lams)
        if fmt == "json":
            ordered = sorted(prod.items(), key=lambda kv: class_sort_key(kv[0]))
            doc = {
                "factors": [list(lam) for lam in lams],
                "product": [{"class": list(nu), "coeff": c} for nu, c in ordered],
            }
            click.echo(json.dumps(doc, sort_keys=True))
        else:
            click.echo(_sum_str(prod))
    elif len(lams) == 3:
        v = triple(*lams)
        if fmt == "json":
            doc = {"classes": [list(lam) for lam in lams], "value": v}
            click.echo(json.dumps(doc, sort_keys=True))
        else:
            click.echo(str(v))
    else:
        raise click.UsageError(
            "expected two classes (product) or three (triple intersection)"
        )


@main.command("lines")
@click.argument("classes", nargs=-1)
@click.option(
    "--enumerate",
    "enumerate_",
    is_flag=True,
    help="List every degree-1 invariant whose classes all have weight >= 2.",
)
@click.option(
    "--jobs",
    type=int,
    default=1,
    show_default=True,
    help="Worker processes for the enumeration.",
)
@format_option
def cmd_lines(classes, enumerate_, jobs, fmt) -> None:
    """Degree-1 invariant of CLASSES, or the full enumeration."""
    _check_jobs(jobs)
    if enumerate_:
        if classes:
            raise click.UsageError("--enumerate takes no class arguments")
        census = enumerate_line_numbers(jobs=jobs)
        entries = sorted(census.items())
        nonzero = sum(1 for _, v in entries if v)
        if fmt == "json":
            doc = {
                "count": len(entries),
                "nonzero": nonzero,
                "entries": [
                    {"classes": [list(lam) for lam in key], "value": v}
                    for key, v in entries
                ],
            }
            click.echo(json.dumps(doc, sort_keys=True))
        else:
            for key, v in entries:
                click.echo(" ".join(class_str(lam) for lam in key) + f" = {v}")
            click.echo(f"{len(entries)} invariants, {nonzero} nonzero")
        return
    if not classes:
        raise click.UsageError("give classes, e.g. `lines 431 432`, or --enumerate")
    lams = [parse_class(t) for t in classes]
    try:
        v = line_invariant(lams)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if fmt == "json":
        doc = {"d": 1, "classes": [list(lam) for lam in lams], "value": v}
        click.echo(json.dumps(doc, sort_keys=True))
    else:
        click.echo(str(v))


@main.command("gw")
@click.option("--d", "-d", "d", type=int, required=True, help="Curve degree.")
@click.option(
    "--cache",
    "cache_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="Invariant cache file to reuse and extend.",
)
@click.argument("classes", nargs=-1, required=True)
@format_option
def cmd_gw(d, cache_path, classes, fmt) -> None:
    """Degree-d invariant of CLASSES via the WDVV bootstrap."""
    if d < 0:
        raise click.UsageError("degree must be >= 0")
    lams = [parse_class(t) for t in classes]
    table = _load_table(cache_path)
    solver = Solver(table)
    try:
        v = solver.value(d, lams)
    except UnderdeterminedError as exc:
        click.echo(f"underdetermined: {exc}", err=True)
        sys.exit(1)
    if cache_path:
        table.save(cache_path)
    if fmt == "json":
        doc = {"d": d, "classes": [list(lam) for lam in lams], "value": v}
        click.echo(json.dumps(doc, sort_keys=True))
    else:
        click.echo(str(v))


@main.command("bootstrap")
@click.option(
    "--cache",
    "cache_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="Cache file to create or extend.",
)
@click.option(
    "--jobs",
    type=int,
    default=1,
    show_default=True,
    help="Worker processes for line enumeration.",
)
@format_option
def cmd_bootstrap(cache_path, jobs, fmt) -> None:
    """Seed every line invariant, then solve the scheduled conic keys."""
    _check_jobs(jobs)
    t0 = monotonic()
    table = _load_table(cache_path)
    table.seed_lines(jobs=jobs)
    nlines = sum(1 for dd, _ in table.values if dd == 1)
    solver = Solver(table)
    solved, failed = conic_census(solver)
    runtime = monotonic() - t0
    if cache_path:
        table.save(cache_path)
    if fmt == "json":
        doc = {
            "line_keys": nlines,
            "conic_solved": solved,
            "conic_failed": [[list(lam) for lam in key] for key in failed],
            "records": len(table),
            "runtime_s": round(runtime, 2),
        }
        click.echo(json.dumps(doc, sort_keys=True))
    else:
        click.echo(f"line invariants seeded: {nlines}")
        click.echo(f"conic keys solved: {solved} ({len(failed)} unsolved)")
        click.echo(f"cache records: {len(table)}")
        click.echo(f"runtime: {runtime:.1f} s")
    sys.exit(0 if not failed else 1)


def _row(key: str, expected, computed) -> dict:
    return {
        "key": key,
        "expected": str(expected),
        "computed": str(computed),
        "match": str(expected) == str(computed),
    }


def build_report(base=None, jobs: int = 1) -> dict:
    """Recompute every reference value and diff.  Censuses are informational."""
    try:
        bad = fixtures.verify_manifest(base)
        manifest = "ok" if not bad else "digest mismatch: " + ", ".join(sorted(bad))
        ok = not bad
    except FileNotFoundError:
        manifest = "absent, skipped"
        ok = True

    sections = []

    def section(name: str, rows: list[dict]) -> None:
        nonlocal ok
        mismatches = [r for r in rows if not r["match"]]
        sections.append(
            {"name": name, "checked": len(rows), "mismatches": mismatches}
        )
        ok = ok and not mismatches

    rows = []
    rlab, clab, products = fixtures.multiplication_table_fixture(base)
    for i, lam in enumerate(rlab):
        for j, mu in enumerate(clab):
            want = products[i][j]
            rows.append(
                _row(f"{class_str(lam)}*{class_str(mu)}", _sum_str(want), _sum_str(mult(lam, mu)))
            )
    section("classical products", rows)

    rows = []
    for d, cls, want in fixtures.line_number_fixture(base):
        key = f"I{d}(" + ",".join(class_str(lam) for lam in cls) + ")"
        rows.append(_row(key, want, line_invariant(cls)))
    section("line numbers", rows)

    table = GWTable()
    table.seed_lines(jobs=jobs)
    solver = Solver(table)

    def solver_rows(entries) -> list[dict]:
        out = []
        for d, cls, want in entries:
            key = f"I{d}(" + ",".join(class_str(lam) for lam in cls) + ")"
            try:
                got: object = solver.value(d, cls)
            except UnderdeterminedError:
                got = "underdetermined"
            out.append(_row(key, want, got))
        return out

    section("conic numbers", solver_rows(fixtures.conic_number_fixture(base)))
    for label, entries in fixtures.gw_number_fixture(base):
        section(label, solver_rows(entries))

    refs = fixtures.census_fixture(base)
    nlines = sum(1 for dd, _ in table.values if dd == 1)
    solved, failed = conic_census(solver)
    census = [
        {"name": "line census", "count": nlines, "reference": refs["line"]},
        {
            "name": "conic census",
            "count": solved,
            "unsolved": len(failed),
            "reference": refs["conic"],
        },
    ]

    return {"manifest": manifest, "sections": sections, "census": census, "pass": ok}


def _print_report(report: dict) -> None:
    click.echo(f"manifest: {report['manifest']}")
    for sec in report["sections"]:
        n, miss = sec["checked"], sec["mismatches"]
        click.echo(f"{sec['name']}: {n} checked, {len(miss)} mismatches")
        for r in miss:
            click.echo(
                f"  FAIL {r['key']}: expected {r['expected']}, computed {r['computed']}"
            )
    for c in report["census"]:
        extra = f", {c['unsolved']} unsolved" if "unsolved" in c else ""
        click.echo(
            f"{c['name']}: {c['count']} (reference {c['reference']}{extra}) [informational]"
        )
    click.echo(f"runtime: {report['runtime_s']} s")
    click.echo("PASS" if report["pass"] else "FAIL")


@main.command("verify")
@click.option(
    "--tables",
    "tables_dir",
    type=click.Path(file_okay=False, exists=True),
    default=None,
    help="Directory holding the reference tables (default: bundled copies).",
)
@click.option(
    "--jobs",
    type=int,
    default=1,
    show_default=True,
    help="Worker processes for line enumeration.",
)
@format_option
def cmd_verify(tables_dir, jobs, fmt) -> None:
    """Recompute every reference table entry and report differences."""
    _check_jobs(jobs)
    t0 = monotonic()
    try:
        report = build_report(tables_dir, jobs)
    except FileNotFoundError as exc:
        raise click.ClickException(f"missing fixture: {exc}")
    report["runtime_s"] = round(monotonic() - t0, 2)
    if fmt == "json":
        click.echo(json.dumps(report, sort_keys=True))
    else:
        _print_report(report)
    sys.exit(0 if report["pass"] else 1)


@main.command("defcheck")
@click.option(
    "--fixture",
    "fixture_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Deformation data file (default: the bundled genus-7 surface).",
)
@format_option
def cmd_defcheck(fixture_path, fmt) -> None:
    """First-order deformation check: is the pencil map unramified?"""
    path = fixture_path or str(fixtures.data_path("deformation_fixture.json"))
    try:
        fix = DeformationFixture.load(path)
        verdict = check_unramified(fix)
    except (ExactnessError, ValueError, KeyError) as exc:
        click.echo(f"invalid fixture: {exc}", err=True)
        sys.exit(1)
    kernel = [
        {u: str(c) for u, c in zip(verdict.unknowns, vec)} for vec in verdict.kernel
    ]
    if fmt == "json":
        doc = {
            "unramified": verdict.unramified,
            "kernel_dim": verdict.kernel_dim,
            "kernel": kernel,
        }
        click.echo(json.dumps(doc, sort_keys=True))
    elif verdict.unramified:
        click.echo("UNRAMIFIED (kernel = the rescaling direction s1=..=s7, g=0)")
    else:
        click.echo(f"NOT-UNRAMIFIED: kernel dimension {verdict.kernel_dim}")
        for vec in verdict.kernel:
            click.echo(
                "  " + " ".join(f"{u}={c}" for u, c in zip(verdict.unknowns, vec))
            )
    sys.exit(0 if verdict.unramified else 1)


if __name__ == "__main__":
    main()
