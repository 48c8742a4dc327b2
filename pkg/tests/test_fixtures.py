"""Bundled data files and the sha256 manifest."""

from __future__ import annotations

import shutil

from ogcalc.cohomology import BASIS, check_class
from ogcalc.fixtures import (
    census_fixture,
    conic_number_fixture,
    data_path,
    gw_number_fixture,
    line_number_fixture,
    multiplication_table_fixture,
    read_manifest,
    verify_manifest,
)


def test_bundled_manifest_is_clean():
    assert verify_manifest() == []


def test_manifest_covers_every_data_file():
    names = set(read_manifest())
    assert names == {
        "multiplication_table.json",
        "line_numbers.json",
        "conic_numbers.json",
        "gw_numbers.json",
        "census.json",
        "deformation_fixture.json",
    }


def test_corrupted_copy_is_named(tmp_path):
    for name in list(read_manifest()) + ["MANIFEST.sha256"]:
        shutil.copy(str(data_path(name)), tmp_path / name)
    target = tmp_path / "line_numbers.json"
    target.write_text(target.read_text() + "\n")
    assert verify_manifest(base=tmp_path) == ["line_numbers.json"]


def test_multiplication_table_shape():
    rows, cols, products = multiplication_table_fixture()
    assert len(rows) * len(cols) == 48
    assert len(products) == len(rows)
    assert all(len(r) == len(cols) for r in products)
    for row in products:
        for cell in row:
            for lam, coeff in cell.items():
                check_class(lam)
                assert coeff > 0


def test_invariant_fixtures_are_well_formed():
    lines = line_number_fixture()
    conics = conic_number_fixture()
    assert len(lines) == 12
    assert len(conics) == 6
    assert all(d == 1 for d, _, _ in lines)
    assert all(d == 2 for d, _, _ in conics)
    for _, classes, value in lines + conics:
        assert value >= 0
        for lam in classes:
            assert lam in BASIS


def test_gw_blocks_sum():
    blocks = gw_number_fixture()
    assert sum(len(entries) for _, entries in blocks) == 196
    labels = [label for label, _ in blocks]
    assert len(labels) == len(set(labels))
    for _, entries in blocks:
        for d, classes, _ in entries:
            assert d >= 1
            assert all(lam in BASIS for lam in classes)


def test_census_counts():
    counts = census_fixture()
    assert counts == {"line": 1071, "conic": 1459}
