"""Bundled reference data: classical products, invariant tables, and the
deformation fixture, with a sha256 manifest.

Every value here was computed independently elsewhere; the package treats
them as cross-check targets, never as inputs to its own computations.
"""

from __future__ import annotations

import hashlib
import json
from importlib import resources
from pathlib import Path


def data_path(name: str, base=None):
    """Path-like handle to a data file, bundled unless ``base`` overrides."""
    if base is not None:
        return Path(base) / name
    return resources.files("ogcalc.data").joinpath(name)


def _load(name: str, base=None):
    with data_path(name, base).open("r", encoding="utf-8") as fh:
        return json.load(fh)


def _as_partition(parts) -> tuple:
    return tuple(int(p) for p in parts)


def multiplication_table_fixture(base=None):
    """(rows, cols, products): products[i][j] = {partition: coeff}."""
    doc = _load("multiplication_table.json", base)
    rows = [_as_partition(p) for p in doc["rows"]]
    cols = [_as_partition(p) for p in doc["cols"]]
    products = [
        [{_as_partition(lam): int(c) for lam, c in cell} for cell in row]
        for row in doc["products"]
    ]
    return rows, cols, products


def _invariant_entries(name: str, base=None):
    return [
        (int(d), tuple(_as_partition(lam) for lam in classes), int(v))
        for d, classes, v in _load(name, base)["entries"]
    ]


def line_number_fixture(base=None):
    """[(degree, classes, value)] reference line invariants."""
    return _invariant_entries("line_numbers.json", base)


def conic_number_fixture(base=None):
    """[(degree, classes, value)] reference conic invariants."""
    return _invariant_entries("conic_numbers.json", base)


def gw_number_fixture(base=None):
    """[(label, [(degree, classes, value), ...])] higher-degree blocks."""
    doc = _load("gw_numbers.json", base)
    out = []
    for block in doc["blocks"]:
        entries = [
            (int(d), tuple(_as_partition(lam) for lam in classes), int(v))
            for d, classes, v in block["entries"]
        ]
        out.append((block["label"], entries))
    return out


def census_fixture(base=None) -> dict[str, int]:
    """Published enumeration counts keyed 'line' and 'conic'."""
    doc = _load("census.json", base)
    return {"line": int(doc["line_multisets"]), "conic": int(doc["conic_solved"])}


MANIFEST = "MANIFEST.sha256"


def file_digest(name: str, base=None) -> str:
    with data_path(name, base).open("rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def read_manifest(base=None) -> dict[str, str]:
    """Mapping file name -> expected sha256 digest."""
    out = {}
    with data_path(MANIFEST, base).open("r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            digest, name = line.split()
            out[name] = digest
    return out


def verify_manifest(base=None) -> list[str]:
    """Names of data files whose digest does not match the manifest."""
    return [
        name
        for name, digest in read_manifest(base).items()
        if file_digest(name, base) != digest
    ]
