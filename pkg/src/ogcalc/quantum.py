"""Gromov-Witten invariants of OG(5,10) of arbitrary degree.

Degree 0 is classical intersection, degree 1 comes from the operator
formula in ogcalc.divdiff, and every higher degree is bootstrapped from the
WDVV associativity relations: for classes lam^1..lam^m (m >= 4) and degree
d, with the last four playing distinguished roles,

  sum_{d', A, mu} I_{d'}(lam^A, lam^{m-3}, lam^{m-2}, mu)
                  I_{d-d'}(lam^B, lam^{m-1}, lam^m, mu*)
  = the same sum with lam^{m-2} and lam^m exchanged,

where A runs over sub-multisets of lam^1..lam^{m-4}, B is the complement,
mu runs over the 16 basis classes, mu* is the Poincare dual, and each factor
is subject to its dimension constraint.

A fixed schedule of seventeen relation shapes (choices of the distinguished
classes) solves each unknown with exactly one new invariant per relation;
when a shape does not apply, the solver falls back to enumerating other
relation instances.
"""

from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction
from itertools import product as iproduct
from math import comb
from typing import Iterable, Iterator, Sequence

from .cohomology import BASIS, DIM, check_class, mult, poincare_dual, triple
from .divdiff import LINE_DEGREE, enumerate_line_numbers, line_invariant
from .partitions import Partition, weight

N = 5
DEGREE_C1 = 2 * (N - 1)  # first Chern class degree on lines: 8

BY_WEIGHT: dict[int, tuple[Partition, ...]] = {}
for _lam in BASIS:
    BY_WEIGHT.setdefault(weight(_lam), tuple())
for _lam in BASIS:
    BY_WEIGHT[weight(_lam)] = BY_WEIGHT[weight(_lam)] + (_lam,)

GWKey = tuple[int, tuple[Partition, ...]]


class UnderdeterminedError(RuntimeError):
    """No relation instance could isolate the requested invariant."""


class _Cycle(Exception):
    pass


def class_sort_key(lam: Partition):
    return (weight(lam), lam)


def canonical_classes(classes: Iterable) -> tuple[Partition, ...]:
    return tuple(sorted((check_class(lam) for lam in classes), key=class_sort_key))


def dimension_ok(d: int, classes: Sequence[Partition]) -> bool:
    """The dimension axiom: sum of codims = dim + (m-3) + d * deg c_1."""
    return sum(weight(lam) for lam in classes) == DIM - 3 + DEGREE_C1 * d + len(classes)


def reduce_invariant(d: int, classes: Iterable):
    """Apply the reduction axioms.  Returns (coeff, key, value).

    Either key is None and I_d(classes) = value outright, or value is None
    and I_d(classes) = coeff * I(key) with key fully reduced: degree >= 1
    and every class of weight >= 2.
    """
    if d < 0:
        raise ValueError("negative degree")
    cls = canonical_classes(classes)
    if not dimension_ok(d, cls):
        return 1, None, 0
    if d == 0:
        return (1, None, triple(*cls)) if len(cls) == 3 else (1, None, 0)
    if cls and cls[0] == ():
        return 1, None, 0  # fundamental class kills positive degrees
    ndiv = sum(1 for lam in cls if lam == (1,))
    if ndiv:
        cls = cls[ndiv:]
        return d ** ndiv, (d, cls), None
    return 1, (d, cls), None


def relation_terms(d: int, lams: Sequence[Partition]) -> Iterator[tuple[int, tuple, tuple]]:
    """Expand one associativity relation into (coeff, factor, factor) terms.

    The relation asserts sum coeff * I(factor1) * I(factor2) = 0.  Factors
    are raw (d, classes) pairs, not yet reduced.  Sub-multisets of the free
    classes are enumerated once with a multinomial multiplicity.
    """
    lams = [check_class(lam) for lam in lams]
    m = len(lams)
    if m < 4:
        raise ValueError("the relation needs at least four classes")
    if sum(weight(lam) for lam in lams) != DIM - 4 + DEGREE_C1 * d + m:
        raise ValueError("relation dimension precondition fails")
    r3, r2, r1, r0 = lams[m - 4], lams[m - 3], lams[m - 2], lams[m - 1]
    grouped = sorted(Counter(lams[: m - 4]).items())
    kinds = [lam for lam, _ in grouped]
    counts = [c for _, c in grouped]
    for kvec in iproduct(*(range(c + 1) for c in counts)):
        a = sum(kvec)
        mlt = 1
        for c, k in zip(counts, kvec):
            mlt *= comb(c, k)
        part_a: tuple[Partition, ...] = ()
        part_b: tuple[Partition, ...] = ()
        for lam, c, k in zip(kinds, counts, kvec):
            part_a += (lam,) * k
            part_b += (lam,) * (c - k)
        base = sum(weight(lam) for lam in part_a)
        for d1 in range(d + 1):
            need = DIM + DEGREE_C1 * d1 + a - base - weight(r3)
            for sign, second, fourth in ((mlt, r2, r0), (-mlt, r0, r2)):
                wmu = need - weight(second)
                if 0 <= wmu <= DIM:
                    for mu in BY_WEIGHT[wmu]:
                        yield (
                            sign,
                            (d1, part_a + (r3, second, mu)),
                            (d - d1, part_b + (fourth, r1, poincare_dual(mu))),
                        )


# the seventeen scheduled relation shapes: (pair of largest classes) ->
# (case number, class playing lam^{m-2})
CASE_SHAPES: dict[tuple[Partition, Partition], tuple[int, Partition]] = {
    ((4, 3, 2, 1), (4, 3, 2, 1)): (1, (4, 3, 2)),
    ((4, 3, 2), (4, 3, 2, 1)): (2, (4, 3, 1)),
    ((4, 3, 1), (4, 3, 2, 1)): (3, (4, 2, 1)),
    ((4, 2, 1), (4, 3, 2, 1)): (4, (3, 2, 1)),
    ((4, 3), (4, 3, 2, 1)): (5, (4, 2)),
    ((4, 2), (4, 3, 2, 1)): (6, (4, 1)),
    ((3, 2, 1), (4, 3, 2, 1)): (7, (3, 2)),
    ((4, 1), (4, 3, 2, 1)): (8, (4,)),
    ((3, 2), (4, 3, 2, 1)): (9, (3, 1)),
    ((4, 3, 2), (4, 3, 2)): (10, (4, 3, 1)),
    ((4, 3, 1), (4, 3, 2)): (11, (4, 2, 1)),
    ((4, 2, 1), (4, 3, 2)): (12, (3, 2, 1)),
    ((4, 3), (4, 3, 2)): (13, (4, 2)),
    ((4, 2), (4, 3, 2)): (14, (4, 1)),
    ((3, 2, 1), (4, 3, 2)): (15, (3, 2)),
    ((4, 3, 1), (4, 3, 1)): (16, (4, 2, 1)),
    ((4, 2, 1), (4, 3, 1)): (17, (3, 2, 1)),
}


def _remove_one(classes: tuple[Partition, ...], lam: Partition) -> tuple[Partition, ...]:
    out = list(classes)
    out.remove(lam)
    return tuple(out)


def case_pairs(classes: Sequence[Partition]) -> list[tuple[int, Partition, Partition]]:
    """All scheduled shapes applicable to the key, best (lowest) case first."""
    found = set()
    for i, a in enumerate(classes):
        for b in classes[i + 1:]:
            pair = tuple(sorted((a, b), key=class_sort_key))
            if pair in CASE_SHAPES:
                found.add((CASE_SHAPES[pair][0],) + pair)
    return sorted(found)


def _line_key_count() -> int:
    """How many keys line seeding produces (multisets with sum(w-1) = 15)."""
    ways = [1] + [0] * LINE_DEGREE
    for lam in BASIS:
        if weight(lam) < 2:
            continue
        cost = weight(lam) - 1
        for b in range(cost, LINE_DEGREE + 1):
            ways[b] += ways[b - cost]
    return ways[LINE_DEGREE]


class GWTable:
    """Store of known invariants, keyed by (degree, sorted classes).

    Conflicting writes abort: a value, once recorded, is never silently
    replaced.
    """

    def __init__(self) -> None:
        self.values: dict[GWKey, int] = {}
        self.provenance: dict[GWKey, str] = {}
        self._lines_seeded = False

    def __len__(self) -> int:
        return len(self.values)

    def __contains__(self, key: GWKey) -> bool:
        return key in self.values

    def get(self, key: GWKey):
        return self.values.get(key)

    def set(self, key: GWKey, value: int, provenance: str) -> None:
        old = self.values.get(key)
        if old is not None and old != value:
            raise AssertionError(
                f"conflicting values for {key}: had {old} ({self.provenance[key]}), "
                f"got {value} ({provenance})"
            )
        if old is None:
            self.values[key] = value
            self.provenance[key] = provenance

    def seed_lines(self, jobs: int = 1) -> None:
        """Record every degree-1 invariant via the operator formula."""
        if self._lines_seeded:
            return
        for classes, value in enumerate_line_numbers(jobs=jobs).items():
            self.set((1, classes), value, "line-formula")
        self._lines_seeded = True

    # -- persistence (line-delimited JSON) --------------------------------

    def save(self, path) -> None:
        with open(path, "w") as fh:
            for (d, classes) in sorted(self.values):
                rec = {
                    "n": N,
                    "d": d,
                    "classes": [list(lam) for lam in classes],
                    "value": str(self.values[(d, classes)]),
                    "provenance": self.provenance[(d, classes)],
                }
                fh.write(json.dumps(rec, separators=(",", ":")) + "\n")

    @classmethod
    def load(cls, path) -> "GWTable":
        table = cls()
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                if rec["n"] != N:
                    raise ValueError(f"cache record for n={rec['n']}, expected {N}")
                key = (int(rec["d"]), canonical_classes(map(tuple, rec["classes"])))
                table.set(key, int(rec["value"]), rec.get("provenance", "cache"))
        seeded = sum(1 for p in table.provenance.values() if p == "line-formula")
        if seeded >= _line_key_count():
            table._lines_seeded = True
        return table


class Solver:
    """Resolve invariants, bootstrapping unknowns through WDVV relations."""

    def __init__(self, table: GWTable | None = None, seed_lines: bool = True):
        self.table = table if table is not None else GWTable()
        if seed_lines:
            self.table.seed_lines()
        self._active: set[GWKey] = set()

    # -- public API ---------------------------------------------------------

    def value(self, d: int, classes: Iterable) -> int:
        """The invariant I_d(classes), computed by any means necessary."""
        coeff, key, val = reduce_invariant(d, classes)
        if key is None:
            return val
        return coeff * self._solve(key)

    def derivations(self, d: int, classes: Iterable, limit: int = 2, depth=None):
        """Derive a reduced key through up to `limit` distinct relation
        instances; returns [(description, value)].  Used for cross-checks.

        `depth` caps how many solve layers an instance may bootstrap through
        before its side terms must already be known; None means unbounded,
        which on keys far from the solved tables can search for a very long
        time."""
        coeff, key, val = reduce_invariant(d, classes)
        if key is None:
            raise ValueError("invariant reduces to a known value; nothing to derive")
        out = []
        for desc, lams in self._instances(key):
            try:
                v = self._try_instance(key, lams, depth)
            except (UnderdeterminedError, _Cycle):
                continue
            out.append((desc, coeff * v))
            if len(out) >= limit:
                break
        return out

    # -- solving ------------------------------------------------------------

    def _solve(self, key: GWKey, depth=None) -> int:
        got = self.table.get(key)
        if got is not None:
            return got
        d, classes = key
        if d == 1:
            val = line_invariant(classes)
            self.table.set(key, val, "line-formula")
            return val
        if depth is not None and depth <= 0:
            raise UnderdeterminedError(f"search depth exhausted at {key}")
        if key in self._active:
            raise _Cycle(key)
        self._active.add(key)
        try:
            failures = 0
            for desc, lams in self._instances(key):
                try:
                    val = self._try_instance(key, lams, depth)
                except (UnderdeterminedError, _Cycle):
                    failures += 1
                    continue
                self.table.set(key, val, desc)
                return val
            raise UnderdeterminedError(
                f"no relation instance isolates {key} ({failures} tried)"
            )
        finally:
            self._active.discard(key)

    def _try_instance(self, target: GWKey, lams: Sequence[Partition], depth=None) -> int:
        d = target[0]
        down = None if depth is None else depth - 1
        coeff_t = 0
        const = 0
        for cf, raw1, raw2 in relation_terms(d, lams):
            c1, k1, v1 = reduce_invariant(*raw1)
            c2, k2, v2 = reduce_invariant(*raw2)
            if k1 == target and k2 == target:
                raise AssertionError("target cannot appear in both factors")
            if k1 == target:
                other = v2 if k2 is None else c2 * self._solve(k2, down)
                coeff_t += cf * c1 * other
            elif k2 == target:
                other = v1 if k1 is None else c1 * self._solve(k1, down)
                coeff_t += cf * c2 * other
            else:
                if k1 is not None:
                    if v1 is None:
                        v1 = c1 * self._solve(k1, down)
                else:
                    v1 = c1 * v1
                if v1 == 0:
                    continue
                if k2 is not None:
                    v2 = c2 * self._solve(k2, down)
                else:
                    v2 = c2 * v2
                const += cf * v1 * v2
        if coeff_t == 0:
            raise UnderdeterminedError(f"target {target} absent from instance")
        val = Fraction(-const, coeff_t)
        if val.denominator != 1 or val < 0:
            raise AssertionError(f"invariant {target} solved to {val}")
        return int(val)

    # -- instance generation --------------------------------------------------

    def _instances(self, key: GWKey) -> Iterator[tuple[str, tuple[Partition, ...]]]:
        """Candidate relation instances likely to isolate the key.

        The scheduled shape for the key's two largest classes comes first
        (every distinct choice of the extra incidence class), then all other
        shapes as a fallback.
        """
        d, classes = key
        seen = set()
        for case_no, a, b in case_pairs(classes):
            c = CASE_SHAPES[(a, b)][1]
            rest = _remove_one(_remove_one(classes, b), a)
            for inst in self._shape_instances(d, a, b, c, rest):
                if inst not in seen:
                    seen.add(inst)
                    yield f"wdvv:case-{case_no}", inst
        # fallback: any pair of classes, either role order, any one-box shape
        for i in range(len(classes)):
            for j in range(len(classes)):
                if i == j:
                    continue
                amu, bslot = classes[i], classes[j]
                rest = _remove_one(_remove_one(classes, amu), bslot)
                for c in BY_WEIGHT.get(weight(amu) - 1, ()):
                    if mult((1,), c).get(amu, 0) == 0:
                        continue
                    for inst in self._shape_instances(d, amu, bslot, c, rest):
                        if inst not in seen:
                            seen.add(inst)
                            yield "wdvv:fallback", inst

    @staticmethod
    def _shape_instances(d, amu, bslot, c, rest) -> Iterator[tuple[Partition, ...]]:
        for x in sorted(set(rest), key=class_sort_key, reverse=True):
            free = _remove_one(rest, x)
            yield free + ((1,), c, x, bslot)


def enumerate_degree_keys(d: int) -> Iterator[tuple[Partition, ...]]:
    """All reduced key class-multisets at degree d (weights >= 2)."""
    budget = DIM - 3 + DEGREE_C1 * d
    classes = sorted(
        (lam for lam in BASIS if weight(lam) >= 2),
        key=class_sort_key,
        reverse=True,
    )

    def walk(idx: int, left: int, chosen: tuple[Partition, ...]):
        if left == 0:
            yield tuple(sorted(chosen, key=class_sort_key))
            return
        for j in range(idx, len(classes)):
            cost = weight(classes[j]) - 1
            if cost <= left:
                yield from walk(j, left - cost, chosen + (classes[j],))

    yield from walk(0, budget, ())


def conic_census(solver: Solver | None = None):
    """Solve every degree-2 key matching a scheduled shape.

    Returns (solved count, failed keys).  The count is the published census
    of conic numbers reachable from the seventeen shapes.
    """
    solver = solver or Solver()
    solved = 0
    failed: list[tuple[Partition, ...]] = []
    for classes in enumerate_degree_keys(2):
        if not case_pairs(classes):
            continue
        try:
            solver.value(2, classes)
            solved += 1
        except UnderdeterminedError:
            failed.append(classes)
    return solved, failed
