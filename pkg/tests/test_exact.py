"""Exact polynomial ring: float rejection, ring axioms, exact division."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from ogcalc.exact import ExactnessError, ZPoly, audit_exact, check_scalar, poly_ring


def rand_poly(rng: random.Random, nvars: int = 3, nterms: int = 5, deg: int = 4) -> ZPoly:
    f = ZPoly.zero(nvars)
    for _ in range(nterms):
        exps = [rng.randrange(deg + 1) for _ in range(nvars)]
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        f = f + ZPoly.monomial(exps, c)
    return f


def rand_point(rng: random.Random, nvars: int = 3) -> list:
    return [Fraction(rng.randint(-7, 7), rng.randint(1, 4)) for _ in range(nvars)]


class TestScalarGate:
    def test_check_scalar_accepts_int(self):
        assert check_scalar(7) == 7

    def test_check_scalar_folds_integral_fraction(self):
        v = check_scalar(Fraction(6, 3))
        assert v == 2 and isinstance(v, int)

    def test_check_scalar_keeps_proper_fraction(self):
        v = check_scalar(Fraction(1, 3))
        assert v == Fraction(1, 3) and isinstance(v, Fraction)

    def test_check_scalar_rejects_float(self):
        with pytest.raises(ExactnessError):
            check_scalar(0.5)

    def test_check_scalar_folds_int_subclasses(self):
        v = check_scalar(True)
        assert v == 1 and type(v) is int

    def test_const_rejects_float(self):
        with pytest.raises(ExactnessError):
            ZPoly.const(2, 1.5)

    def test_monomial_rejects_float(self):
        with pytest.raises(ExactnessError):
            ZPoly.monomial((1, 0), 0.25)

    def test_evaluate_rejects_float_point(self):
        x, y = poly_ring(2)
        with pytest.raises(ExactnessError):
            (x + y).evaluate((0.5, 1))


class TestAudit:
    def test_passes_nested(self):
        audit_exact({"a": [1, Fraction(1, 2), (3, {4: Fraction(5)})]})

    def test_flags_buried_float(self):
        with pytest.raises(ExactnessError):
            audit_exact({"a": [1, (2, [3.0])]})

    def test_audits_polynomials(self):
        x, y = poly_ring(2)
        audit_exact([x * y + ZPoly.const(2, Fraction(1, 3))])


def test_ring_axioms_random():
    rng = random.Random(10)
    for _ in range(25):
        f, g, h = (rand_poly(rng) for _ in range(3))
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h


def test_evaluate_is_a_homomorphism():
    rng = random.Random(11)
    for _ in range(25):
        f, g = rand_poly(rng), rand_poly(rng)
        pt = rand_point(rng)
        assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)
        assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)


def test_exact_div_inverts_multiplication():
    rng = random.Random(12)
    hits = 0
    while hits < 20:
        f, g = rand_poly(rng), rand_poly(rng)
        if g.is_zero():
            continue
        assert (f * g).exact_div(g) == f
        hits += 1


def test_exact_div_rejects_nondivisor():
    x, y = poly_ring(2)
    with pytest.raises(ValueError):
        (x * x + y).exact_div(x + y)


def test_diff_product_rule():
    rng = random.Random(13)
    for _ in range(15):
        f, g = rand_poly(rng), rand_poly(rng)
        for i in range(3):
            assert (f * g).diff(i) == f.diff(i) * g + f * g.diff(i)


def test_swap_vars_involution():
    rng = random.Random(14)
    for _ in range(10):
        f = rand_poly(rng)
        assert f.swap_vars(0, 2).swap_vars(0, 2) == f


def test_signed_permute_involution():
    rng = random.Random(15)
    perm, signs = [1, 0, 2], [-1, -1, 1]
    for _ in range(10):
        f = rand_poly(rng)
        assert f.signed_permute(perm, signs).signed_permute(perm, signs) == f


def test_subs_polys_composes_with_evaluate():
    rng = random.Random(16)
    x, y = poly_ring(2)
    inner = [x + y, x * y]
    for _ in range(10):
        f = rand_poly(rng, nvars=2)
        pt = rand_point(rng, nvars=2)
        direct = f.subs_polys(inner).evaluate(pt)
        via = f.evaluate([g.evaluate(pt) for g in inner])
        assert direct == via


def test_homogeneity_and_degree():
    x, y, z = poly_ring(3)
    f = x * y + z * z
    assert f.is_homogeneous() and f.total_degree() == 2
    assert not (f + x).is_homogeneous()
    assert ZPoly.zero(3).is_zero()
