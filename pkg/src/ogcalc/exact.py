"""Sparse multivariate polynomials over exact rationals.

Coefficients are Python ``int`` or ``fractions.Fraction`` and nothing else;
constructors reject floats so that no approximate number can enter any
computation built on top of this module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Tuple

Monomial = Tuple[int, ...]
Scalar = "int | Fraction"


class ExactnessError(TypeError):
    """Raised when a non-exact scalar (e.g. float) tries to enter a polynomial."""


def check_scalar(c):
    """Validate and normalize one coefficient.

    Fractions with denominator 1 are folded to int.  Anything that is not an
    int or Fraction (floats in particular) raises ExactnessError.
    """
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):  # bool and int subclasses
        return int(c)
    raise ExactnessError(f"coefficient must be int or Fraction, got {type(c).__name__}")


def audit_exact(obj) -> None:
    """Recursively assert that obj contains only exact scalars.

    Accepts scalars, ZPoly, and containers thereof.  Used by the test suite
    as the runtime exactness audit.
    """
    if isinstance(obj, (int, Fraction)):
        return
    if isinstance(obj, ZPoly):
        for m, c in obj.terms.items():
            if not isinstance(c, (int, Fraction)):
                raise ExactnessError(f"inexact coefficient {c!r} at {m}")
        return
    if isinstance(obj, Mapping):
        for k, v in obj.items():
            audit_exact(k)
            audit_exact(v)
        return
    if isinstance(obj, (list, tuple, set, frozenset)):
        for v in obj:
            audit_exact(v)
        return
    if isinstance(obj, str) or obj is None:
        return
    raise ExactnessError(f"unexpected value in exactness audit: {obj!r}")


def _grlex_key(m: Monomial):
    return (sum(m), m)


class ZPoly:
    """A sparse polynomial in a fixed number of variables.

    terms maps exponent tuples to nonzero int/Fraction coefficients.  The
    zero polynomial has an empty terms dict.  Instances are treated as
    immutable; all operations return new polynomials.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        self.nvars = nvars
        clean: dict = {}
        if terms:
            for m, c in terms.items():
                if len(m) != nvars:
                    raise ValueError(f"monomial {m} has wrong arity for {nvars} variables")
                c = check_scalar(c)
                if c:
                    clean[tuple(m)] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "ZPoly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, c) -> "ZPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "ZPoly":
        m = [0] * nvars
        m[i] = 1
        return cls(nvars, {tuple(m): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "ZPoly":
        return cls(len(exps), {tuple(exps): c})

    # -- basic queries ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def constant_value(self):
        """The value of a constant polynomial (0 for the zero polynomial)."""
        if not self.terms:
            return 0
        ((m, c),) = self.terms.items()
        if sum(m) != 0:
            raise ValueError("polynomial is not constant")
        return c

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def coeff(self, m: Monomial):
        return self.terms.get(tuple(m), 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, object]]:
        return iter(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, ZPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ZPoly.const(self.nvars, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- arithmetic -------------------------------------------------------

    def _require_same_ring(self, other: "ZPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ZPoly.const(self.nvars, other)
        if not isinstance(other, ZPoly):
            return NotImplemented
        self._require_same_ring(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return self._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, ZPoly) else -ZPoly.const(self.nvars, other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = check_scalar(other)
            if not c0:
                return ZPoly.zero(self.nvars)
            return self._wrap({m: c * c0 for m, c in self.terms.items()})
        if not isinstance(other, ZPoly):
            return NotImplemented
        self._require_same_ring(other)
        out: dict = {}
        get = out.get
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return self._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ZPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def _wrap(self, terms: dict) -> "ZPoly":
        p = ZPoly.__new__(ZPoly)
        p.nvars = self.nvars
        p.terms = terms
        return p

    # -- calculus and substitution ----------------------------------------

    def diff(self, i: int) -> "ZPoly":
        """Partial derivative with respect to variable i."""
        out: dict = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                m2 = m[:i] + (e - 1,) + m[i + 1:]
                out[m2] = out.get(m2, 0) + e * c
        return self._wrap({m: c for m, c in out.items() if c})

    def signed_permute(self, perm: Sequence[int], signs: Sequence[int]) -> "ZPoly":
        """Substitute z_j -> signs[j] * z_{perm[j]} for every variable j."""
        out: dict = {}
        for m, c in self.terms.items():
            b = [0] * self.nvars
            s = 1
            for j, e in enumerate(m):
                if e:
                    b[perm[j]] += e
                    if signs[j] < 0 and e % 2:
                        s = -s
            mb = tuple(b)
            v = out.get(mb, 0) + s * c
            if v:
                out[mb] = v
            else:
                out.pop(mb, None)
        return self._wrap(out)

    def swap_vars(self, i: int, j: int) -> "ZPoly":
        perm = list(range(self.nvars))
        perm[i], perm[j] = j, i
        return self.signed_permute(perm, [1] * self.nvars)

    def subs_polys(self, values: Sequence["ZPoly"]) -> "ZPoly":
        """Evaluate by substituting a polynomial for every variable.

        All substituted polynomials must live in one common ring, which is
        the ring of the result.
        """
        if len(values) != self.nvars:
            raise ValueError("need one value per variable")
        tgt = values[0].nvars
        # cache powers of each value polynomial
        pows: list[dict[int, ZPoly]] = [{0: ZPoly.const(tgt, 1)} for _ in values]
        acc = ZPoly.zero(tgt)
        for m, c in self.terms.items():
            term = ZPoly.const(tgt, c)
            for j, e in enumerate(m):
                if e:
                    pj = pows[j]
                    if e not in pj:
                        pj[e] = values[j] ** e
                    term = term * pj[e]
            acc = acc + term
        return acc

    def evaluate(self, point: Sequence):
        """Evaluate at a point of exact scalars."""
        if len(point) != self.nvars:
            raise ValueError("need one value per variable")
        point = [check_scalar(v) for v in point]
        acc = 0
        for m, c in self.terms.items():
            v = c
            for j, e in enumerate(m):
                if e:
                    v = v * point[j] ** e
            acc += v
        return check_scalar(Fraction(acc))

    # -- division ----------------------------------------------------------

    def leading_term(self) -> tuple[Monomial, object]:
        """Leading term under graded-lexicographic order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=_grlex_key)
        return m, self.terms[m]

    def exact_div(self, divisor: "ZPoly") -> "ZPoly":
        """Exact quotient self / divisor.

        Leading-term elimination under graded-lex order.  Raises ValueError
        if the division leaves a remainder; exactness is an invariant of the
        callers, never silently violated.
        """
        self._require_same_ring(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        dm, dc = divisor.leading_term()
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            m = max(rem, key=_grlex_key)
            c = rem[m]
            q = tuple(a - b for a, b in zip(m, dm))
            if any(e < 0 for e in q):
                raise ValueError("polynomial division leaves a remainder")
            qc = c / dc if isinstance(c, Fraction) or isinstance(dc, Fraction) else Fraction(c, dc)
            qc = check_scalar(Fraction(qc))
            quot[q] = qc
            for m2, c2 in divisor.terms.items():
                mm = tuple(a + b for a, b in zip(q, m2))
                s = rem.get(mm, 0) - qc * c2
                if s:
                    rem[mm] = s
                else:
                    rem.pop(mm, None)
        return self._wrap(quot)

    # -- misc ----------------------------------------------------------------

    def map_coeffs(self, f) -> "ZPoly":
        return ZPoly(self.nvars, {m: f(c) for m, c in self.terms.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = [f"z{i+1}" for i in range(self.nvars)]
        parts = []
        for m in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[m]
            factors = [f"{names[j]}^{e}" if e > 1 else names[j] for j, e in enumerate(m) if e]
            body = "*".join(factors)
            if body:
                parts.append(f"{c}*{body}" if c != 1 else body)
            else:
                parts.append(str(c))
        return " + ".join(parts)


def poly_ring(nvars: int) -> list[ZPoly]:
    """The variables of a fresh nvars-variable ring."""
    return [ZPoly.variable(i, nvars) for i in range(nvars)]
