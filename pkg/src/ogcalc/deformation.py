"""First-order deformation check for a marked surface fixture.

The fixture is a pointed rational curve on a surface S = {F1 = F2 = 0}
inside P^1 x P^3, cut by two forms of bidegree (1,2), together with a
hyperplane form L of bidegree (1,1) through the seven marked image points
and the 4 x 7 matrix D whose column j holds projective coordinates of the
image of the j-th marked point.

Perturb the surface to {F_m + eps L G_m = 0} (G_m linear in x, eight
coefficients g) and the point matrix to (d_kj (1 + s_j eps)) with eps
nilpotent of square zero.  Requiring the perturbed curve to lie on the
perturbed surface yields, at order eps, two binary forms of degree 13
whose coefficients are linear in the fifteen unknowns s_1..s_7, g_10..g_23.
Both forms are exactly divisible by prod_j (t - r_j u); dividing it out
leaves two sextic forms, hence 14 linear equations.  The deformation is
trivial exactly on the line g = 0, s_1 = ... = s_7 (rescaling every column
of D at once changes nothing), so the checked map is unramified at the
fixture precisely when the kernel of the system is that single line.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import ExactnessError, ZPoly, check_scalar
from .linalg import kernel_basis

NPOINTS = 7
NCOORDS = 4
SEXTIC = 6

#: column order of the linear system: the seven rescalings, then the
#: coefficients of G1 and of G2
UNKNOWNS = tuple(f"s{j}" for j in range(1, NPOINTS + 1)) + tuple(
    f"g{m}{k}" for m in (1, 2) for k in range(NCOORDS)
)

T = ZPoly.variable(0, 2)
U = ZPoly.variable(1, 2)


class FixtureError(ValueError):
    """Fixture data violating a structural invariant: bad shapes, coincident
    points, or a curve that does not actually lie on the claimed surface."""


def _rat(v):
    if isinstance(v, str):
        return check_scalar(Fraction(v))
    if isinstance(v, (int, Fraction)):
        return check_scalar(v)
    raise ExactnessError(f"rational entries must be strings or ints, got {type(v).__name__}")


def _binary_form(entries) -> ZPoly:
    f = ZPoly.zero(2)
    for et, eu, c in entries:
        f = f + ZPoly.monomial((int(et), int(eu)), _rat(c))
    return f


def _form_terms(entries) -> tuple:
    out = []
    for et, eu, ex, c in entries:
        if len(ex) != NCOORDS:
            raise FixtureError("each form term needs one exponent per coordinate")
        out.append((int(et), int(eu), tuple(int(e) for e in ex), _rat(c)))
    return tuple(out)


def _eval_form(terms, x):
    """A form's pullback along (t, u) -> (t, u, x0(t,u), .., x3(t,u))."""
    total = ZPoly.zero(2)
    for et, eu, ex, c in terms:
        f = ZPoly.monomial((et, eu), c)
        for xk, e in zip(x, ex):
            for _ in range(e):
                f = f * xk
        total = total + f
    return total


@dataclass(frozen=True)
class DeformationFixture:
    """Marked-curve-on-surface data; every coefficient an exact rational.

    points: first coordinates of the marked points [r_j, 1] on the line.
    iota:   the four sextic components of the map P^1 -> P^3.
    L, F1, F2: term lists (t-exp, u-exp, x-exps, coeff) of the hyperplane
    and the two surface equations.
    D:      4 x 7 matrix, column j = coordinates of the j-th image point.
    """

    points: tuple
    iota: tuple
    L: tuple
    F1: tuple
    F2: tuple
    D: tuple

    @classmethod
    def from_dict(cls, doc) -> "DeformationFixture":
        return cls(
            points=tuple(_rat(v) for v in doc["points"]),
            iota=tuple(_binary_form(entries) for entries in doc["iota"]),
            L=_form_terms(doc["L"]),
            F1=_form_terms(doc["F1"]),
            F2=_form_terms(doc["F2"]),
            D=tuple(tuple(_rat(v) for v in row) for row in doc["D"]),
        )

    @classmethod
    def load(cls, path) -> "DeformationFixture":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


def dual_sextic_basis(points) -> tuple:
    """Degree-six binary forms P_i with P_i(r_j, 1) = delta_ij.

    Lagrange-style: P_i is the product of (t - r_k u) over k != i, scaled by
    the inverse of its value at (r_i, 1).  Seven of them span the sextics.
    """
    pts = tuple(_rat(p) for p in points)
    if len(set(pts)) != len(pts):
        raise FixtureError("marked points must be pairwise distinct")
    basis = []
    for i, ri in enumerate(pts):
        num = ZPoly.const(2, 1)
        den = Fraction(1)
        for k, rk in enumerate(pts):
            if k != i:
                num = num * (T - U * rk)
                den *= ri - rk
        basis.append(num * (1 / den))
    return tuple(basis)


def _point_product(points) -> ZPoly:
    f = ZPoly.const(2, 1)
    for r in points:
        f = f * (T - U * r)
    return f


def _check_bidegree(name, terms, xdeg):
    for et, eu, ex, _ in terms:
        if et + eu != 1 or sum(ex) != xdeg:
            raise FixtureError(f"{name} must be homogeneous of bidegree (1, {xdeg})")


def validate(fix: DeformationFixture) -> None:
    """Check every structural invariant, raising FixtureError on the first
    violation.  Runs before any linear algebra so that transcription slips
    in the long coefficient lists fail loudly rather than corrupt the
    verdict."""
    if len(fix.points) != NPOINTS or len(set(fix.points)) != NPOINTS:
        raise FixtureError("need seven pairwise distinct marked points")
    if len(fix.iota) != NCOORDS or len(fix.D) != NCOORDS:
        raise FixtureError("need four map components and four matrix rows")
    if any(len(row) != NPOINTS for row in fix.D):
        raise FixtureError("the point matrix must have seven columns")
    for comp in fix.iota:
        if comp.is_zero() or not comp.is_homogeneous() or comp.total_degree() != SEXTIC:
            raise FixtureError("map components must be nonzero sextic forms")
    _check_bidegree("L", fix.L, 1)
    _check_bidegree("F1", fix.F1, 2)
    _check_bidegree("F2", fix.F2, 2)
    # columns of D carry the images of the marked points, projectively
    for j, r in enumerate(fix.points):
        col = [fix.D[k][j] for k in range(NCOORDS)]
        val = [comp.evaluate((r, 1)) for comp in fix.iota]
        if not any(col) or not any(val):
            raise FixtureError(f"marked point {j + 1} has no image")
        for k in range(NCOORDS):
            for l in range(k + 1, NCOORDS):
                if col[k] * val[l] != col[l] * val[k]:
                    raise FixtureError(
                        f"matrix column {j + 1} is not proportional to the image point"
                    )
    for name, terms in (("F1", fix.F1), ("F2", fix.F2)):
        if not _eval_form(terms, fix.iota).is_zero():
            raise FixtureError(f"{name} does not vanish on the curve")
    on_curve = _eval_form(fix.L, fix.iota)
    for j, r in enumerate(fix.points):
        if on_curve.evaluate((r, 1)) != 0:
            raise FixtureError(f"image of marked point {j + 1} is off the hyperplane")


class _Jet:
    """A value plus its order-eps part, the latter kept per unknown.

    Products truncate at order one, which is all a square-zero parameter
    retains."""

    __slots__ = ("val", "eps")

    def __init__(self, val: ZPoly, eps: dict | None = None):
        self.val = val
        self.eps = eps if eps is not None else {}

    def __add__(self, other: "_Jet") -> "_Jet":
        eps = dict(self.eps)
        for i, f in other.eps.items():
            eps[i] = eps[i] + f if i in eps else f
        return _Jet(self.val + other.val, eps)

    def __mul__(self, other: "_Jet") -> "_Jet":
        eps = {i: f * other.val for i, f in self.eps.items()}
        for i, f in other.eps.items():
            g = self.val * f
            eps[i] = eps[i] + g if i in eps else g
        return _Jet(self.val * other.val, eps)


@dataclass(frozen=True)
class LinearSystem:
    """The (2 * 7) x 15 system; row r is an equation, columns follow UNKNOWNS."""

    matrix: tuple
    unknowns: tuple = UNKNOWNS


def first_order_system(fix: DeformationFixture) -> LinearSystem:
    """Build the order-eps linear system of the fixture.

    Substitutes the perturbed coordinates x_k = sum_j d_kj (1 + s_j eps) P_j
    into F_m + eps L G_m, keeps the eps coefficient (the constant part
    vanishes for a valid fixture), divides each unknown's degree-13
    coefficient form by prod_j (t - r_j u), and reads off the seven sextic
    coefficients per equation.
    """
    validate(fix)
    basis = dual_sextic_basis(fix.points)
    vanishing = _point_product(fix.points)
    # the matrix columns are projective; build from the map's own point
    # images so that rescaling a column never changes the system
    images = [[comp.evaluate((r, 1)) for comp in fix.iota] for r in fix.points]
    coords = []
    for k in range(NCOORDS):
        val = ZPoly.zero(2)
        eps = {}
        for j in range(NPOINTS):
            part = basis[j] * images[j][k]
            if not part.is_zero():
                val = val + part
                eps[j] = part
        coords.append(_Jet(val, eps))
    xval = [c.val for c in coords]
    on_surface = _eval_form(fix.L, xval)
    rows = []
    for m, terms in ((1, fix.F1), (2, fix.F2)):
        acc = _Jet(ZPoly.zero(2))
        for et, eu, ex, c in terms:
            jet = _Jet(ZPoly.monomial((et, eu), c))
            for xk, e in zip(coords, ex):
                for _ in range(e):
                    jet = jet * xk
            acc = acc + jet
        if not acc.val.is_zero():  # validate() already rules this out
            raise FixtureError(f"F{m} does not vanish on the curve")
        for k in range(NCOORDS):
            i = NPOINTS + NCOORDS * (m - 1) + k
            term = on_surface * xval[k]
            acc.eps[i] = acc.eps[i] + term if i in acc.eps else term
        block = []
        for i in range(len(UNKNOWNS)):
            form = acc.eps.get(i)
            if form is None or form.is_zero():
                block.append([Fraction(0)] * (SEXTIC + 1))
                continue
            try:
                quo = form.exact_div(vanishing)
            except ValueError as exc:
                raise FixtureError(
                    "an order-eps coefficient is not divisible by the point "
                    "product; the curve does not lie on the surface"
                ) from exc
            block.append([Fraction(quo.coeff((SEXTIC - a, a))) for a in range(SEXTIC + 1)])
        for a in range(SEXTIC + 1):
            rows.append(tuple(block[i][a] for i in range(len(UNKNOWNS))))
    return LinearSystem(matrix=tuple(rows))


def trivial_direction() -> tuple:
    """The kernel vector present for every valid fixture: rescale all of D."""
    return tuple([Fraction(1)] * NPOINTS + [Fraction(0)] * (len(UNKNOWNS) - NPOINTS))


@dataclass(frozen=True)
class Verdict:
    unramified: bool
    kernel_dim: int
    kernel: tuple
    unknowns: tuple = field(default=UNKNOWNS, repr=False)


def check_unramified(fix: DeformationFixture) -> Verdict:
    """UNRAMIFIED iff the system's kernel is exactly the trivial line."""
    system = first_order_system(fix)
    kern = kernel_basis([list(row) for row in system.matrix])
    unramified = False
    if len(kern) == 1:
        v = kern[0]
        pivot = next((c for c in v if c), None)
        unramified = pivot is not None and all(
            c / pivot == t for c, t in zip(v, trivial_direction())
        )
    return Verdict(
        unramified=unramified,
        kernel_dim=len(kern),
        kernel=tuple(tuple(v) for v in kern),
    )
