"""The classical cohomology ring of the orthogonal Grassmannian OG(5,10).

Schubert classes tau_lam are indexed by the 16 strict partitions with parts
at most 4; codim tau_lam = |lam| and dim OG(5,10) = 10.  Products are
computed in the Schur P model: multiply P_lam P_mu, expand in the P basis,
and discard every term whose partition has a part >= 5.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import Partition, check_strict, strict_partitions, weight
from .schur import expand_in_p_basis, p_fun

DIM = 10
MAX_PART = 4

BASIS: tuple[Partition, ...] = tuple(
    sorted(
        (lam for w in range(DIM + 1) for lam in strict_partitions(w, MAX_PART)),
        key=lambda lam: (weight(lam), lam),
    )
)

POINT: Partition = (4, 3, 2, 1)


def check_class(lam) -> Partition:
    lam = check_strict(lam)
    if lam and lam[0] > MAX_PART:
        raise ValueError(f"{lam} is not a Schubert class of OG(5,10)")
    return lam


def poincare_dual(lam) -> Partition:
    """The dual basis class: complementary parts within {1,...,4}."""
    lam = check_class(lam)
    return tuple(sorted(set(range(1, MAX_PART + 1)) - set(lam), reverse=True))


@lru_cache(maxsize=None)
def mult(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """tau_lam * tau_mu expanded over the basis.  Coefficients are ints >= 0."""
    lam, mu = check_class(lam), check_class(mu)
    out: dict[Partition, int] = {}
    for nu, c in expand_in_p_basis(p_fun(lam) * p_fun(mu)).items():
        if nu and nu[0] > MAX_PART:
            continue
        if not isinstance(c, int) or c < 0:
            raise AssertionError(f"structure constant {c} at {nu} is not a natural number")
        out[nu] = c
    return out


@lru_cache(maxsize=None)
def mult_table() -> dict[tuple[Partition, Partition], dict[Partition, int]]:
    """All 16 x 16 basis products."""
    return {(a, b): mult(a, b) for a in BASIS for b in BASIS}


def triple(lam, mu, nu) -> int:
    """The classical integral of tau_lam tau_mu tau_nu over OG(5,10).

    Zero unless the codimensions sum to 10; otherwise the coefficient of the
    dual of nu in tau_lam tau_mu.
    """
    lam, mu, nu = check_class(lam), check_class(mu), check_class(nu)
    if weight(lam) + weight(mu) + weight(nu) != DIM:
        return 0
    return mult(lam, mu).get(poincare_dual(nu), 0)
