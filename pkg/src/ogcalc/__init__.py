"""Exact classical and quantum Schubert calculus for OG(5,10).

Layers, bottom up: ``exact`` (rational polynomial arithmetic that refuses
floats), ``linalg`` (exact Gaussian elimination), ``partitions`` and
``schur`` (strict partitions and Schur Q/P polynomials), ``cohomology``
(the 16-class ring), ``divdiff`` (divided-difference operators and the
degree-1 invariant formula), ``quantum`` (the WDVV bootstrap for all
higher degrees), ``deformation`` (the first-order surface deformation
check), ``fixtures`` (bundled reference tables), ``cli`` (command line).
"""

from .cohomology import BASIS, DIM, POINT, mult, poincare_dual, triple
from .divdiff import enumerate_line_numbers, line_invariant
from .exact import ExactnessError, ZPoly, audit_exact, check_scalar
from .quantum import GWTable, Solver, UnderdeterminedError, conic_census

__all__ = [
    "BASIS",
    "DIM",
    "POINT",
    "ExactnessError",
    "GWTable",
    "Solver",
    "UnderdeterminedError",
    "ZPoly",
    "audit_exact",
    "check_scalar",
    "conic_census",
    "enumerate_line_numbers",
    "line_invariant",
    "mult",
    "poincare_dual",
    "triple",
]

__version__ = "0.1.0"
