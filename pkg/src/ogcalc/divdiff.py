"""Divided-difference operators and line-degree Gromov-Witten numbers.

Works in Q[z_1..z_n].  The ordinary operators are

    d_i f = (f - s_i f) / (z_i - z_{i+1}),

s_i swapping z_i, z_{i+1}; the type-D twist

    dhat_1 f = (f - f(-z_2, -z_1, z_3, ...)) / (-z_1 - z_2)

negates and swaps the first two variables.  Both lower homogeneous degree by
exactly one.

For OG(5,10), the count of lines meeting general translates of Schubert
varieties X_lam^i is obtained by applying a fixed 15-symbol word in these
operators to prod_i dhat_1 P_{lam^i}(z_1..z_5) and reading off the constant.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .exact import ZPoly, check_scalar
from .partitions import Partition, check_strict
from .schur import schur_p_in_z

N = 5
LINE_DEGREE = N * (N - 1) // 2 - 3 + 2 * (N - 1)  # 15

HAT = 0  # word symbol for dhat_1; positive symbols are ordinary indices


def apply_d(f: ZPoly, i: int) -> ZPoly:
    """Ordinary divided difference d_i (1-indexed, 1 <= i < nvars)."""
    if not 1 <= i < f.nvars:
        raise ValueError(f"d_{i} undefined in {f.nvars} variables")
    num = f - f.swap_vars(i - 1, i)
    if num.is_zero():
        return num
    div = ZPoly.variable(i - 1, f.nvars) - ZPoly.variable(i, f.nvars)
    return num.exact_div(div)


def apply_dhat1(f: ZPoly) -> ZPoly:
    """The twisted operator dhat_1."""
    if f.nvars < 2:
        raise ValueError("dhat_1 needs at least two variables")
    perm = list(range(f.nvars))
    perm[0], perm[1] = 1, 0
    signs = [1] * f.nvars
    signs[0] = signs[1] = -1
    num = f - f.signed_permute(perm, signs)
    if num.is_zero():
        return num
    div = -ZPoly.variable(0, f.nvars) - ZPoly.variable(1, f.nvars)
    return num.exact_div(div)


def apply_symbol(f: ZPoly, sym: int) -> ZPoly:
    return apply_dhat1(f) if sym == HAT else apply_d(f, sym)


def point_word(n: int) -> tuple[int, ...]:
    """The operator word computing point incidence for lines in OG(n, 2n).

    Symbols are applied right to left.  The word length always equals
    n(n-1)/2 - 3 + 2(n-1), the degree it must collapse.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    word: list[int] = []
    if n % 2:
        word += list(range(2, n))          # d_2 .. d_{n-1}
        word.append(HAT)
        ustart = n - 3
    else:
        ustart = n - 2
    for u in range(ustart, 1, -2):
        word += list(range(2, u + 2))      # d_2 .. d_{u+1}
        word += list(range(1, u + 1))      # d_1 .. d_u
        word.append(HAT)
    word += list(range(n - 2, 0, -1))      # d_{n-2} .. d_1
    word += list(range(n - 1, 1, -1))      # d_{n-1} .. d_2
    expected = n * (n - 1) // 2 - 3 + 2 * (n - 1)
    if len(word) != expected:
        raise AssertionError(f"point word for n={n} has wrong length")
    return tuple(word)


def apply_word(f: ZPoly, word: Sequence[int]) -> ZPoly:
    """Apply a word of operators right to left, checking the degree drop."""
    for sym in reversed(word):
        before = f.total_degree()
        f = apply_symbol(f, sym)
        if f and f.total_degree() != before - 1:
            raise AssertionError("operator failed to lower degree by one")
    return f


@lru_cache(maxsize=None)
def line_factor(lam: Partition) -> ZPoly:
    """dhat_1 P_lam(z_1..z_5), the factor contributed by one incidence condition."""
    lam = check_strict(lam)
    if lam and lam[0] >= N:
        raise ValueError(f"{lam} has parts >= {N}")
    return apply_dhat1(schur_p_in_z(lam, N))


@lru_cache(maxsize=None)
def _monomials(deg: int, nvars: int = N) -> tuple[tuple[int, ...], ...]:
    out = []
    for bars in combinations_with_replacement(range(nvars), deg):
        m = [0] * nvars
        for b in bars:
            m[b] += 1
        out.append(tuple(m))
    return tuple(out)


@lru_cache(maxsize=None)
def line_functional() -> dict[tuple[int, ...], object]:
    """The point word as a linear functional on degree-15 monomials.

    Built once by transposed application of the word; evaluating a line
    number is then a dot product with the coefficients of F.
    """
    word = point_word(N)
    u: dict[tuple[int, ...], object] = {(0,) * N: 1}
    deg = 0
    for sym in word:  # left to right transposes the right-to-left action
        deg += 1
        nxt: dict[tuple[int, ...], object] = {}
        for m in _monomials(deg):
            img = apply_symbol(ZPoly.monomial(m), sym)
            acc = 0
            for m2, c2 in img.terms.items():
                v = u.get(m2)
                if v is not None:
                    acc += c2 * v
            if acc:
                nxt[m] = acc
        u = nxt
    return u


def _validate_line_classes(lams: Iterable) -> list[Partition]:
    classes = [check_strict(lam) for lam in lams]
    for lam in classes:
        if lam and lam[0] >= N:
            raise ValueError(f"{lam} has parts >= {N}")
    total = sum(sum(lam) for lam in classes)
    if total != LINE_DEGREE + len(classes):
        raise ValueError(
            f"degree-1 dimension constraint fails: sum of weights {total} != "
            f"{LINE_DEGREE} + {len(classes)}"
        )
    return classes


def line_invariant(lams: Iterable, direct: bool = False) -> int:
    """The degree-1 Gromov-Witten invariant for the given classes.

    direct=True applies the operator word step by step (and checks the
    result is constant); the default evaluates the precomposed functional.
    Both routes are exact and are cross-checked in the test suite.
    """
    classes = _validate_line_classes(lams)
    F = ZPoly.const(N, 1)
    for lam in classes:
        F = F * line_factor(lam)
    if F.is_zero():
        return 0
    if direct:
        res = apply_word(F, point_word(N))
        if not res.is_constant():
            raise AssertionError("point word did not collapse F to a constant")
        val = res.constant_value()
    else:
        u = line_functional()
        val = 0
        for m, c in F.terms.items():
            v = u.get(m)
            if v is not None:
                val += c * v
    val = check_scalar(Fraction(val))
    if not isinstance(val, int):
        raise AssertionError(f"line invariant must be an integer, got {val}")
    return val


def _contract(u: dict, f: ZPoly) -> dict:
    """The functional m -> u(f * z^m), i.e. u with one factor folded in."""
    out: dict = {}
    for m, c in u.items():
        for m2, c2 in f.terms.items():
            if all(a >= b for a, b in zip(m, m2)):
                key = tuple(a - b for a, b in zip(m, m2))
                out[key] = out.get(key, 0) + c * c2
    return {m: c for m, c in out.items() if c}


def _dot(F: ZPoly, u: dict):
    acc = 0
    for m, c in F.terms.items():
        v = u.get(m)
        if v is not None:
            acc += c * v
    return acc


_CENSUS_STATE = None


def _census_state():
    global _CENSUS_STATE
    if _CENSUS_STATE is None:
        from .cohomology import BASIS  # local import to avoid a cycle

        classes = sorted(
            (lam for lam in BASIS if sum(lam) >= 2),
            key=lambda lam: (sum(lam), lam),
            reverse=True,
        )
        u = line_functional()
        ucontr = {lam: _contract(u, line_factor(lam)) for lam in classes}
        # functionals with k copies of the weight-2 class already folded in
        two = classes[-1]
        upow = [u]
        for _ in range(LINE_DEGREE):
            upow.append(_contract(upow[-1], line_factor(two)))
        _CENSUS_STATE = (tuple(classes), ucontr, upow)
    return _CENSUS_STATE


def _census_branch(branch) -> dict[tuple[Partition, ...], int]:
    """Enumerate line numbers; branch=None for all, else one top-level class."""
    classes, ucontr, upow = _census_state()
    two = classes[-1]
    out: dict[tuple[Partition, ...], int] = {}

    def emit(chosen, val) -> None:
        val = check_scalar(Fraction(val))
        assert isinstance(val, int)
        key = tuple(sorted(chosen, key=lambda lam: (sum(lam), lam)))
        out[key] = val

    def walk(idx, budget, chosen: tuple[Partition, ...], F: ZPoly, stop=None) -> None:
        for j in range(idx, len(classes) if stop is None else stop):
            lam = classes[j]
            cost = sum(lam) - 1
            if cost == budget:
                emit(chosen + (lam,), _dot(F, ucontr[lam]))
            elif cost < budget:
                if lam == two:  # fill the rest with weight-2 classes in one step
                    emit(chosen + (two,) * budget, _dot(F, upow[budget]))
                else:
                    walk(j, budget - cost, chosen + (lam,), F * line_factor(lam))

    if branch is None:
        walk(0, LINE_DEGREE, (), ZPoly.const(N, 1))
    else:
        walk(branch, LINE_DEGREE, (), ZPoly.const(N, 1), stop=branch + 1)
    return out


def enumerate_line_numbers(jobs: int = 1) -> dict[tuple[Partition, ...], int]:
    """All line numbers with every class of weight >= 2.

    Keys are multisets of classes, sorted by (weight, parts).  Partial
    products of F are shared along the enumeration tree, and the last factor
    of each key is folded into the functional instead of multiplied out.
    With jobs > 1 the top-level branches of the tree are split across worker
    processes.
    """
    classes = _census_state()[0]
    if jobs > 1:
        from multiprocessing import Pool

        out: dict[tuple[Partition, ...], int] = {}
        with Pool(processes=min(jobs, len(classes))) as pool:
            for part in pool.map(_census_branch, range(len(classes))):
                out.update(part)
        return out
    return _census_branch(None)
