"""Partition combinatorics used throughout the package.

Partitions are tuples of weakly decreasing positive ints; strict partitions
are strictly decreasing.
"""

from __future__ import annotations

from typing import Iterator, Tuple

Partition = Tuple[int, ...]


def weight(lam: Partition) -> int:
    return sum(lam)


def is_strict(lam: Partition) -> bool:
    return all(a > b for a, b in zip(lam, lam[1:])) and all(a > 0 for a in lam)


def check_strict(lam) -> Partition:
    lam = tuple(int(a) for a in lam)
    if not is_strict(lam):
        raise ValueError(f"{lam} is not a strict partition")
    return lam


def strict_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All strict partitions of n with parts <= max_part, largest part first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in strict_partitions(n - first, first - 1):
            yield (first,) + rest


def odd_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n into odd parts <= max_part, largest part first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    start = min(n, max_part)
    if start % 2 == 0:
        start -= 1
    for first in range(start, 0, -2):
        for rest in odd_partitions(n - first, first):
            yield (first,) + rest
