"""Conjugacy classes of W_n, labelled by (positive cycles, negative cycles)."""

from __future__ import annotations

from collections import Counter
from functools import cache
from math import factorial, prod

from spinunip.partitions import Partition, partitions_of


class ConjClassLabel(tuple):
    __slots__ = ()

    def __new__(cls, positive=(), negative=()) -> "ConjClassLabel":
        return super().__new__(cls, (Partition(positive), Partition(negative)))

    @property
    def positive(self) -> Partition:
        return self[0]

    @property
    def negative(self) -> Partition:
        return self[1]

    @property
    def rank(self) -> int:
        return self[0].size + self[1].size

    def __repr__(self) -> str:
        return f"ConjClassLabel({list(self[0])}, {list(self[1])})"

    def __str__(self) -> str:
        return f"+({self[0]})-({self[1]})"


def z_sym(p: Partition) -> int:
    """Centralizer order of a permutation of cycle type ``p``."""
    return prod(k**m * factorial(m) for k, m in Counter(p).items())


def order_w(n: int) -> int:
    return 2**n * factorial(n)


def centralizer_order(label: ConjClassLabel) -> int:
    pos, neg = label
    return z_sym(pos) * z_sym(neg) * 2 ** (len(pos) + len(neg))


@cache
def conjugacy_classes(n: int) -> tuple[tuple[ConjClassLabel, int], ...]:
    """All classes of W_n with their sizes."""
    order = order_w(n)
    out = []
    for k in range(n, -1, -1):
        for pos in partitions_of(k):
            for neg in partitions_of(n - k):
                label = ConjClassLabel(pos, neg)
                out.append((label, order // centralizer_order(label)))
    return tuple(out)


@cache
def class_index(n: int) -> dict[ConjClassLabel, int]:
    return {label: i for i, (label, _) in enumerate(conjugacy_classes(n))}


def is_split_in_wprime(label: ConjClassLabel) -> bool:
    """Classes of W_n that break into two classes of W'_n: only even positive cycles."""
    pos, neg = label
    return not neg and pos.size > 0 and all(k % 2 == 0 for k in pos)
