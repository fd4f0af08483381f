"""Exact class functions on W_n and its irreducible characters."""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from typing import Callable, Iterable, Mapping, Union

from spinunip.partitions import BiPartition, Partition, bipartitions_of
from spinunip.weylrep.classes import ConjClassLabel, class_index, conjugacy_classes, order_w

Number = Union[int, Fraction]


class ClassFunction:
    """A function on the conjugacy classes of W_n with exact rational values.

    Values are stored in the order of :func:`conjugacy_classes`.
    """

    __slots__ = ("rank", "values")

    def __init__(self, rank: int, values: Iterable[Number]):
        self.rank = rank
        self.values = tuple(Fraction(v) if not isinstance(v, int) else v for v in values)
        if len(self.values) != len(conjugacy_classes(rank)):
            raise ValueError("wrong number of class values")

    @classmethod
    def from_function(cls, rank: int, fn: Callable[[ConjClassLabel], Number]) -> "ClassFunction":
        return cls(rank, [fn(label) for label, _ in conjugacy_classes(rank)])

    @classmethod
    def from_mapping(cls, rank: int, mapping: Mapping[ConjClassLabel, Number]) -> "ClassFunction":
        return cls(rank, [mapping.get(label, 0) for label, _ in conjugacy_classes(rank)])

    @classmethod
    def zero(cls, rank: int) -> "ClassFunction":
        return cls(rank, [0] * len(conjugacy_classes(rank)))

    def __getitem__(self, label) -> Number:
        return self.values[class_index(self.rank)[ConjClassLabel(*label)]]

    def as_dict(self) -> dict[ConjClassLabel, Number]:
        return {label: v for (label, _), v in zip(conjugacy_classes(self.rank), self.values)}

    @property
    def degree(self) -> Number:
        return self[(Partition([1] * self.rank), Partition())]

    def _check(self, other: "ClassFunction") -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.rank, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.rank, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.rank, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.rank, [a * other for a in self.values])

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.rank == other.rank and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.rank, self.values))

    def __repr__(self) -> str:
        return f"ClassFunction(rank={self.rank}, degree={self.degree})"


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """``(1/|W_n|) sum_g f(g) conj(g(g))``; all characters here are real."""
    f._check(g)
    total = sum(size * a * b for (_, size), a, b in zip(conjugacy_classes(f.rank), f.values, g.values))
    return Fraction(total, order_w(f.rank))


def trivial(n: int) -> ClassFunction:
    return ClassFunction.from_function(n, lambda c: 1)


def eps(n: int) -> ClassFunction:
    """The quadratic character with kernel W'_n."""
    return ClassFunction.from_function(n, lambda c: -1 if len(c.negative) % 2 else 1)


def sgn_bar(n: int) -> ClassFunction:
    """Sign of the underlying permutation."""
    return ClassFunction.from_function(n, lambda c: -1 if (n - len(c.positive) - len(c.negative)) % 2 else 1)


def sgn(n: int) -> ClassFunction:
    """The sign character of W_n as a Coxeter group (the determinant)."""
    return eps(n) * sgn_bar(n)


@cache
def irr_character(bp: BiPartition) -> ClassFunction:
    """Irreducible character labelled by ``bp = (lam, mu)``.

    ``Ind_{W_a x W_b}^{W_n}`` of (lam inflated from S_a) times (mu inflated from
    S_b, twisted by the sign-product character). ``((n), ())`` is trivial and
    ``((), (n))`` is :func:`eps`.
    """
    from spinunip.weylrep.induction import induce
    from spinunip.weylrep.subgroups import SubgroupFactor

    bp = BiPartition(*bp)
    lam, mu = bp
    return induce(
        [SubgroupFactor.inflated(lam), SubgroupFactor.inflated(mu, twisted=True)], bp.size
    )


def character_table(n: int) -> dict[BiPartition, ClassFunction]:
    return {bp: irr_character(bp) for bp in bipartitions_of(n)}


def decompose(f: ClassFunction) -> dict[BiPartition, Fraction]:
    """Multiplicities of each irreducible in ``f`` (zero entries dropped)."""
    out = {}
    for bp in bipartitions_of(f.rank):
        m = inner_product(irr_character(bp), f)
        if m:
            out[bp] = m
    return out


def multiplicity(bp: BiPartition, f: ClassFunction) -> int:
    m = inner_product(irr_character(BiPartition(*bp)), f)
    if m.denominator != 1:
        raise ArithmeticError(f"non-integral multiplicity {m} of {bp}")
    return int(m)


def tensor(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    return f * g
