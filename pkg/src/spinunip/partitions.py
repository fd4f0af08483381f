"""Young diagrams, bipartitions and the classical-type parity machinery."""

from __future__ import annotations

import re
from collections import Counter
from functools import cache
from itertools import accumulate
from typing import Iterable, Iterator

KINDS = ("B", "C", "D")


class Partition(tuple):
    """A Young diagram, stored as its weakly decreasing positive row lengths.

    Input is normalized: entries are sorted in decreasing order and zeros
    dropped, so ``Partition([1, 0, 2]) == Partition([2, 1])``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(x) for x in parts]
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        return super().__new__(cls, sorted((x for x in parts if x), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "0"

    def part(self, i: int) -> int:
        """Row ``i`` (1-based), zero past the end."""
        return self[i - 1] if 0 < i <= len(self) else 0


def transpose(p: Iterable[int]) -> Partition:
    p = Partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


def from_columns(cols: Iterable[int]) -> Partition:
    """The diagram whose i-th column has length ``cols[i]``."""
    return transpose(Partition(cols))


def row_multiplicities(p: Iterable[int]) -> dict[int, int]:
    return dict(Counter(Partition(p)))


def is_very_even(p: Iterable[int]) -> bool:
    return all(x % 2 == 0 for x in Partition(p))


def _bad_parity(kind: str) -> int:
    # parts of this parity must occur with even multiplicity
    if kind in ("B", "D"):
        return 0
    if kind == "C":
        return 1
    raise ValueError(f"unknown classical type {kind!r}")


def _size_parity_ok(n: int, kind: str) -> bool:
    return n % 2 == (1 if kind == "B" else 0)


def is_valid_nilpotent(p: Iterable[int], kind: str) -> bool:
    """Whether ``p`` is the Jordan type of a nilpotent element of type ``kind``."""
    p = Partition(p)
    bad = _bad_parity(kind)
    if not _size_parity_ok(p.size, kind):
        return False
    return all(m % 2 == 0 for v, m in Counter(p).items() if v % 2 == bad)


def collapse(p: Iterable[int], kind: str) -> Partition:
    """The largest partition of type ``kind`` dominated by ``p``."""
    p = Partition(p)
    bad = _bad_parity(kind)
    if not _size_parity_ok(p.size, kind):
        raise ValueError(f"|{p}| = {p.size} has the wrong parity for type {kind}")
    parts = list(p) + [0] * (p.size + 1)
    while True:
        mult = Counter(x for x in parts if x)
        offenders = [v for v, m in mult.items() if v % 2 == bad and m % 2]
        if not offenders:
            return Partition(parts)
        q = max(offenders)
        i = max(j for j, x in enumerate(parts) if x == q)
        parts[i] -= 1
        j = next(j for j in range(i + 1, len(parts)) if parts[j] < q - 1)
        parts[j] += 1


def dominates(a: Iterable[int], b: Iterable[int]) -> bool:
    """``a >= b`` in dominance order (sizes must agree)."""
    a, b = Partition(a), Partition(b)
    if a.size != b.size:
        return False
    length = max(len(a), len(b))
    pa = accumulate(a.part(i) for i in range(1, length + 1))
    pb = accumulate(b.part(i) for i in range(1, length + 1))
    return all(x >= y for x, y in zip(pa, pb))


@cache
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n``, in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def nilpotent_partitions(n: int, kind: str) -> Iterator[Partition]:
    for p in partitions_of(n):
        if is_valid_nilpotent(p, kind):
            yield p


class BiPartition(tuple):
    """An ordered pair of Young diagrams ``(left, right)``."""

    __slots__ = ()

    def __new__(cls, left: Iterable[int] = (), right: Iterable[int] = ()) -> "BiPartition":
        return super().__new__(cls, (Partition(left), Partition(right)))

    @property
    def left(self) -> Partition:
        return self[0]

    @property
    def right(self) -> Partition:
        return self[1]

    @property
    def size(self) -> int:
        return self[0].size + self[1].size

    def swap(self) -> "BiPartition":
        return BiPartition(self[1], self[0])

    def __repr__(self) -> str:
        return f"BiPartition({list(self[0])}, {list(self[1])})"

    def __str__(self) -> str:
        return f"[{self[0]}]x[{self[1]}]"


@cache
def bipartitions_of(n: int) -> tuple[BiPartition, ...]:
    return tuple(
        BiPartition(a, b)
        for k in range(n, -1, -1)
        for a in partitions_of(k)
        for b in partitions_of(n - k)
    )


class LabeledPair:
    """An unordered pair of diagrams, labelled I or II exactly when the two agree.

    These parametrize the irreducible representations of the determinant-one
    subgroup of the hyperoctahedral group.
    """

    __slots__ = ("first", "second", "label")

    def __init__(self, a: Iterable[int], b: Iterable[int], label: str | None = None):
        a, b = Partition(a), Partition(b)
        if (a == b) != (label is not None):
            raise ValueError("a label is required exactly when the two diagrams agree")
        if label not in (None, "I", "II"):
            raise ValueError(f"label must be I or II, got {label!r}")
        self.first, self.second = max(a, b), min(a, b)
        self.label = label

    @property
    def size(self) -> int:
        return self.first.size + self.second.size

    @property
    def is_degenerate(self) -> bool:
        return self.label is not None

    def as_bipartition(self) -> BiPartition:
        return BiPartition(self.first, self.second)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledPair):
            return NotImplemented
        return (self.first, self.second, self.label) == (other.first, other.second, other.label)

    def __hash__(self) -> int:
        return hash((self.first, self.second, self.label))

    def __repr__(self) -> str:
        extra = f", label={self.label!r}" if self.label else ""
        return f"LabeledPair({list(self.first)}, {list(self.second)}{extra})"

    def __str__(self) -> str:
        tail = f"_{self.label}" if self.label else ""
        return f"{{[{self.first}],[{self.second}]}}{tail}"


_COL_RE = re.compile(r"^\s*col\s*\[(.*)\]\s*$", re.IGNORECASE)


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2,2"``, ``"4 2 2"``, ``"1^4"`` or ``"col[2,1]"``; ``""``/``"0"`` is empty."""
    text = text.strip()
    m = _COL_RE.match(text)
    if m:
        return from_columns(_parse_parts(m.group(1)))
    return Partition(_parse_parts(text))


def _parse_parts(text: str) -> list[int]:
    text = text.strip().strip("()[]")
    out: list[int] = []
    for tok in re.split(r"[,\s]+", text):
        if not tok:
            continue
        if "^" in tok:
            base, exp = tok.split("^")
            out.extend([int(base)] * int(exp))
        else:
            out.append(int(tok))
    return out
