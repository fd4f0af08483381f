"""Signed permutations: elements of the hyperoctahedral group W_n."""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterator, Sequence

from spinunip.partitions import Partition


class SignedPermutation(tuple):
    """``w[i] = s * (j + 1)`` encodes ``w(e_{i+1}) = s * e_{j+1}`` with ``s = +-1``."""

    __slots__ = ()

    def __new__(cls, images: Sequence[int]) -> "SignedPermutation":
        images = tuple(int(x) for x in images)
        if sorted(abs(x) for x in images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a signed permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def from_perm_signs(cls, perm: Sequence[int], signs: Sequence[int]) -> "SignedPermutation":
        """``perm`` is 0-based one-line notation; ``signs[i]`` multiplies the image of ``e_i``."""
        return cls(s * (p + 1) for p, s in zip(perm, signs))

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return super().__new__(cls, range(1, n + 1))

    @property
    def rank(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        """Image of the signed index ``i`` (``+-1..+-n``)."""
        v = self[abs(i) - 1]
        return v if i > 0 else -v

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":  # type: ignore[override]
        # (self * other)(e) = self(other(e))
        return tuple.__new__(SignedPermutation, (self(x) for x in other))

    def inverse(self) -> "SignedPermutation":
        out = [0] * len(self)
        for i, v in enumerate(self, start=1):
            out[abs(v) - 1] = i if v > 0 else -i
        return tuple.__new__(SignedPermutation, out)

    def conj(self, g: "SignedPermutation") -> "SignedPermutation":
        """``self * g * self^{-1}``."""
        return self * g * self.inverse()

    @property
    def perm(self) -> tuple[int, ...]:
        return tuple(abs(v) - 1 for v in self)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if v > 0 else -1 for v in self)

    def sign_product(self) -> int:
        """The character with kernel ``W'_n`` (product of the sign entries)."""
        return -1 if sum(v < 0 for v in self) % 2 else 1

    def in_wprime(self) -> bool:
        return self.sign_product() == 1

    def perm_sign(self) -> int:
        """Sign of the underlying permutation."""
        pos, neg = self.cycle_type()
        return -1 if (len(self) - len(pos) - len(neg)) % 2 else 1

    def cycles(self) -> list[tuple[int, ...]]:
        """Signed cycles: each starts at a positive index and follows ``w``."""
        seen = set()
        out = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while abs(x) != start:
                cyc.append(x)
                seen.add(abs(x))
                x = self(x)
            out.append((tuple(cyc), 1 if x == start else -1))
        return out

    def cycle_type(self) -> tuple[Partition, Partition]:
        """``(positive cycle lengths, negative cycle lengths)``."""
        pos, neg = [], []
        for cyc, sign in self.cycles():
            (pos if sign > 0 else neg).append(len(cyc))
        return Partition(pos), Partition(neg)


def hyperoctahedral_elements(n: int, *, wprime: bool = False) -> Iterator[SignedPermutation]:
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            if wprime and signs.count(-1) % 2:
                continue
            yield tuple.__new__(SignedPermutation, (s * (p + 1) for p, s in zip(perm, signs)))


def block_sum(*blocks: SignedPermutation) -> SignedPermutation:
    """Direct sum: each block acts on the next consecutive run of coordinates."""
    out: list[int] = []
    offset = 0
    for b in blocks:
        out.extend(v + offset if v > 0 else v - offset for v in b)
        offset += len(b)
    return tuple.__new__(SignedPermutation, out)


def standard_element(pos: Sequence[int], neg: Sequence[int]) -> SignedPermutation:
    """A representative of the class with the given positive/negative cycle lengths.

    Cycles occupy consecutive coordinates; a negative cycle carries its single
    minus sign on the wrap-around step.
    """
    blocks = []
    for length, sign in [(k, 1) for k in pos] + [(k, -1) for k in neg]:
        images = list(range(2, length + 1)) + [sign]
        blocks.append(tuple.__new__(SignedPermutation, images))
    return block_sum(*blocks) if blocks else SignedPermutation.identity(0)
