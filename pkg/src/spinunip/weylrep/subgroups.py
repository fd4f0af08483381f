"""Product subgroups of W_n and their class data.

A subgroup is a list of :class:`SubgroupFactor` placed on consecutive blocks
of coordinates. Each factor reports its conjugacy classes as
``(representative, size, character value)``; representatives are genuine
signed permutations, so the fused W_n class (and, inside W'_n, which half of
a split class) can be read off directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator, NamedTuple

from spinunip.partitions import Partition, partitions_of
from spinunip.weylrep.classes import ConjClassLabel, conjugacy_classes, z_sym
from spinunip.weylrep.signed import SignedPermutation, block_sum, standard_element
from spinunip.weylrep.symmetric import sym_character

CHARACTERS = ("one", "sgn", "sgnBar", "eta", "eps", "inflated")

# The two order-4 abelian subgroups of W_2 that can serve as the per-pair
# factor of H_t.  Elements are (name, signed permutation of {1, 2}).
PAIR_GROUPS: dict[str, tuple[tuple[str, SignedPermutation], ...]] = {
    # swap within the pair, and negation of the pair
    "swap": (
        ("1", SignedPermutation((1, 2))),
        ("s", SignedPermutation((2, 1))),
        ("-s", SignedPermutation((-2, -1))),
        ("-1", SignedPermutation((-1, -2))),
    ),
    # independent sign flips of the two coordinates
    "flip": (
        ("1", SignedPermutation((1, 2))),
        ("f1", SignedPermutation((-1, 2))),
        ("f2", SignedPermutation((1, -2))),
        ("-1", SignedPermutation((-1, -2))),
    ),
}


@dataclass(frozen=True)
class EtaChoice:
    """A quadratic character of H_t under a chosen embedding into W_{2t}.

    ``H_t`` is realized as ``K wr S_t`` where ``K`` is one of
    :data:`PAIR_GROUPS` acting inside each coordinate pair ``(2i-1, 2i)`` and
    ``S_t`` permutes the pairs. A linear character is a character ``phi`` of
    ``K`` (given by its values on the two non-central generators) together
    with either the trivial or the sign character of ``S_t``.
    """

    embedding: str = "swap"
    phi_a: int = -1
    phi_b: int = 1
    perm: str = "one"

    def phi(self, name: str) -> int:
        a, b, _ = (n for n, _ in PAIR_GROUPS[self.embedding][1:])
        return {"1": 1, a: self.phi_a, b: self.phi_b}.get(name, self.phi_a * self.phi_b)

    @property
    def name(self) -> str:
        a, b, c = (n for n, _ in PAIR_GROUPS[self.embedding][1:])
        sig = lambda v: "+" if v > 0 else "-"  # noqa: E731
        return (f"{self.embedding}[{a}{sig(self.phi_a)},{b}{sig(self.phi_b)},"
                f"{c}{sig(self.phi_a * self.phi_b)}]x{self.perm}")

    def to_json(self) -> dict:
        return {"embedding": self.embedding, "phi_a": self.phi_a, "phi_b": self.phi_b, "perm": self.perm}

    @classmethod
    def from_json(cls, data: dict) -> "EtaChoice":
        return cls(data["embedding"], int(data["phi_a"]), int(data["phi_b"]), data["perm"])


def all_eta_candidates() -> list[EtaChoice]:
    return [
        EtaChoice(emb, a, b, perm)
        for emb in PAIR_GROUPS
        for a in (1, -1)
        for b in (1, -1)
        for perm in ("one", "sgn")
    ]


@dataclass(frozen=True)
class SubgroupFactor:
    """One factor of a product subgroup together with a linear character.

    ``kind`` is ``"H"`` (degree ``2*size``), ``"S"``, ``"W"`` or ``"Wprime"``.
    ``eta`` selects the quadratic character of H_t; ``None`` means the
    calibrated one. ``shape``/``twisted`` are used only by the ``"inflated"``
    character (an S_b irreducible pulled back to W_b, optionally times eps).
    """

    kind: str
    size: int
    character: str = "one"
    eta: EtaChoice | None = None
    shape: Partition | None = None
    twisted: bool = False

    def __post_init__(self):
        if self.kind not in ("H", "S", "W", "Wprime"):
            raise ValueError(f"unknown subgroup kind {self.kind!r}")
        if self.character not in CHARACTERS:
            raise ValueError(f"unknown character {self.character!r}")
        if (self.character == "eta") != (self.kind == "H"):
            raise ValueError("eta lives exactly on H_t factors")
        if self.character in ("sgnBar", "eps", "inflated") and self.kind != "W":
            raise ValueError(f"{self.character} is only defined on W_b factors")
        if self.kind == "Wprime" and self.character not in ("one", "sgn"):
            raise ValueError("W'_b factors carry only restricted characters")
        if self.size < 0:
            raise ValueError("negative factor size")

    @classmethod
    def H(cls, t: int, eta: EtaChoice | None = None) -> "SubgroupFactor":
        return cls("H", t, "eta", eta=eta)

    @classmethod
    def S(cls, a: int, character: str = "one") -> "SubgroupFactor":
        return cls("S", a, character)

    @classmethod
    def W(cls, b: int, character: str = "one") -> "SubgroupFactor":
        return cls("W", b, character)

    @classmethod
    def Wprime(cls, b: int, character: str = "one") -> "SubgroupFactor":
        return cls("Wprime", b, character)

    @classmethod
    def inflated(cls, shape, twisted: bool = False) -> "SubgroupFactor":
        shape = Partition(shape)
        return cls("W", shape.size, "inflated", shape=shape, twisted=twisted)

    @property
    def degree(self) -> int:
        return 2 * self.size if self.kind == "H" else self.size

    @property
    def order(self) -> int:
        if self.kind == "H":
            return factorial(self.size) * 4**self.size
        if self.kind == "S":
            return factorial(self.size)
        full = 2**self.size * factorial(self.size)
        return full // 2 if self.kind == "Wprime" and self.size else full

    def resolved(self) -> "SubgroupFactor":
        if self.kind == "H" and self.eta is None:
            from spinunip.weylrep.calibration import current_eta

            return SubgroupFactor.H(self.size, current_eta())
        return self

    def __str__(self) -> str:
        name = {"H": "H", "S": "S", "W": "W", "Wprime": "W'"}[self.kind]
        if self.character == "inflated":
            return f"W{self.size}[{self.shape}{'*eps' if self.twisted else ''}]"
        return f"{name}{self.size}:{self.character}"


class ClassDatum(NamedTuple):
    rep: SignedPermutation
    size: int
    value: int


def _flip_first(g: SignedPermutation) -> SignedPermutation:
    f = SignedPermutation((-1,) + tuple(range(2, len(g) + 1)))
    return f.conj(g)


@cache
def factor_classes(factor: SubgroupFactor) -> tuple[ClassDatum, ...]:
    factor = factor.resolved()
    k, ch = factor.size, factor.character
    if factor.kind == "H":
        return _h_classes(k, factor.eta)
    if factor.kind == "S":
        out = []
        for rho in partitions_of(k):
            value = -1 if ch == "sgn" and (k - len(rho)) % 2 else 1
            out.append(ClassDatum(standard_element(rho, ()), factorial(k) // z_sym(rho), value))
        return tuple(out)
    out = []
    for label, size in conjugacy_classes(k):
        pos, neg = label
        if factor.kind == "Wprime" and len(neg) % 2:
            continue
        value = _w_value(factor, label)
        rep = standard_element(pos, neg)
        if factor.kind == "Wprime" and _splits(label):
            out.append(ClassDatum(rep, size // 2, value))
            out.append(ClassDatum(_flip_first(rep), size // 2, value))
        else:
            out.append(ClassDatum(rep, size, value))
    return tuple(out)


def _splits(label: ConjClassLabel) -> bool:
    pos, neg = label
    return not neg and pos.size > 0 and all(x % 2 == 0 for x in pos)


def _w_value(factor: SubgroupFactor, label: ConjClassLabel) -> int:
    pos, neg = label
    e = -1 if len(neg) % 2 else 1
    sb = -1 if (factor.size - len(pos) - len(neg)) % 2 else 1
    ch = factor.character
    if ch == "one":
        return 1
    if ch == "eps":
        return e
    if ch == "sgnBar":
        return sb
    if ch == "sgn":
        return e * sb
    cycle_type = Partition(tuple(pos) + tuple(neg))
    return sym_character(factor.shape, cycle_type) * (e if factor.twisted else 1)


def _pair_block(k: int, y: SignedPermutation) -> SignedPermutation:
    """k pairs cycled 1 -> 2 -> ... -> k -> 1, with ``y`` applied inside pair 1 first."""
    images = []
    for i in range(k):
        target = (i + 1) % k
        local = y if i == 0 else SignedPermutation((1, 2))
        for j in (1, 2):
            v = local(j)
            sign = 1 if v > 0 else -1
            images.append(sign * (2 * target + abs(v)))
    return tuple.__new__(SignedPermutation, images)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _h_classes(t: int, eta: EtaChoice) -> tuple[ClassDatum, ...]:
    pair_group = PAIR_GROUPS[eta.embedding]
    order = factorial(t) * 4**t
    out = []
    for sizes in _compositions(t, 4):
        for rhos in product(*(partitions_of(s) for s in sizes)):
            blocks, value, cent = [], 1, 1
            for (name, y), rho in zip(pair_group, rhos):
                cent *= z_sym(rho) * 4 ** len(rho)
                for kk in rho:
                    blocks.append(_pair_block(kk, y))
                    value *= eta.phi(name)
                    if eta.perm == "sgn" and kk % 2 == 0:
                        value = -value
            rep = block_sum(*blocks) if blocks else SignedPermutation.identity(0)
            out.append(ClassDatum(rep, order // cent, value))
    return tuple(out)


def h_elements(t: int, eta: EtaChoice) -> Iterator[tuple[SignedPermutation, int]]:
    """Every element of H_t with its eta value, built directly from (sigma; x)."""
    pair_group = PAIR_GROUPS[eta.embedding]
    for sigma in permutations(range(t)):
        # parity of sigma
        seen, parity = set(), 0
        for i in range(t):
            if i in seen:
                continue
            j, length = i, 0
            while j not in seen:
                seen.add(j)
                j = sigma[j]
                length += 1
            parity += length - 1
        psign = -1 if eta.perm == "sgn" and parity % 2 else 1
        for xs in product(pair_group, repeat=t):
            images = []
            value = psign
            for i, (name, x) in enumerate(xs):
                value *= eta.phi(name)
                for j in (1, 2):
                    v = x(j)
                    images.append((1 if v > 0 else -1) * (2 * sigma[i] + abs(v)))
            yield tuple.__new__(SignedPermutation, images), value


def product_classes(factors: tuple[SubgroupFactor, ...]) -> Iterator[ClassDatum]:
    """Classes of the product subgroup, factors on consecutive coordinate blocks."""
    datas = [factor_classes(f) for f in factors]
    for combo in product(*datas):
        rep = block_sum(*(c.rep for c in combo)) if combo else SignedPermutation.identity(0)
        yield ClassDatum(rep, prod(c.size for c in combo), prod(c.value for c in combo))


def subgroup_order(factors) -> int:
    return prod(f.resolved().order for f in factors)


def fused_label(g: SignedPermutation) -> ConjClassLabel:
    return ConjClassLabel(*g.cycle_type())


__all__ = [
    "ClassDatum",
    "EtaChoice",
    "PAIR_GROUPS",
    "SubgroupFactor",
    "all_eta_candidates",
    "factor_classes",
    "fused_label",
    "h_elements",
    "product_classes",
    "subgroup_order",
]
