"""Groups, dual orbits, the orbit duality and the row data behind the cells."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Union

from spinunip.partitions import (
    Partition,
    collapse,
    is_valid_nilpotent,
    is_very_even,
    nilpotent_partitions,
    parse_partition,
    row_multiplicities,
    transpose,
)

LABELS = ("I", "II")


class InvalidInput(ValueError):
    """Malformed or inconsistent group/orbit data."""


@dataclass(frozen=True)
class RealSpin:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise InvalidInput("p and q must be non-negative")
        _check_m(self.p + self.q)

    @property
    def m(self) -> int:
        return self.p + self.q

    def __str__(self) -> str:
        return f"Spin({self.p},{self.q})"


@dataclass(frozen=True)
class QuaternionicSpin:
    """Spin*(2n); ``n`` is the rank."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput("Spin*(2n) needs n >= 1")
        _check_m(2 * self.n)

    @property
    def m(self) -> int:
        return 2 * self.n

    def __str__(self) -> str:
        return f"Spin*({2 * self.n})"


@dataclass(frozen=True)
class ComplexSpin:
    m_: int

    def __post_init__(self):
        _check_m(self.m_)

    @property
    def m(self) -> int:
        return self.m_

    def __str__(self) -> str:
        return f"SpinC({self.m_})"


GroupSpec = Union[RealSpin, QuaternionicSpin, ComplexSpin]


def _check_m(m: int) -> None:
    if m == 2:
        raise InvalidInput("m = 2 (rank one torus) is not supported")
    if m < 3:
        raise InvalidInput(f"m = {m} is below the supported minimum 3")


def rank(g: GroupSpec) -> int:
    return g.m // 2


_GROUP_RE = re.compile(r"^\s*(Spin\*|SpinC|Spin)\s*\(\s*([0-9\s,]+)\)\s*$")


def parse_group(text: str) -> GroupSpec:
    """``Spin(p,q)``, ``Spin*(2n)`` or ``SpinC(m)``."""
    match = _GROUP_RE.match(text)
    if not match:
        raise InvalidInput(f"cannot parse group {text!r}")
    name, args = match.group(1), [a.strip() for a in match.group(2).split(",")]
    try:
        values = [int(a) for a in args]
    except ValueError:
        raise InvalidInput(f"bad group arguments in {text!r}") from None
    if name == "Spin":
        if len(values) != 2:
            raise InvalidInput("Spin(p,q) takes two arguments")
        return RealSpin(*values)
    if len(values) != 1:
        raise InvalidInput(f"{name}(...) takes one argument")
    if name == "Spin*":
        if values[0] % 2:
            raise InvalidInput("Spin*(2n) needs an even argument")
        return QuaternionicSpin(values[0] // 2)
    return ComplexSpin(values[0])


@dataclass(frozen=True)
class DualOrbit:
    shape: Partition
    label: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "shape", Partition(self.shape))
        if self.label is not None and self.label not in LABELS:
            raise InvalidInput(f"label must be I or II, got {self.label!r}")

    def __str__(self) -> str:
        return str(self.shape) + (f":{self.label}" if self.label else "")

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "label": self.label}

    @classmethod
    def from_json(cls, data: dict) -> "DualOrbit":
        return cls(Partition(data["shape"]), data.get("label"))


def parse_orbit(text: str) -> DualOrbit:
    """``4,2,2`` with an optional ``:I`` / ``:II`` suffix."""
    text = text.strip()
    label = None
    if ":" in text:
        text, label = (s.strip() for s in text.rsplit(":", 1))
    try:
        shape = parse_partition(text)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    return DualOrbit(shape, label or None)


def dual_group(g: GroupSpec) -> dict:
    """Type and partition size of the dual Lie algebra (of each factor, for SpinC)."""
    if g.m % 2:
        return {"type": "C", "size": g.m - 1}
    return {"type": "D", "size": g.m}


def validate_orbit(o: DualOrbit, g: GroupSpec) -> None:
    dual = dual_group(g)
    if o.shape.size != dual["size"]:
        raise InvalidInput(f"{o} has size {o.shape.size}, expected {dual['size']}")
    if not is_valid_nilpotent(o.shape, dual["type"]):
        raise InvalidInput(f"{o.shape} is not a nilpotent orbit of type {dual['type']}")
    needs_label = dual["type"] == "D" and is_very_even(o.shape)
    if needs_label and o.label is None:
        raise InvalidInput(f"very even orbit {o.shape} needs a label I or II")
    if not needs_label and o.label is not None:
        raise InvalidInput(f"orbit {o.shape} does not carry a label")


def bv_dual(o: DualOrbit, g: GroupSpec) -> Partition:
    validate_orbit(o, g)
    if g.m % 2:
        return collapse(transpose(tuple(o.shape) + (1,)), "B")
    return collapse(transpose(o.shape), "D")


def all_rows_even_multiplicity(o: DualOrbit) -> bool:
    return all(v % 2 == 0 for v in row_multiplicities(o.shape).values())


def relevance(o: DualOrbit, g: GroupSpec) -> bool:
    if not isinstance(g, QuaternionicSpin) or not is_very_even(o.shape):
        raise InvalidInput("relevance is defined for very even orbits of Spin*(2n)")
    validate_orbit(o, g)
    return o.label == "I"


@dataclass(frozen=True)
class RowSplit:
    l: int  # noqa: E741
    k: int
    r_prime: tuple[int, ...]
    r_double_prime: tuple[int, ...]
    nb: int
    ng: int
    parity: str  # "odd" or "even"

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "k": self.k,
            "r_prime": list(self.r_prime),
            "r_double_prime": list(self.r_double_prime),
            "nb": self.nb,
            "ng": self.ng,
            "parity": self.parity,
        }


def row_split(o: DualOrbit, g: GroupSpec) -> RowSplit:
    validate_orbit(o, g)
    rows = list(o.shape)
    odd_case = g.m % 2 == 1
    # pad so that the first vanishing row sits at an even (odd case) or odd
    # (even case) position; the rows before it make up 2N entries
    if odd_case:
        rows += [0] if len(rows) % 2 else [0, 0]
    elif not rows:
        rows += [0, 0]
    paired = [x for x in rows if x % 2 == (1 if odd_case else 0)]
    single = [x for x in rows if x % 2 == (0 if odd_case else 1)]
    if len(paired) % 2 or any(paired[i] != paired[i + 1] for i in range(0, len(paired), 2)):
        raise InvalidInput(f"rows of {o.shape} do not pair up as expected")
    if odd_case:
        r_prime = tuple((x - 1) // 2 for x in paired[::2])
        r_dd = tuple(x // 2 for x in single)
        nb = len(r_prime) + 2 * sum(r_prime)
        ng = sum(r_dd)
    else:
        r_prime = tuple(x // 2 for x in paired[::2])
        r_dd = tuple((x - 1) // 2 for x in single)
        nb = 2 * sum(r_prime)
        ng = len(r_dd) // 2 + sum(r_dd)
    if len(r_dd) % 2:
        raise InvalidInput(f"odd number of unpaired rows in {o.shape}")
    split = RowSplit(len(r_prime), len(r_dd) // 2, r_prime, r_dd, nb, ng, "odd" if odd_case else "even")
    if nb + ng != rank(g):
        raise AssertionError(f"row split of {o.shape} gives nb+ng={nb + ng} != {rank(g)}")
    return split


def infinitesimal_character(o: DualOrbit, g: GroupSpec) -> tuple[Fraction, ...]:
    """The ``n`` largest entries of the union of the row strings ``(r-1)/2, ..., -(r-1)/2``."""
    validate_orbit(o, g)
    entries = []
    for r in o.shape:
        entries += [Fraction(r - 1 - 2 * j, 2) for j in range(r)]
    entries.sort(reverse=True)
    coords = tuple(entries[: rank(g)])
    assert all(c >= 0 for c in coords)
    return coords


def count_real_forms(o: DualOrbit, g: GroupSpec) -> int:
    """Product formula for the number of real forms of the dual orbit, or 0 if not relevant."""
    if not isinstance(g, QuaternionicSpin) or not is_very_even(o.shape):
        raise InvalidInput("count_real_forms needs a very even orbit of Spin*(2n)")
    if not relevance(o, g):
        return 0
    rp = list(row_split(o, g).r_prime) + [0]
    total = 1
    for i in range(len(rp) - 1):
        total *= rp[i] - rp[i + 1] + 1
    return total


def levi_descriptor(o: DualOrbit, g: GroupSpec) -> str:
    validate_orbit(o, g)
    if not all_rows_even_multiplicity(o):
        raise InvalidInput(f"{o.shape} has a row length of odd multiplicity")
    pairs = list(o.shape)[::2]
    if isinstance(g, QuaternionicSpin):
        if any(r % 2 for r in pairs):
            raise InvalidInput("quaternionic Levi needs even row lengths")
        return " × ".join(f"GL_{r // 2}(H)" for r in pairs)
    if isinstance(g, RealSpin):
        return " × ".join(f"GL_{r}(R)" for r in pairs)
    raise InvalidInput("no Levi descriptor for complex groups")


def orbits_of(g: GroupSpec) -> Iterator[DualOrbit]:
    """Every valid dual orbit, in decreasing lexicographic order, label I before II.

    For :class:`ComplexSpin` the items are pairs of orbits.
    """
    dual = dual_group(g)
    single = []
    for shape in nilpotent_partitions(dual["size"], dual["type"]):
        if dual["type"] == "D" and is_very_even(shape):
            single += [DualOrbit(shape, lab) for lab in LABELS]
        else:
            single.append(DualOrbit(shape))
    if isinstance(g, ComplexSpin):
        yield from product(single, repeat=2)  # type: ignore[misc]
    else:
        yield from single


def group_families(m: int) -> list[GroupSpec]:
    """All real and quaternionic spin groups with the given ``m``."""
    groups: list[GroupSpec] = [RealSpin(p, m - p) for p in range(m, -1, -1)]
    if m % 2 == 0:
        groups.append(QuaternionicSpin(m // 2))
    return groups
