"""Closed-form counts, cell-theoretic counts and their reconciliation."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Iterable

from spinunip.coherent import cell_of, evaluate_member
from spinunip.orbits import (
    ComplexSpin,
    DualOrbit,
    GroupSpec,
    InvalidInput,
    QuaternionicSpin,
    RealSpin,
    all_rows_even_multiplicity,
    count_real_forms,
    levi_descriptor,
    parse_group,
    rank,
    validate_orbit,
)
from spinunip.partitions import is_very_even

VERIFY_DEFAULT_MAX_N = 5
VERIFY_HARD_MAX_N = 7

class VerificationError(RuntimeError):
    """The cell-theoretic count disagrees with the closed form."""


def _orbits(g: GroupSpec, o) -> tuple[DualOrbit, ...]:
    if isinstance(g, ComplexSpin):
        if not isinstance(o, tuple) or len(o) != 2:
            raise InvalidInput("a complex spin group takes a pair of orbits")
        for x in o:
            validate_orbit(x, g)
        return o
    if not isinstance(o, DualOrbit):
        raise InvalidInput("expected a single orbit")
    validate_orbit(o, g)
    return (o,)


def count_complex(m: int, pair: tuple[DualOrbit, DualOrbit]) -> int:
    _orbits(ComplexSpin(m), pair)
    return 0


def count_tilde(g: GroupSpec, o) -> int:
    """Number of genuine special unipotent representations of the double cover G~."""
    if isinstance(g, ComplexSpin):
        return count_complex(g.m, o)
    _orbits(g, o)
    if not all_rows_even_multiplicity(o):
        return 0
    if isinstance(g, RealSpin):
        if abs(g.p - g.q) == 1:
            return 1
        if g.p == g.q:
            return 1 if is_very_even(o.shape) else 2
        return 0
    if is_very_even(o.shape):
        return count_real_forms(o, g)
    return 0


def count_spin(g: GroupSpec, o) -> int:
    """Number of genuine special unipotent representations of the spin group itself."""
    if isinstance(g, ComplexSpin):
        return count_complex(g.m, o)
    _orbits(g, o)
    if not all_rows_even_multiplicity(o):
        return 0
    if isinstance(g, RealSpin):
        if abs(g.p - g.q) == 1:
            return 2
        if g.p == g.q and g.p % 2 == 0:
            return 2 if is_very_even(o.shape) else 4
        if g.p == g.q:
            return 1
        return 0
    if is_very_even(o.shape):
        return count_real_forms(o, g)
    return 0


def sgn_twist_fixed(g: GroupSpec, o) -> bool:
    if count_tilde(g, o) == 0:
        raise ValueError("no genuine special unipotent representations: twist question is vacuous")
    return not (isinstance(g, RealSpin) and g.p == g.q and g.p % 2 == 1)


def cover_is_trivial(g: GroupSpec) -> bool:
    """True when G~ equals G (pq = 0, or the quaternionic form)."""
    if isinstance(g, RealSpin):
        return g.p * g.q == 0
    return isinstance(g, QuaternionicSpin)


def clifford_consistent(g: GroupSpec, tilde: int, count_g: int, fixed: bool | None) -> bool:
    if tilde == 0:
        return count_g == 0
    if cover_is_trivial(g):
        return count_g == tilde
    if fixed:
        return count_g == 2 * tilde
    return 2 * count_g == tilde


def count_via_cells(g: GroupSpec, o: DualOrbit, max_rank: int = VERIFY_HARD_MAX_N) -> int:
    """Sum over the left cell of the multiplicities in the coherent continuation module."""
    return sum(member_evaluations(g, o, max_rank).values())


def _evaluations(g: GroupSpec, o: DualOrbit, max_rank: int):
    if not isinstance(g, (RealSpin, QuaternionicSpin)):
        raise InvalidInput("cells are attached to real and quaternionic groups")
    split, cell = cell_of(g, o)
    if max(split.nb, split.ng) > max_rank:
        raise InvalidInput(f"cell ranks ({split.nb}, {split.ng}) exceed the cutoff {max_rank}")
    return [evaluate_member(g, o, split, cell, wp) for wp in cell.members]


def member_evaluations(g: GroupSpec, o: DualOrbit, max_rank: int = VERIFY_HARD_MAX_N) -> dict:
    """Engine multiplicity per cell member; raises if any lemma disagrees with the engine."""
    out = {}
    for ev in _evaluations(g, o, max_rank):
        for lemma, (closed, engine) in ev.factors.items():
            if closed != engine:
                raise VerificationError(f"{g} {o} {sorted(ev.wp)}: {lemma} gives {closed}, engine gives {engine}")
        if ev.closed is not None and ev.closed != ev.engine:
            raise VerificationError(f"{g} {o} {sorted(ev.wp)}: lemma product {ev.closed}, engine {ev.engine}")
        out[ev.wp] = ev.engine
    return out


def n_characters(g: GroupSpec, o: DualOrbit) -> int:
    """Genuine finite-order characters of the Levi cover, up to its normalizer."""
    if isinstance(g, RealSpin) and g.p == g.q and not is_very_even(o.shape):
        return 2
    return 1


def structure_text(g: GroupSpec, o, tilde: int) -> str:
    if isinstance(g, ComplexSpin):
        return "empty: a complex spin group has no genuine special unipotent representations"
    if tilde == 0:
        return "empty"
    if isinstance(g, QuaternionicSpin):
        return f"I(χ) ≅ ⊕ π_o over the {tilde} real orbits in O"
    two = n_characters(g, o) == 2
    cover = "I(χ₁), I(χ₂) irreducible" if two else "I(χ) irreducible"
    if g.p == g.q and g.p % 2 == 1:
        rest = "I(χ)|_G irreducible, I(χ₁)|_G ≅ I(χ₂)|_G"
    elif two:
        rest = "I(χ₁)|_G = I₁(χ₁) ⊕ I₂(χ₁), I(χ₂)|_G = I₁(χ₂) ⊕ I₂(χ₂)"
    else:
        rest = "I(χ)|_G = I₁(χ) ⊕ I₂(χ)"
    return f"G~: {cover}; G: {rest}"


@dataclass
class CountReport:
    group: str
    orbit: object  # dict, or a list of two dicts for complex groups
    count_tilde: int
    count_g: int
    sgn_twist_fixed: bool | None
    verified: bool
    descriptor: dict
    cell_count: int | None = None
    timings: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        data = {
            "group": self.group,
            "orbit": self.orbit,
            "count_tilde": self.count_tilde,
            "count_g": self.count_g,
            "sgn_twist_fixed": self.sgn_twist_fixed,
            "verified": self.verified,
            "descriptor": self.descriptor,
            "timings": self.timings,
        }
        if self.cell_count is not None:
            data["cell_count"] = self.cell_count
        return data

    def render(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False, sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "CountReport":
        return cls(
            group=data["group"],
            orbit=data["orbit"],
            count_tilde=data["count_tilde"],
            count_g=data["count_g"],
            sgn_twist_fixed=data["sgn_twist_fixed"],
            verified=data["verified"],
            descriptor=data["descriptor"],
            cell_count=data.get("cell_count"),
            timings=data.get("timings", {}),
        )

    @classmethod
    def parse(cls, text: str) -> "CountReport":
        return cls.from_json(json.loads(text))

    @property
    def group_spec(self) -> GroupSpec:
        return parse_group(self.group)

    def text(self) -> str:
        orbit = self.orbit
        if isinstance(orbit, list):
            shown = " ; ".join(_orbit_text(x) for x in orbit)
        else:
            shown = _orbit_text(orbit)
        lines = [
            f"group: {self.group}",
            f"orbit: {shown}",
            f"count (cover): {self.count_tilde}",
            f"count (group): {self.count_g}",
            f"sgn twist fixed: {self.sgn_twist_fixed}",
            f"verified: {self.verified}" + (f" (cells give {self.cell_count})" if self.verified else ""),
            f"levi: {self.descriptor.get('levi')}",
            f"genuine characters: {self.descriptor.get('n_characters')}",
            f"structure: {self.descriptor.get('structure')}",
        ]
        return "\n".join(lines)


def _orbit_text(d: dict) -> str:
    shape = ",".join(str(x) for x in d["shape"]) or "0"
    return shape + (f":{d['label']}" if d.get("label") else "")


def classify(g: GroupSpec, o, verify: bool | None = None) -> CountReport:
    start = time.perf_counter()
    orbits = _orbits(g, o)
    n = rank(g)
    if verify is None:
        verify = n <= VERIFY_DEFAULT_MAX_N and not isinstance(g, ComplexSpin)
    if verify and isinstance(g, ComplexSpin):
        verify = False  # nothing to reconcile: the count is identically zero
    if verify and n > VERIFY_HARD_MAX_N:
        raise InvalidInput(f"verification is limited to rank {VERIFY_HARD_MAX_N}")
    tilde = count_tilde(g, o)
    count_g = count_spin(g, o)
    fixed = sgn_twist_fixed(g, o) if tilde else None
    if not clifford_consistent(g, tilde, count_g, fixed):
        raise AssertionError(f"Clifford pattern violated for {g} {o}")
    levi = None
    if not isinstance(g, ComplexSpin) and tilde:
        levi = levi_descriptor(o, g)
    descriptor = {
        "levi": levi,
        "n_characters": n_characters(g, o) if tilde else None,
        "structure": structure_text(g, o, tilde),
    }
    timings = {"closed_form": time.perf_counter() - start}
    cell_count = None
    if verify:
        t0 = time.perf_counter()
        cell_count = count_via_cells(g, o)
        timings["cells"] = time.perf_counter() - t0
        if cell_count != tilde:
            raise VerificationError(f"{g} {o}: cells give {cell_count}, closed form gives {tilde}")
    orbit_json = [x.to_json() for x in orbits] if isinstance(g, ComplexSpin) else orbits[0].to_json()
    return CountReport(str(g), orbit_json, tilde, count_g, fixed, bool(verify), descriptor, cell_count, timings)


def classify_many(items: Iterable[tuple[GroupSpec, object]], verify: bool | None = None, threads: int = 1):
    items = list(items)
    if threads <= 1:
        return [classify(g, o, verify) for g, o in items]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda item: classify(item[0], item[1], verify), items))
