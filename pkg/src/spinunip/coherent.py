"""Coherent continuation modules, primitive pairs and the left cells.

Modules are formal sums of induced characters (:class:`InducedSum`).  Every
multiplicity is available two ways: from the closed-form lemma values
(:func:`closed_form_multiplicity`) and from exact character theory
(:func:`engine_multiplicity`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Union

from spinunip.orbits import DualOrbit, GroupSpec, QuaternionicSpin, RealSpin, RowSplit, row_split
from spinunip.partitions import BiPartition, LabeledPair, from_columns
from spinunip.weylrep.characters import ClassFunction, multiplicity
from spinunip.weylrep.induction import induce
from spinunip.weylrep.subgroups import SubgroupFactor
from spinunip.weylrep.wprime import induced_multiplicity, restricted_multiplicity

Rep = Union[BiPartition, LabeledPair]
PrimitivePair = tuple[int, int]


@dataclass(frozen=True)
class InducedSum:
    """``sum coeff * Ind_H^{G} psi`` with ``G = W_n`` or ``W'_n`` (``target``)."""

    rank: int
    terms: tuple[tuple[tuple[SubgroupFactor, ...], int], ...]
    target: str = "W"

    def __post_init__(self):
        if self.target not in ("W", "Wprime"):
            raise ValueError(f"unknown target {self.target!r}")
        for factors, coeff in self.terms:
            if sum(f.degree for f in factors) != self.rank:
                raise ValueError("term degrees do not add up to the rank")
            if coeff <= 0:
                raise ValueError("coefficients are positive")

    def realize(self) -> ClassFunction:
        """Character on W_n; for a W'_n target this is the character induced up to W_n."""
        total = ClassFunction.zero(self.rank)
        for factors, coeff in self.terms:
            total = total + induce(factors, self.rank) * coeff
        return total

    def __str__(self) -> str:
        group = "W" if self.target == "W" else "W'"
        parts = []
        for factors, coeff in self.terms:
            inner = " x ".join(str(f) for f in factors) or "1"
            parts.append(("" if coeff == 1 else f"{coeff}*") + f"Ind[{inner}]")
        return f"{group}{self.rank}: " + (" + ".join(parts) if parts else "0")


# Under the literal W'_c reading the even tau_b lemma fails already for
# Spin(2,2) and (2,2): Ind_{W'_1 x W_1}^{W_2} 1 contains ((1),(1)).
C_FACTOR_DEFAULT = "W"


def _term(*factors: SubgroupFactor) -> tuple[SubgroupFactor, ...]:
    return tuple(f for f in factors if f.size)


def build_Cb(star: str, n: int) -> InducedSum:
    if n < 0:
        raise ValueError("negative rank")
    terms = []
    if star == "B":
        for t in range(n // 2 + 1):
            for c in range(n - 2 * t, -1, -1):
                d = n - 2 * t - c
                terms.append((_term(SubgroupFactor.H(t), SubgroupFactor.W(c), SubgroupFactor.W(d)), 1))
        return InducedSum(n, tuple(terms))
    if star == "D":
        for t in range(n // 2 + 1):
            terms.append((_term(SubgroupFactor.H(t), SubgroupFactor.S(n - 2 * t)), 1))
        return InducedSum(n, tuple(terms))
    if star == "Dstar":
        if n % 2:
            raise ValueError("the D* module needs an even rank")
        return InducedSum(n, ((_term(SubgroupFactor.H(n // 2)), 1),), "Wprime")
    raise ValueError(f"unknown type {star!r}")


def build_Cg(p: int, q: int, c_factor: str = C_FACTOR_DEFAULT) -> InducedSum:
    """The module attached to the good-parity part.

    ``c_factor`` selects how the ``c`` block of the even branch is realized:
    ``"W"`` is W_c with the trivial character (so the block only feeds the
    left diagram, which is what the even tau_b lemma needs), ``"Wprime"`` is
    the literal trivial character of W'_c.  See :data:`C_FACTOR_DEFAULT`.
    """
    if c_factor not in ("W", "Wprime"):
        raise ValueError(f"unknown c_factor {c_factor!r}")
    if p < 0 or q < 0:
        raise ValueError("p and q must be non-negative")
    terms = []
    if (p + q) % 2:
        n = (p + q - 1) // 2
        for t in range(n // 2 + 1):
            for a in range(n - 2 * t + 1):
                for r in range(n - 2 * t - a + 1):
                    s = n - 2 * t - a - r
                    if 0 <= p - (2 * t + a + 2 * r) <= 1 and 0 <= q - (2 * t + a + 2 * s) <= 1:
                        terms.append((_term(
                            SubgroupFactor.H(t), SubgroupFactor.S(a),
                            SubgroupFactor.W(s, "sgn"), SubgroupFactor.W(r, "sgn"),
                        ), 1))
        return InducedSum(n, tuple(terms))
    n = (p + q) // 2
    for t in range(n // 2 + 1):
        for r in range(n + 1):
            s = r + (q - p) // 2
            rest = p - 2 * t - 2 * r
            if s < 0 or rest < 0 or (q - p) % 2:
                continue
            for c in range(rest, -1, -1):
                d = rest - c
                terms.append((_term(
                    SubgroupFactor.H(t), SubgroupFactor.W(s, "sgnBar"), SubgroupFactor.W(r, "sgnBar"),
                    SubgroupFactor(c_factor, c), SubgroupFactor.W(d),
                ), 1))
    return InducedSum(n, tuple(terms))


def build_CgDstar(n: int) -> InducedSum:
    if n < 0:
        raise ValueError("negative rank")
    terms = tuple(
        (_term(SubgroupFactor.H(t), SubgroupFactor.S(n - 2 * t, "sgn")), 1) for t in range(n // 2 + 1)
    )
    return InducedSum(n, terms, "Wprime")


def engine_multiplicity(rep: Rep, module: InducedSum) -> int:
    """Multiplicity of an irreducible of W_n (bipartition) or W'_n (labelled pair)."""
    if isinstance(rep, BiPartition):
        if module.target != "W":
            raise ValueError("a W_n irreducible cannot be paired with a W'_n module")
        return multiplicity(rep, module.realize()) if module.terms else 0
    if not module.terms:
        return 0
    if module.target == "W":
        return restricted_multiplicity(rep, module.realize())
    return induced_multiplicity(rep, module.terms)


# --- cells ------------------------------------------------------------------


def primitive_pairs(split: RowSplit) -> tuple[PrimitivePair, ...]:
    rdd = (0,) + split.r_double_prime  # 1-based
    out = []
    for i in range(1, split.k):
        if rdd[2 * i] > rdd[2 * i + 1] and (split.parity == "odd" or rdd[2 * i + 1] > 0):
            out.append((2 * i, 2 * i + 1))
    return tuple(out)


@dataclass(frozen=True)
class Cell:
    taub: Rep
    pp: tuple[PrimitivePair, ...]
    members: dict = field(hash=False)
    columns: dict = field(hash=False)
    parity: str

    def to_json(self) -> dict:
        return {
            "parity": self.parity,
            "primitive_pairs": [list(x) for x in self.pp],
            "tau_b": _rep_json(self.taub),
            "members": [
                {"wp": [list(x) for x in sorted(wp)], "tau": _rep_json(tau),
                 "left_columns": list(self.columns[wp][0]), "right_columns": list(self.columns[wp][1])}
                for wp, tau in self.members.items()
            ],
        }


def _rep_json(rep: Rep) -> dict:
    if isinstance(rep, BiPartition):
        return {"left": list(rep.left), "right": list(rep.right)}
    return {"pair": [list(rep.first), list(rep.second)], "label": rep.label}


def _monotone(cols: list[int]) -> bool:
    return all(cols[i] >= cols[i + 1] for i in range(len(cols) - 1))


def cell_columns(split: RowSplit, wp: Iterable[PrimitivePair]) -> tuple[list[int], list[int]]:
    """Left and right column lengths of the cell member attached to ``wp``."""
    wp = set(wp)
    k = split.k
    if k == 0:
        return [], []
    rdd = (0,) + split.r_double_prime
    left, right = [0] * (k + 1), [0] * (k + 1)  # 1-based
    if split.parity == "odd":
        right[1] = rdd[1]
        left[k] = rdd[2 * k]
        for i in range(1, k):
            if (2 * i, 2 * i + 1) in wp:
                left[i], right[i + 1] = rdd[2 * i + 1], rdd[2 * i]
            else:
                left[i], right[i + 1] = rdd[2 * i], rdd[2 * i + 1]
    else:
        left[1] = rdd[1] + 1
        right[k] = rdd[2 * k]
        for i in range(1, k):
            if (2 * i, 2 * i + 1) in wp:
                left[i + 1], right[i] = rdd[2 * i] + 1, rdd[2 * i + 1]
            else:
                left[i + 1], right[i] = rdd[2 * i + 1] + 1, rdd[2 * i]
    return left[1:], right[1:]


def build_cell(split: RowSplit, orbit_label: str | None = None) -> Cell:
    """The left cell ``{tau_b (x) tau_wp}``.

    In the even case the label of ``tau_b`` is the orbit's label; an
    unlabelled orbit gets ``I``, which never changes a count (see counting).
    """
    rp = list(split.r_prime)
    if split.parity == "odd":
        taub: Rep = BiPartition(from_columns([x + 1 for x in rp]), from_columns(rp))
    else:
        col = from_columns(rp)
        taub = LabeledPair(col, col, orbit_label or "I")
    if taub.size != split.nb:
        raise AssertionError(f"tau_b has size {taub.size}, expected {split.nb}")
    pp = primitive_pairs(split)
    members, columns = {}, {}
    for size in range(len(pp) + 1):
        for chosen in combinations(pp, size):
            wp = frozenset(chosen)
            left, right = cell_columns(split, wp)
            if not (_monotone(left) and _monotone(right)):
                raise ValueError(f"non-monotone columns {left} / {right} for {sorted(wp)}")
            if split.parity == "even" and any(a <= b for a, b in zip(left, right)):
                raise AssertionError(f"strictness l > r fails for {left} / {right}")
            a, b = from_columns(left), from_columns(right)
            if split.parity == "odd":
                tau: Rep = BiPartition(a, b)
            else:
                tau = LabeledPair(a, b, "I" if a == b else None)
            if tau.size != split.ng:
                raise AssertionError(f"tau_wp has size {tau.size}, expected {split.ng}")
            members[wp] = tau
            columns[wp] = (tuple(left), tuple(right))
    if len(members) != 2 ** len(pp) or len(set(members.values())) != len(members):
        raise AssertionError("cell members are not distinct")
    return Cell(taub, pp, members, columns, split.parity)


# --- the six lemmas ------------------------------------------------------------

LEMMAS = ("odd_taub", "odd_tauwp", "even_taub", "even_tauwp", "dstar_ng_nonzero", "dstar_taub")


def _rows_from_split(split: RowSplit) -> list[int]:
    if split.parity == "odd":
        rows = [2 * x + 1 for x in split.r_prime for _ in (0, 1)] + [2 * x for x in split.r_double_prime]
    else:
        rows = [2 * x for x in split.r_prime for _ in (0, 1)] + [2 * x + 1 for x in split.r_double_prime]
    return sorted(rows, reverse=True)


def _pairs_consecutive(values: list[int]) -> bool:
    values = list(values) + ([0] if len(values) % 2 else [])
    return all(values[i] == values[i + 1] for i in range(0, len(values), 2))


def closed_form_multiplicity(
    which: str,
    split: RowSplit,
    p: int | None = None,
    q: int | None = None,
    wp: Iterable[PrimitivePair] = (),
    label: str | None = None,
) -> int:
    """Value of one of the six multiplicity lemmas."""
    wp = frozenset(wp)
    expected = {"odd_taub": "odd", "odd_tauwp": "odd"}.get(which, "even")
    if which not in LEMMAS:
        raise ValueError(f"unknown lemma {which!r}")
    if split.parity != expected:
        raise ValueError(f"{which} does not apply to the {split.parity} case")
    if which == "odd_taub":
        return 1 if abs(p - q) == 1 else 0
    if which == "odd_tauwp":
        return 1 if not wp and _pairs_consecutive(_rows_from_split(split)) else 0
    if which == "even_taub":
        return 1 if p == q else 0
    if which == "even_tauwp":
        if split.ng == 0:
            raise ValueError("the even tau_wp lemma needs n_g > 0")
        return 2 if not wp and _pairs_consecutive(list(split.r_double_prime)) else 0
    if which == "dstar_ng_nonzero":
        if split.ng == 0:
            raise ValueError("this lemma needs n_g > 0")
        return 0
    if split.ng != 0:
        raise ValueError("the D* tau_b lemma needs n_g = 0")
    if label != "I":
        return 0
    rp = list(split.r_prime) + [0]
    total = 1
    for i in range(split.l):
        total *= rp[i] - rp[i + 1] + 1
    return total


def _swap_label(rep: LabeledPair) -> LabeledPair:
    if not rep.is_degenerate:
        return rep
    return LabeledPair(rep.first, rep.second, "II" if rep.label == "I" else "I")


def dstar_member_multiplicity(taub: LabeledPair, tau: LabeledPair, nb: int, ng: int) -> int:
    """``[taub (x) tau : Ind_{W' x W'}^{(W_nb x W_ng) cap W'} Cg (x) Cb]`` restricted to W' x W'."""
    if ng % 2:
        return 0  # no H_{ng/2}: the D* module at odd rank is zero
    cg, cb = build_CgDstar(nb), build_Cb("Dstar", ng)
    value = engine_multiplicity(taub, cg) * engine_multiplicity(tau, cb)
    if nb and ng:
        value += engine_multiplicity(_swap_label(taub), cg) * engine_multiplicity(_swap_label(tau), cb)
    return value


@dataclass
class MemberEvaluation:
    wp: frozenset
    tau: Rep
    engine: int
    closed: int | None
    factors: dict = field(default_factory=dict)


def evaluate_member(g: GroupSpec, orbit: DualOrbit, split: RowSplit, cell: Cell, wp) -> MemberEvaluation:
    """Engine multiplicity of one cell member in the coherent continuation module.

    ``factors`` lists ``(lemma, closed form, engine)`` for every lemma that
    applies to this member.
    """
    tau = cell.members[wp]
    factors = {}
    if isinstance(g, QuaternionicSpin):
        total = dstar_member_multiplicity(cell.taub, tau, split.nb, split.ng)
        if split.ng:
            factors["dstar_ng_nonzero"] = (closed_form_multiplicity("dstar_ng_nonzero", split), total)
            closed = 0
        else:
            closed = closed_form_multiplicity("dstar_taub", split, label=orbit.label)
            factors["dstar_taub"] = (closed, engine_multiplicity(cell.taub, build_CgDstar(split.nb)))
        return MemberEvaluation(wp, tau, total, closed, factors)
    if not isinstance(g, RealSpin):
        raise ValueError("cells are only attached to real and quaternionic groups")
    p, q = g.p, g.q
    if p < split.ng or q < split.ng:
        return MemberEvaluation(wp, tau, 0, 0, factors)
    cg = build_Cg(p - split.ng, q - split.ng)
    if split.parity == "odd":
        mb = engine_multiplicity(cell.taub, cg)
        mg = engine_multiplicity(tau, build_Cb("B", split.ng))
        factors["odd_taub"] = (closed_form_multiplicity("odd_taub", split, p, q), mb)
        factors["odd_tauwp"] = (closed_form_multiplicity("odd_tauwp", split, wp=wp), mg)
    else:
        mb = engine_multiplicity(cell.taub, cg)
        mg = engine_multiplicity(tau, build_Cb("D", split.ng))
        factors["even_taub"] = (closed_form_multiplicity("even_taub", split, p, q), mb)
        if split.ng:
            factors["even_tauwp"] = (closed_form_multiplicity("even_tauwp", split, wp=wp), mg)
    closed = 1
    for lemma_value, _ in factors.values():
        closed *= lemma_value
    if split.parity == "even" and not split.ng:
        closed *= mg  # trivial W'_0 factor, always 1
    return MemberEvaluation(wp, tau, mb * mg, closed, factors)


def cell_of(g: GroupSpec, orbit: DualOrbit) -> tuple[RowSplit, Cell]:
    split = row_split(orbit, g)
    return split, build_cell(split, orbit.label)
