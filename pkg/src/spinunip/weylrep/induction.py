"""Induction of linear characters from product subgroups into W_n.

``induce`` uses class fusion: every subgroup class is mapped to the W_n class
of its representative and the usual formula
``Ind f (C) = |C_G(C)| / |H| * sum_{D subset C} |D| f(D)`` is applied.
``induce_bruteforce`` enumerates W_n and conjugates element by element; it is
the independent oracle and is capped by :data:`BRUTE_FORCE_MAX_RANK`.
"""

from __future__ import annotations

import os
from collections import defaultdict
from fractions import Fraction
from functools import cache
from typing import Callable, Iterable, Sequence

from spinunip.weylrep.characters import ClassFunction
from spinunip.weylrep.classes import ConjClassLabel, centralizer_order, conjugacy_classes
from spinunip.weylrep.signed import SignedPermutation, block_sum, hyperoctahedral_elements, standard_element
from spinunip.weylrep.subgroups import SubgroupFactor, fused_label, h_elements, product_classes, subgroup_order

BRUTE_FORCE_MAX_RANK = int(os.environ.get("SPINUNIP_BRUTE_FORCE_MAX_RANK", "7"))
CLASS_FUSION_MAX_RANK = int(os.environ.get("SPINUNIP_MAX_RANK", "14"))


class RankError(ValueError):
    """Raised when a computation exceeds a configured rank cutoff."""


def _normalize(factors: Iterable[SubgroupFactor], n: int) -> tuple[SubgroupFactor, ...]:
    factors = tuple(f.resolved() for f in factors)
    total = sum(f.degree for f in factors)
    if total != n:
        raise ValueError(f"factor degrees sum to {total}, expected {n}")
    if n > CLASS_FUSION_MAX_RANK:
        raise RankError(f"rank {n} exceeds the configured cutoff {CLASS_FUSION_MAX_RANK}")
    return factors


def induce(factors: Sequence[SubgroupFactor], n: int) -> ClassFunction:
    """Character of ``Ind_H^{W_n}`` of the product of the factor characters."""
    return _induce(_normalize(factors, n), n)


@cache
def _induce(factors: tuple[SubgroupFactor, ...], n: int) -> ClassFunction:
    acc: dict[ConjClassLabel, int] = defaultdict(int)
    for datum in product_classes(factors):
        acc[fused_label(datum.rep)] += datum.size * datum.value
    order_h = subgroup_order(factors)
    values = []
    for label, _ in conjugacy_classes(n):
        v = Fraction(acc.get(label, 0) * centralizer_order(label), order_h)
        values.append(int(v) if v.denominator == 1 else v)
    return ClassFunction(n, values)


def subgroup_elements(factors: Sequence[SubgroupFactor]) -> dict[SignedPermutation, int]:
    """Explicit element -> character value table for a product subgroup (small rank only)."""
    tables = []
    for f in (f.resolved() for f in factors):
        tables.append(_factor_elements(f))
    out: dict[SignedPermutation, int] = {SignedPermutation.identity(0): 1}
    for table in tables:
        out = {block_sum(g, h): a * b for g, a in out.items() for h, b in table.items()}
    return out


@cache
def _factor_elements(f: SubgroupFactor) -> dict[SignedPermutation, int]:
    if f.kind == "H":
        return dict(h_elements(f.size, f.eta))
    from spinunip.weylrep.subgroups import _w_value

    out = {}
    for g in hyperoctahedral_elements(f.size, wprime=f.kind == "Wprime"):
        label = fused_label(g)
        if f.kind == "S":
            if any(s < 0 for s in g.signs):
                continue
            out[g] = g.perm_sign() if f.character == "sgn" else 1
        else:
            out[g] = _w_value(f, label)
    return out


def induce_bruteforce(factors: Sequence[SubgroupFactor], n: int) -> ClassFunction:
    """Element-level induction: ``(1/|H|) sum_{x in W_n} f(x g x^-1)``."""
    factors = _normalize(factors, n)
    if n > BRUTE_FORCE_MAX_RANK:
        raise RankError(f"rank {n} exceeds the element-level cutoff {BRUTE_FORCE_MAX_RANK}")
    table = subgroup_elements(factors)
    return induce_from_table(table, n)


def induce_from_table(table: dict[SignedPermutation, int], n: int) -> ClassFunction:
    group = list(hyperoctahedral_elements(n))
    values = []
    for label, _ in conjugacy_classes(n):
        g = standard_element(*label)
        total = 0
        for x in group:
            total += table.get(x.conj(g), 0)
        v = Fraction(total, len(table))
        values.append(int(v) if v.denominator == 1 else v)
    return ClassFunction(n, values)


def restrict_inner_product(
    chi: ClassFunction, table: dict[SignedPermutation, int]
) -> Fraction:
    """``<f, Res_H chi>_H`` computed element by element over H."""
    total = sum(value * chi[fused_label(h)] for h, value in table.items())
    return Fraction(total, len(table))


def class_function_of(fn: Callable[[SignedPermutation], int], n: int) -> ClassFunction:
    """Evaluate an element-level class function on standard representatives."""
    return ClassFunction(n, [fn(standard_element(*label)) for label, _ in conjugacy_classes(n)])
