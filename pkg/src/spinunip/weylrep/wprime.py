"""Irreducible characters of W'_n and multiplicities in W'_n-modules.

For ``mu != nu`` the pair ``{mu, nu}`` restricts irreducibly from W_n.  For
``n = 2k`` the restriction of ``(mu, mu)`` splits as ``chi_+ + chi_-``; the
difference ``delta_mu = chi_+ - chi_-`` vanishes off the split classes and on
the split class of even positive cycles ``2*alpha`` equals
``+-2^len(alpha) * chi^mu(alpha)``, the sign recording which W'_n-class half
the element lies in relative to :func:`standard_element`.

Which half is called ``I`` is fixed by the calibrated ``eta``: label I is the
constituent of ``Res (mu, mu)`` that occurs in ``Ind_{H_k}^{W'_{2k}} eta``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from typing import Iterable, Sequence

from spinunip.partitions import LabeledPair, Partition
from spinunip.weylrep.characters import ClassFunction, eps, irr_character, inner_product, multiplicity
from spinunip.weylrep.classes import is_split_in_wprime
from spinunip.weylrep.induction import RankError, BRUTE_FORCE_MAX_RANK, induce
from spinunip.weylrep.signed import SignedPermutation, hyperoctahedral_elements, standard_element
from spinunip.weylrep.subgroups import SubgroupFactor, fused_label, product_classes, subgroup_order
from spinunip.weylrep.symmetric import sym_character

Term = tuple[Sequence[SubgroupFactor], int]


def split_sign(g: SignedPermutation) -> int:
    """+1 if ``g`` is W'_n-conjugate to the standard representative of its class, else -1.

    Only meaningful for elements of a split class.  If ``x g0 x^-1 = g`` then
    ``x`` maps the standard cycles onto the signed orbits of ``g``; the sign
    product of ``x`` is the product of the signs along those orbits.
    """
    negatives = sum(sum(1 for a in cyc if a < 0) for cyc, _ in g.cycles())
    return -1 if negatives % 2 else 1


def delta_value(mu: Partition, g: SignedPermutation) -> int:
    pos, neg = g.cycle_type()
    label = fused_label(g)
    if not is_split_in_wprime(label) or Partition(mu).size * 2 != len(g):
        return 0
    alpha = Partition(x // 2 for x in pos)
    return split_sign(g) * 2 ** len(alpha) * sym_character(Partition(mu), alpha)


def _check_wprime(factors: Sequence[SubgroupFactor]) -> None:
    for f in factors:
        f = f.resolved()
        if f.kind == "W" or (f.kind == "H" and f.eta.embedding != "swap"):
            raise ValueError(f"factor {f} does not lie in W'")


def delta_pairing(mu: Partition, factors: Sequence[SubgroupFactor]) -> Fraction:
    """``<delta_mu, Ind_H^{W'} psi>_{W'} = <Res_H delta_mu, psi>_H``."""
    factors = tuple(f.resolved() for f in factors)
    _check_wprime(factors)
    total = sum(d.size * d.value * delta_value(mu, d.rep) for d in product_classes(factors))
    return Fraction(total, subgroup_order(factors))


@cache
def label_sign(mu: Partition) -> int:
    """Sign of ``delta_mu`` carried by the label-I constituent."""
    mu = Partition(mu)
    k = mu.size
    if k == 0:
        return 1
    b = delta_pairing(mu, [SubgroupFactor.H(k)])
    if b not in (1, -1):
        raise ArithmeticError(f"(mu, mu) for mu={mu} is not multiplicity one in Ind_H eta")
    return int(b)


def labeled_character_values(rep: LabeledPair, g: SignedPermutation) -> Fraction:
    """Value of the W'_n irreducible ``rep`` at the element ``g``."""
    bp = rep.as_bipartition()
    base = irr_character(bp)[fused_label(g)]
    if not rep.is_degenerate or not bp.size:
        return Fraction(base)
    s = label_sign(rep.first) * (1 if rep.label == "I" else -1)
    return Fraction(base + s * delta_value(rep.first, g), 2)


def induced_multiplicity(rep: LabeledPair, terms: Iterable[Term]) -> int:
    """Multiplicity of ``rep`` in ``sum coeff * Ind_{H}^{W'_n} psi`` (each H inside W'_n)."""
    total = Fraction(0)
    bp = rep.as_bipartition()
    for factors, coeff in terms:
        factors = tuple(f.resolved() for f in factors)
        _check_wprime(factors)
        a = multiplicity(bp, induce(factors, bp.size))
        if rep.is_degenerate and bp.size:
            s = label_sign(rep.first) * (1 if rep.label == "I" else -1)
            total += coeff * Fraction(a + s * delta_pairing(rep.first, factors), 2)
        else:
            total += coeff * a
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"bad multiplicity {total} for {rep}")
    return int(total)


def restricted_multiplicity(rep: LabeledPair, module: ClassFunction) -> int:
    """Multiplicity of ``rep`` in the restriction to W'_n of a W_n-character.

    Unequal pairs: ``[a x b : M] + [a x b (x) eps : M]``.  For equal pairs the
    two labels occur equally often, namely ``[(mu, mu) : M]``.
    """
    bp = rep.as_bipartition()
    chi = irr_character(bp)
    if rep.is_degenerate:
        m = inner_product(chi, module)
    else:
        m = inner_product(chi, module) + inner_product(chi * eps(bp.size), module)
    if m.denominator != 1:
        raise ArithmeticError(f"non-integral multiplicity {m}")
    return int(m)


def mult_in_wprime(rep: LabeledPair, module, label_sensitive: bool = True):
    """Dispatch on the module type.

    ``module`` is a W_n :class:`ClassFunction` (restriction semantics) or an
    iterable of ``(factors, coefficient)`` terms induced into W'_n.  With
    ``label_sensitive=False`` an equal pair returns the ``(I, II)`` tuple.
    """
    if not rep.is_degenerate or label_sensitive:
        if isinstance(module, ClassFunction):
            return restricted_multiplicity(rep, module)
        return induced_multiplicity(rep, module)
    pair = [LabeledPair(rep.first, rep.second, lab) for lab in ("I", "II")]
    return tuple(mult_in_wprime(p, module) for p in pair)


# --- explicit construction of the split characters (oracle) -----------------


def _extension_value(mu: Partition, g: SignedPermutation, k: int, sign: int) -> int | None:
    """Character of the tensor-swap extension of mu (x) mu*eps on E, or None off E.

    ``E = ((W_k x W_k) cap W') x| <tau>`` with ``tau`` the block swap.
    """
    low = [abs(v) <= k for v in g]
    if all(low[:k]) and not any(low[k:]):
        a = SignedPermutation(g[:k])
        b = SignedPermutation([v - k if v > 0 else v + k for v in g[k:]])
        return (sym_character(mu, Partition(a.cycle_type()[0] + a.cycle_type()[1]))
                * sym_character(mu, Partition(b.cycle_type()[0] + b.cycle_type()[1]))
                * b.sign_product())
    if not any(low[:k]) and all(low[k:]):
        # g = (a, b) tau: block 1 -> block 2 is b, block 2 -> block 1 is a
        b = SignedPermutation([v - k if v > 0 else v + k for v in g[:k]])
        a = SignedPermutation(g[k:])
        ab = a * b
        return sign * b.sign_product() * sym_character(mu, Partition(ab.cycle_type()[0] + ab.cycle_type()[1]))
    return None


def split_characters_bruteforce(mu: Partition) -> dict[SignedPermutation, tuple[Fraction, Fraction]]:
    """Induce both extensions from E to W'_{2k}; values at W'-class representatives."""
    mu = Partition(mu)
    k = mu.size
    n = 2 * k
    if n > min(BRUTE_FORCE_MAX_RANK, 6):
        raise RankError("element-level split characters are limited to rank 6")
    group = list(hyperoctahedral_elements(n, wprime=True))
    e_order = sum(1 for x in group if _extension_value(mu, x, k, 1) is not None)
    reps = []
    from spinunip.weylrep.classes import conjugacy_classes

    for label, _ in conjugacy_classes(n):
        if len(label.negative) % 2:
            continue
        g = standard_element(*label)
        reps.append(g)
        if is_split_in_wprime(label):
            f = SignedPermutation((-1,) + tuple(range(2, n + 1)))
            reps.append(f.conj(g))
    out = {}
    for g in reps:
        vals = []
        for sign in (1, -1):
            total = 0
            for x in group:
                v = _extension_value(mu, x.conj(g), k, sign)
                if v is not None:
                    total += v
            vals.append(Fraction(total, e_order))
        out[g] = (vals[0], vals[1])
    return out
