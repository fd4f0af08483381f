from fractions import Fraction

import pytest

from spinunip.partitions import BiPartition, LabeledPair, Partition, partitions_of
from spinunip.weylrep.calibration import current_eta
from spinunip.weylrep.characters import ClassFunction, eps, inner_product, irr_character, trivial
from spinunip.weylrep.signed import hyperoctahedral_elements
from spinunip.weylrep.subgroups import SubgroupFactor as F, fused_label, h_elements
from spinunip.weylrep.wprime import (
    delta_pairing,
    delta_value,
    induced_multiplicity,
    label_sign,
    labeled_character_values,
    mult_in_wprime,
    restricted_multiplicity,
    split_characters_bruteforce,
)


def wprime_irreducibles(n):
    out = []
    for k in range(n, -1, -1):
        for a in partitions_of(k):
            for b in partitions_of(n - k):
                if a > b:
                    out.append(LabeledPair(a, b))
                elif a == b:
                    out += [LabeledPair(a, b, "I"), LabeledPair(a, b, "II")]
    return out


@pytest.mark.parametrize("mu", [Partition(m) for k in (1, 2, 3) for m in partitions_of(k)], ids=str)
def test_split_characters_match_extension_construction(mu):
    oracle = split_characters_bruteforce(mu)
    whole = irr_character(BiPartition(mu, mu))
    for g, (plus, minus) in oracle.items():
        label = fused_label(g)
        assert plus + minus == whole[label]
        assert plus - minus == delta_value(mu, g)
        ours = {labeled_character_values(LabeledPair(mu, mu, lab), g) for lab in ("I", "II")}
        assert ours == {plus, minus}


@pytest.mark.parametrize("n", range(1, 5))
def test_wprime_orthogonality_elementwise(n):
    group = list(hyperoctahedral_elements(n, wprime=True))
    irreps = wprime_irreducibles(n)
    values = {rep: [labeled_character_values(rep, g) for g in group] for rep in irreps}
    assert sum(v[0] ** 2 for v in values.values()) == len(group)
    for i, a in enumerate(irreps):
        for b in irreps[i:]:
            ip = Fraction(sum(x * y for x, y in zip(values[a], values[b])), len(group))
            assert ip == (1 if a == b else 0), (a, b)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_label_one_occurs_in_induced_eta(k):
    eta = current_eta()
    table = list(h_elements(k, eta))
    for mu in partitions_of(k):
        for lab, expected in (("I", 1), ("II", 0)):
            rep = LabeledPair(mu, mu, lab)
            total = sum(v * labeled_character_values(rep, h) for h, v in table)
            assert Fraction(total, len(table)) == expected
            assert induced_multiplicity(rep, [((F.H(k),), 1)]) == expected
        assert label_sign(mu) == delta_pairing(mu, [F.H(k)])


def test_equal_pair_in_rank_two():
    rep = LabeledPair((1,), (1,), "I")
    assert mult_in_wprime(rep, [((F.H(1),), 1)], label_sensitive=False) == (1, 0)


def test_unequal_pairs_double_against_eps_invariant_modules():
    module = trivial(2) + eps(2)  # induced from W'_2, so stable under eps
    for a, b in [((2,), ()), ((1, 1), ()), ((), (2,))]:
        bp = BiPartition(a, b)
        assert restricted_multiplicity(LabeledPair(a, b), module) == 2 * inner_product(irr_character(bp), module)


def test_zero_module():
    for rep in wprime_irreducibles(3):
        assert restricted_multiplicity(rep, ClassFunction.zero(3)) == 0


def test_restriction_counts_both_labels_equally():
    mu = Partition((1,))
    chi = irr_character(BiPartition(mu, mu))
    assert [restricted_multiplicity(LabeledPair(mu, mu, lab), chi) for lab in ("I", "II")] == [1, 1]


def test_rejects_factors_outside_wprime():
    with pytest.raises(ValueError):
        induced_multiplicity(LabeledPair((1,), ()), [((F.W(1),), 1)])
