import pytest

from spinunip.coherent import (
    InducedSum,
    build_Cb,
    build_Cg,
    build_CgDstar,
    build_cell,
    cell_of,
    closed_form_multiplicity,
    engine_multiplicity,
    evaluate_member,
    primitive_pairs,
)
from spinunip.orbits import QuaternionicSpin, RealSpin, RowSplit, group_families, orbits_of, parse_orbit, row_split
from spinunip.partitions import BiPartition, LabeledPair
from spinunip.weylrep.classes import order_w
from spinunip.weylrep.subgroups import SubgroupFactor as F


def kinds(module):
    return [tuple((f.kind, f.size, f.character) for f in factors) for factors, _ in module.terms]


def split_of(text, g):
    return row_split(parse_orbit(text), g)


class TestModules:
    def test_cb_examples(self):
        assert kinds(build_Cb("B", 0)) == [()]
        assert sorted(kinds(build_Cb("B", 2))) == sorted([
            (("H", 1, "eta"),), (("W", 2, "one"),), (("W", 1, "one"), ("W", 1, "one")), (("W", 2, "one"),)])
        dstar = build_Cb("Dstar", 2)
        assert dstar.target == "Wprime" and kinds(dstar) == [(("H", 1, "eta"),)]
        with pytest.raises(ValueError):
            build_Cb("Dstar", 3)

    def test_cg_examples(self):
        assert kinds(build_Cg(1, 0)) == [()]
        assert kinds(build_Cg(0, 0)) == [()]
        # t = r = 0 and (c, d) in {(1, 0), (0, 1)}
        assert kinds(build_Cg(1, 1)) == [(("W", 1, "one"),), (("W", 1, "one"),)]
        assert kinds(build_Cg(1, 1, "Wprime")) == [(("Wprime", 1, "one"),), (("W", 1, "one"),)]

    def test_cg_dstar_examples(self):
        assert sorted(kinds(build_CgDstar(2))) == sorted([(("S", 2, "sgn"),), (("H", 1, "eta"),)])
        assert kinds(build_CgDstar(0)) == [()]
        assert kinds(build_CgDstar(1)) == [(("S", 1, "sgn"),)]

    @pytest.mark.parametrize("n", range(6))
    def test_cg_degree_bookkeeping(self, n):
        for p in range(2 * n + 2):
            for q in (2 * n - p, 2 * n + 1 - p):
                if q < 0:
                    continue
                mod = build_Cg(p, q)
                expected = sum(c * order_w(n) // _order(fs) for fs, c in mod.terms)
                assert (mod.realize().degree if mod.terms else 0) == expected

    def test_rejects_bad_terms(self):
        with pytest.raises(ValueError):
            InducedSum(2, (((F.W(1),), 1),))


def _order(factors):
    out = 1
    for f in factors:
        out *= f.order
    return out


class TestEngine:
    def test_examples(self):
        assert engine_multiplicity(BiPartition(), build_Cg(1, 0)) == 1
        assert engine_multiplicity(BiPartition((1,), (1,)), InducedSum(2, ())) == 0
        assert engine_multiplicity(BiPartition((1,), (1,)), build_Cb("B", 2)) == 1

    def test_type_mismatch(self):
        with pytest.raises(ValueError):
            engine_multiplicity(BiPartition((1,), (1,)), build_Cb("Dstar", 2))


class TestCells:
    def test_primitive_pairs(self):
        assert primitive_pairs(split_of("2,2", RealSpin(3, 2))) == ((2, 3),)
        assert primitive_pairs(split_of("3,3", RealSpin(3, 3))) == ()
        even = RowSplit(0, 2, (), (2, 2, 1, 1), 0, 8, "even")
        assert primitive_pairs(even) == ((2, 3),)
        assert primitive_pairs(RowSplit(0, 2, (), (2, 2, 0, 0), 0, 6, "even")) == ()

    def test_odd_example(self):
        cell = build_cell(split_of("2,2", RealSpin(3, 2)))
        assert cell.taub == BiPartition()
        assert cell.members[frozenset()] == BiPartition((1,), (1,))
        assert cell.members[frozenset({(2, 3)})] == BiPartition((), (2,))

    def test_even_taub(self):
        s = split_of("2,2,1,1", RealSpin(3, 3))
        assert build_cell(s, None).taub == LabeledPair((1,), (1,), "I")
        assert build_cell(split_of("2,2:II", RealSpin(2, 2)), "II").taub == LabeledPair((1,), (1,), "II")
        assert build_cell(split_of("3,3", RealSpin(3, 3))).taub == LabeledPair((), (), "I")

    @pytest.mark.parametrize("m", range(3, 15))
    def test_cardinality_and_strictness(self, m):
        g = group_families(m)[0]
        for o in orbits_of(g):
            s, cell = cell_of(g, o)
            assert len(cell.members) == 2 ** len(cell.pp)
            assert len(set(cell.members.values())) == len(cell.members)
            for wp, tau in cell.members.items():
                assert tau.size == s.ng
                left, right = cell.columns[wp]
                if s.parity == "even":
                    assert all(a > b for a, b in zip(left, right))
            assert cell.taub.size == s.nb


class TestLemmas:
    def test_examples(self):
        s = split_of("2,2", RealSpin(3, 2))
        assert closed_form_multiplicity("odd_taub", s, 3, 2) == 1
        s = split_of("3,3", RealSpin(3, 3))
        assert closed_form_multiplicity("even_tauwp", s, wp=()) == 2
        s = split_of("2,2,2,2:I", QuaternionicSpin(4))
        assert closed_form_multiplicity("dstar_taub", s, label="I") == 2
        s = split_of("3,1", QuaternionicSpin(2))
        assert closed_form_multiplicity("dstar_ng_nonzero", s) == 0

    def test_case_mismatch(self):
        with pytest.raises(ValueError):
            closed_form_multiplicity("odd_taub", split_of("3,3", RealSpin(3, 3)), 3, 3)

    @pytest.mark.parametrize("m", range(3, 10))
    def test_lemmas_match_engine(self, m):
        for g in group_families(m):
            for o in orbits_of(g):
                s, cell = cell_of(g, o)
                for wp in cell.members:
                    ev = evaluate_member(g, o, s, cell, wp)
                    for lemma, (closed, engine) in ev.factors.items():
                        assert closed == engine, (str(g), str(o), sorted(wp), lemma)
                    assert ev.closed == ev.engine

    def test_support_condition(self):
        g, o = RealSpin(4, 1), parse_orbit("2,2")
        s, cell = cell_of(g, o)
        assert s.ng == 2 > g.q
        assert all(evaluate_member(g, o, s, cell, wp).engine == 0 for wp in cell.members)


class TestBlockReading:
    """The c block of the even module: W_c reading against a literal W'_c reading."""

    @pytest.mark.parametrize("p,q,lemma_value", [(2, 2, 1), (3, 1, 0)])
    def test_literal_reading_contradicts_the_lemma(self, p, q, lemma_value):
        s = split_of("2,2:I", RealSpin(p, q))
        taub = build_cell(s, "I").taub
        assert closed_form_multiplicity("even_taub", s, p, q) == lemma_value
        assert engine_multiplicity(taub, build_Cg(p, q)) == lemma_value
        assert engine_multiplicity(taub, build_Cg(p, q, "Wprime")) == lemma_value + 1
