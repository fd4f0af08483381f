import pytest
from hypothesis import given, strategies as st

from spinunip import counting
from spinunip.counting import (
    CountReport,
    VerificationError,
    classify,
    classify_many,
    clifford_consistent,
    count_complex,
    count_spin,
    count_tilde,
    count_via_cells,
    sgn_twist_fixed,
)
from spinunip.orbits import (
    ComplexSpin,
    DualOrbit,
    InvalidInput,
    QuaternionicSpin,
    RealSpin,
    all_rows_even_multiplicity,
    group_families,
    orbits_of,
    parse_group,
    parse_orbit,
    rank,
)
from spinunip.partitions import is_very_even


def q(group, orbit):
    return parse_group(group), parse_orbit(orbit)


def all_orbits(max_m, min_m=3):
    for m in range(min_m, max_m + 1):
        for g in group_families(m):
            for o in orbits_of(g):
                yield g, o


class TestClosedForms:
    def test_cover_examples(self):
        assert count_tilde(*q("Spin(3,2)", "2,2")) == 1
        assert count_tilde(*q("Spin(3,3)", "3,3")) == 2
        assert count_tilde(*q("Spin*(8)", "2,2,2,2:I")) == 2
        assert count_tilde(*q("Spin(4,1)", "2,2")) == 0

    def test_group_examples(self):
        assert count_spin(*q("Spin(3,2)", "2,2")) == 2
        assert count_spin(*q("Spin(3,3)", "3,3")) == 1
        assert count_spin(*q("Spin(2,2)", "1,1,1,1")) == 4
        assert count_spin(*q("Spin(2,2)", "2,2:I")) == 2

    def test_complex(self):
        for m in (4, 5, 7, 8):
            for pair in orbits_of(ComplexSpin(m)):
                assert count_complex(m, pair) == 0
                assert count_tilde(ComplexSpin(m), pair) == 0
        pair = (parse_orbit("2,2:I"), parse_orbit("2,2:II"))
        assert count_complex(4, pair) == 0
        with pytest.raises(InvalidInput):
            count_complex(7, (parse_orbit("2,2"), parse_orbit("2,2")))

    def test_invalid_orbit(self):
        with pytest.raises(InvalidInput):
            count_tilde(*q("Spin(3,2)", "3,1"))

    def test_twist(self):
        assert sgn_twist_fixed(*q("Spin(3,3)", "3,3")) is False
        assert sgn_twist_fixed(*q("Spin(3,2)", "2,2")) is True
        assert sgn_twist_fixed(*q("Spin*(8)", "2,2,2,2:I")) is True
        with pytest.raises(ValueError):
            sgn_twist_fixed(*q("Spin(4,1)", "2,2"))


class TestCells:
    def test_examples(self):
        assert count_via_cells(*q("Spin(3,2)", "2,2")) == 1
        assert count_via_cells(*q("Spin(4,1)", "2,2")) == 0
        assert count_via_cells(*q("Spin*(4)", "2,2:I")) == 2
        assert count_via_cells(*q("Spin*(4)", "2,2:II")) == 0

    def test_cutoff(self):
        g = RealSpin(9, 8)
        with pytest.raises(InvalidInput):
            count_via_cells(g, DualOrbit((2,) * 8))
        with pytest.raises(InvalidInput):
            count_via_cells(ComplexSpin(5), parse_orbit("2,2"))

    @pytest.mark.parametrize("m", range(3, 12))
    def test_reconciliation(self, m):
        for g, o in all_orbits(m, m):
            assert count_via_cells(g, o, max_rank=5) == count_tilde(g, o), (str(g), str(o))


class TestInvariants:
    def test_clifford_pattern(self):
        seen = 0
        for g, o in all_orbits(14):
            tilde = count_tilde(g, o)
            if tilde:
                seen += 1
                assert clifford_consistent(g, tilde, count_spin(g, o), sgn_twist_fixed(g, o))
        assert seen > 100

    def test_label_two_contributes_nothing(self):
        for n in range(2, 8):
            g = QuaternionicSpin(n)
            for o in orbits_of(g):
                if o.label == "II":
                    assert count_tilde(g, o) == count_spin(g, o) == 0

    def test_odd_multiplicity_empties(self):
        for g, o in all_orbits(14):
            if not all_rows_even_multiplicity(o):
                assert count_tilde(g, o) == count_spin(g, o) == 0

    def test_quaternionic_non_very_even_is_empty(self):
        for n in range(2, 8):
            g = QuaternionicSpin(n)
            for o in orbits_of(g):
                if not is_very_even(o.shape):
                    assert count_tilde(g, o) == 0


class TestClassify:
    def test_odd_equal_rank(self):
        r = classify(*q("Spin(3,3)", "3,3"))
        assert (r.count_tilde, r.count_g, r.sgn_twist_fixed, r.verified, r.cell_count) == (2, 1, False, True, 2)
        assert r.descriptor["n_characters"] == 2
        assert "χ₁" in r.descriptor["structure"] and "χ₂" in r.descriptor["structure"]
        assert "I(χ)|_G irreducible" in r.descriptor["structure"]

    def test_quaternionic(self):
        r = classify(*q("Spin*(8)", "2,2,2,2:I"))
        assert (r.count_tilde, r.count_g) == (2, 2)
        assert "I(χ) ≅ ⊕ π_o" in r.descriptor["structure"]
        assert r.descriptor["levi"] == "GL_1(H) × GL_1(H)"

    def test_split_restriction(self):
        r = classify(*q("Spin(5,4)", "4,4"))
        assert (r.count_tilde, r.count_g) == (1, 2)
        assert "I₁(χ) ⊕ I₂(χ)" in r.descriptor["structure"]
        assert r.descriptor["levi"] == "GL_4(R)"

    def test_empty(self):
        r = classify(*q("Spin(4,1)", "2,2"))
        assert r.sgn_twist_fixed is None and r.descriptor["structure"] == "empty"

    def test_verify_defaults(self):
        assert classify(*q("Spin(3,2)", "2,2")).verified
        big = RealSpin(7, 6)
        assert not classify(big, DualOrbit((2,) * 6)).verified
        assert classify(big, DualOrbit((2,) * 6), verify=True).cell_count == 1
        with pytest.raises(InvalidInput):
            classify(RealSpin(9, 8), DualOrbit((2,) * 8), verify=True)

    def test_mismatch_is_an_error(self, monkeypatch):
        monkeypatch.setattr(counting, "count_via_cells", lambda g, o: 99)
        with pytest.raises(VerificationError):
            classify(*q("Spin(3,2)", "2,2"))

    def test_complex(self):
        g = ComplexSpin(5)
        r = classify(g, (parse_orbit("2,2"), parse_orbit("1,1,1,1")))
        assert r.count_tilde == r.count_g == 0 and not r.verified
        assert isinstance(r.orbit, list) and len(r.orbit) == 2

    def test_thread_count_does_not_change_results(self):
        items = list(all_orbits(8))
        one = [r.to_json() for r in classify_many(items, threads=1)]
        four = [r.to_json() for r in classify_many(items, threads=4)]
        strip = lambda rs: [{k: v for k, v in r.items() if k != "timings"} for r in rs]  # noqa: E731
        assert strip(one) == strip(four)


ORBITS = [(g, o) for g, o in all_orbits(9)]


@given(st.sampled_from(ORBITS), st.booleans())
def test_json_round_trip(item, verify):
    g, o = item
    report = classify(g, o, verify)
    again = CountReport.parse(report.render())
    assert again == report
    assert again.group_spec == g
    assert rank(again.group_spec) == rank(g)
