from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pinwheel_lattice.errors import ChartMismatch, InvalidChart, ParseError
from pinwheel_lattice.lattice import (
    S2XS2,
    X5_SPECIAL,
    Chart,
    HomologyClass,
    PeriodVector,
    c1_of,
    get_chart,
    pair,
    pair_mod,
    parse_rational,
    periods,
    perp_sublattice_mod,
    poincare_dual,
    reduce_mod,
    register_chart,
    same_lattice,
    satisfies_sphere_adjunction,
    std_chart,
    std_to_x5_special,
    volume,
    x5_parameters,
    x5_periods,
    x5_special_to_std,
)
from pinwheel_lattice.oracles import perp_box_check

X3 = std_chart(3)


def test_chart_lookup_and_aliases():
    assert get_chart("X3") is X3
    assert get_chart("std_X3") is X3
    assert get_chart("CP2") is std_chart(0)
    assert get_chart("S2xS2") is S2XS2
    assert repr(X3) == "Chart('std_X3')"


def test_invalid_charts_rejected():
    with pytest.raises(InvalidChart):
        Chart("bad", ("A", "B"), ((2, 0), (0, 1)), (0, 0))
    with pytest.raises(InvalidChart):
        Chart("bad", ("A", "B"), ((0, 1), (0, 0)), (0, 0))
    with pytest.raises(InvalidChart):
        register_chart(Chart("std_X3", ("H",), ((1,),), (3,)))


def test_pair_examples():
    assert pair(X3.parse("H"), X3.parse("H")) == 1
    assert pair(X5_SPECIAL.parse("Zinf"), X5_SPECIAL.parse("F")) == 1
    e = X3.parse("E1+E2+E3")
    assert pair(e, e) == -3
    with pytest.raises(ChartMismatch):
        pair(X3.parse("H"), std_chart(4).parse("H"))


def test_c1_examples():
    assert c1_of(X3.parse("E1")) == 1
    assert c1_of(std_chart(4).parse("E1-E2-E3-E4")) == -2
    assert c1_of(X3.parse("-2H+3E1")) == -3


def test_poincare_dual_and_volume():
    p = PeriodVector(X3, (3, 1, 1, 1))
    assert poincare_dual(p) == (3, -1, -1, -1)
    assert volume(p) == 6
    assert volume(x5_periods(6, 1, ("1/2", "1/10", "1/10", "1/10"))) == Fraction(193, 25)
    assert volume(PeriodVector(S2XS2, (0, 0))) == 0
    assert volume(PeriodVector(S2XS2, (Fraction(3, 2), 1))) == 3


def test_x5_periods_roundtrip():
    p = x5_periods(6, 1, ("1/2", "1/10", "1/10", "1/10"))
    assert x5_parameters(p) == (6, 1, (Fraction(1, 2),) + (Fraction(1, 10),) * 3)


def test_mod_examples():
    assert reduce_mod(X3.parse("2H-E1-E2-E3"), 2).coeffs == (0, 1, 1, 1)
    assert pair_mod(S2XS2.parse("A+B"), S2XS2.parse("A+2B"), 3) == 0
    assert pair_mod(X3.parse("H"), X3.parse("E1+E2+E3"), 2) == 0


def test_perp_examples():
    got = perp_sublattice_mod([S2XS2.parse("A+B")], 3)
    assert same_lattice(got, [S2XS2.parse("A+2B"), S2XS2.parse("2A+B")])
    got = perp_sublattice_mod([X3.parse("H"), X3.parse("E1+E2+E3")], 2)
    assert same_lattice(got, [X3.parse(t) for t in ("2H", "E1-E2", "E2-E3", "2E3")])
    assert perp_sublattice_mod([], 5, chart=X3) == X3.basis()


def test_perp_is_deterministic_normal_form():
    a = perp_sublattice_mod([X3.parse("H"), X3.parse("E1+E2+E3")], 2)
    b = perp_sublattice_mod([X3.parse("E1+E2+E3"), X3.parse("3H")], 2)
    assert a == b


@pytest.mark.parametrize("classes,n", [
    (["A+B"], 3), (["A"], 2),
])
def test_perp_box_oracle_s2xs2(classes, n):
    cs = [S2XS2.parse(t) for t in classes]
    assert perp_box_check(cs, n, perp_sublattice_mod(cs, n))


def test_perp_box_oracle_x3():
    cs = [X3.parse("H"), X3.parse("E1+E2+E3")]
    assert perp_box_check(cs, 2, perp_sublattice_mod(cs, 2))


def test_adjunction():
    assert satisfies_sphere_adjunction(X3.parse("E1"))
    assert satisfies_sphere_adjunction(X3.parse("H-E1-E2-E3"))
    assert not satisfies_sphere_adjunction(X3.parse("-E1-E2"))


def test_parse_and_format():
    a = X3.parse("2H - E1 - E2 - E3")
    assert a.coeffs == (2, -1, -1, -1)
    assert str(a) == "2H-E1-E2-E3"
    assert str(X5_SPECIAL.parse("-Zinf+4F")) == "-Zinf+4F"
    assert str(X3.parse("0")) == "0"
    with pytest.raises(ParseError):
        X3.parse("H+E9")
    with pytest.raises(ParseError):
        X3.parse("H E1")


@pytest.mark.parametrize("bad", ["1.5", "1e3", "abc", "1/", "", None])
def test_parse_rational_rejects_non_exact(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


def test_parse_rational_accepts_exact():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-4") == -4
    assert periods("X3", ["3", "1/2", 1, Fraction(1, 3)]).values[1] == Fraction(1, 2)


def test_x5_isometry():
    for a in X5_SPECIAL.basis():
        for b in X5_SPECIAL.basis():
            assert pair(x5_special_to_std(a), x5_special_to_std(b)) == pair(a, b)
        assert c1_of(x5_special_to_std(a)) == c1_of(a)
        assert std_to_x5_special(x5_special_to_std(a)) == a


charts = st.sampled_from([std_chart(k) for k in range(9)] + [S2XS2, X5_SPECIAL])


@st.composite
def class_triples(draw):
    chart = draw(charts)
    vec = st.tuples(*[st.integers(-9, 9)] * chart.rank)
    return tuple(HomologyClass(chart, draw(vec)) for _ in range(3))


@given(class_triples(), st.integers(-4, 4))
def test_pairing_properties(abc, m):
    a, b, c = abc
    assert pair(a, b) == pair(b, a)
    assert pair(a + m * b, c) == pair(a, c) + m * pair(b, c)
    # c1 is characteristic
    assert (a.square - c1_of(a)) % 2 == 0
    # the square mod 4 depends only on the class mod 2
    assert (a + 2 * b).square % 4 == a.square % 4


@given(st.integers(0, 8).flatmap(
    lambda k: st.lists(st.fractions(-10, 10, max_denominator=50), min_size=k + 1, max_size=k + 1)))
def test_volume_identity(vals):
    p = PeriodVector(std_chart(len(vals) - 1), tuple(vals))
    assert volume(p) == vals[0] ** 2 - sum(v * v for v in vals[1:])
