"""Half-integer arithmetic, signs, labels, groups, and declared facts."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from apackets.core_types import (
    MINUS,
    PLUS,
    CentralValue,
    CuspidalLabel,
    GroupKind,
    GroupType,
    HalfInt,
    LContext,
    Parity,
    RGFactor,
    TriBool,
    Violation,
    check_sign,
    halfint_in_segment,
    kleene_and,
    parity_from_sign,
    parse_halfint,
    parse_sign,
    sign_str,
)
from _helpers import h, h2


# --- signs -----------------------------------------------------------------


def test_check_sign_accepts_plus_minus_one():
    assert check_sign(PLUS) == 1
    assert check_sign(MINUS) == -1


@pytest.mark.parametrize("bad", [0, 2, -2, True, False, "+"])
def test_check_sign_rejects_everything_else(bad):
    with pytest.raises((ValueError, TypeError)):
        check_sign(bad)


def test_sign_str():
    assert sign_str(PLUS) == "+"
    assert sign_str(MINUS) == "-"


def test_parse_sign():
    assert parse_sign("+") == PLUS
    assert parse_sign("+1") == PLUS
    assert parse_sign("-") == MINUS
    assert parse_sign("-1") == MINUS
    with pytest.raises(ValueError):
        parse_sign("0")


# --- half-integers ----------------------------------------------------------


def test_halfint_basics():
    x = h2(3)  # 3/2
    assert not x.is_integral
    assert x.floor() == 1
    assert str(x) == "3/2"
    y = h(2)
    assert y.is_integral
    assert y.as_int() == 2
    assert str(y) == "2"
    with pytest.raises(ValueError):
        x.as_int()


def test_halfint_floor_rounds_down_for_negatives():
    assert h2(-3).floor() == -2  # floor(-3/2) = -2
    assert h2(-4).floor() == -2
    assert h2(-1).floor() == -1


def test_halfint_arithmetic_and_comparison():
    assert h2(1) + h2(2) == h2(3)
    assert h(1) - h2(1) == h2(1)
    assert -h2(3) == h2(-3)
    assert abs(h2(-5)) == h2(5)
    assert h2(3) * 2 == h(3)
    assert 2 * h2(3) == h(3)
    assert h2(1) < h(1) <= h2(2)
    assert h2(5) > 2
    assert h2(4) == 2
    assert h2(3) != 1


def test_halfint_mixed_int_arithmetic():
    assert h2(1) + 1 == h2(3)
    assert 1 + h2(1) == h2(3)
    assert 2 - h2(1) == h2(3)


def test_halfint_rejects_non_int_doubled():
    with pytest.raises(TypeError):
        HalfInt(1.5)
    with pytest.raises(TypeError):
        HalfInt(True)


def test_halfint_as_fraction():
    assert h2(3).as_fraction() == Fraction(3, 2)
    assert h(2).as_fraction() == Fraction(2)


@given(st.integers(-1000, 1000))
def test_parse_halfint_roundtrip(d):
    x = HalfInt(d)
    assert parse_halfint(str(x)) == x


def test_parse_halfint_forms():
    assert parse_halfint("3/2") == h2(3)
    assert parse_halfint("-5/2") == h2(-5)
    assert parse_halfint("4") == h(4)
    assert parse_halfint(" -2 ") == h(-2)


@given(st.integers(-200, 200), st.integers(-200, 200))
def test_halfint_arithmetic_matches_fractions(a, b):
    x, y = HalfInt(a), HalfInt(b)
    assert (x + y).as_fraction() == x.as_fraction() + y.as_fraction()
    assert (x - y).as_fraction() == x.as_fraction() - y.as_fraction()
    assert (x < y) == (x.as_fraction() < y.as_fraction())
    assert (x == y) == (x.as_fraction() == y.as_fraction())


# --- segment membership -----------------------------------------------------


def test_halfint_in_segment_examples():
    assert halfint_in_segment(h2(1), h2(1), h2(5)) is True  # 1/2 in [1/2, 5/2]
    assert halfint_in_segment(h(0), h2(1), h2(5)) is False  # wrong class
    assert halfint_in_segment(h(3), h(5), h(1)) is True  # reversed endpoints


def test_halfint_in_segment_bounds():
    assert not halfint_in_segment(h(0), h(1), h(5))
    assert not halfint_in_segment(h(6), h(1), h(5))
    assert halfint_in_segment(h(5), h(1), h(5))


@given(
    st.integers(-20, 20),
    st.integers(-20, 20),
    st.integers(-10, 10),
)
def test_halfint_in_segment_matches_entry_list(x, lo, span):
    # Well-formed segments have an integral span, so both endpoints share a class.
    hi = lo + 2 * span
    member = halfint_in_segment(HalfInt(x), HalfInt(lo), HalfInt(hi))
    a, b = min(lo, hi), max(lo, hi)
    entries = set(range(a, b + 1, 2))
    assert member == (x in entries)


# --- labels, parities, groups ------------------------------------------------


def test_parity_signs():
    assert Parity.ORTHOGONAL.sign == PLUS
    assert Parity.SYMPLECTIC.sign == MINUS
    assert parity_from_sign(PLUS) is Parity.ORTHOGONAL
    assert parity_from_sign(MINUS) is Parity.SYMPLECTIC


def test_cuspidal_label_validation():
    CuspidalLabel("a", 1, True, Parity.ORTHOGONAL)
    CuspidalLabel("b", 3, False, None)
    with pytest.raises(ValueError):
        CuspidalLabel("", 1, True)
    with pytest.raises(ValueError):
        CuspidalLabel("a", 0, True)
    with pytest.raises(ValueError):
        CuspidalLabel("a", 1, False, Parity.ORTHOGONAL)


def test_group_type_r_factor_and_required_parity():
    so = GroupType(GroupKind.SO_ODD, 4)
    s = GroupType(GroupKind.SP, 5)
    oe = GroupType(GroupKind.O_EVEN, 6)
    assert so.r_factor is RGFactor.WEDGE2
    assert s.r_factor is RGFactor.SYM2
    assert oe.r_factor is RGFactor.SYM2
    assert so.required_parity is Parity.SYMPLECTIC
    assert s.required_parity is Parity.ORTHOGONAL
    assert oe.required_parity is Parity.ORTHOGONAL


def test_group_type_validation():
    with pytest.raises(ValueError):
        GroupType(GroupKind.SP, 0)
    with pytest.raises(ValueError):
        GroupType(GroupKind.SP, 4, epsilon=0)
    with pytest.raises(TypeError):
        GroupType("Sp", 4)


# --- three-valued logic -------------------------------------------------------


def test_tribool_from_bool():
    assert TriBool.from_bool(True) is TriBool.TRUE
    assert TriBool.from_bool(False) is TriBool.FALSE


def test_kleene_and():
    T, F, U = TriBool.TRUE, TriBool.FALSE, TriBool.UNKNOWN
    assert kleene_and([]) is T
    assert kleene_and([T, T]) is T
    assert kleene_and([T, U]) is U
    assert kleene_and([U, F]) is F
    assert kleene_and([F, U]) is F
    assert kleene_and([T, F, T]) is F


# --- declared analytic facts ---------------------------------------------------


def _ctx():
    return LContext.build(
        universe=["rho1", "rho2", "rho3"],
        rg_pole_at_1=["rho1"],
        nonvanishing=[("rho1", "rho2")],
        vanishing=[("rho1", "rho1")],
    )


def test_lcontext_query_symmetry_nonzero():
    ctx = _ctx()
    assert ctx.query_central("rho1", "rho2") is CentralValue.NONZERO
    assert ctx.query_central("rho2", "rho1") is CentralValue.NONZERO


def test_lcontext_undeclared_pair_is_unknown():
    ctx = _ctx()
    assert ctx.query_central("rho2", "rho3") is CentralValue.UNKNOWN


def test_lcontext_declared_vanishing():
    ctx = _ctx()
    assert ctx.query_central("rho1", "rho1") is CentralValue.ZERO


def test_lcontext_rg_pole():
    ctx = _ctx()
    assert ctx.has_rg_pole_at_1("rho1") is True
    assert ctx.has_rg_pole_at_1("rho2") is False


def test_lcontext_unknown_label_raises():
    ctx = _ctx()
    with pytest.raises(ValueError):
        ctx.query_central("rho1", "nope")
    with pytest.raises(ValueError):
        ctx.has_rg_pole_at_1("nope")


def test_lcontext_build_validation():
    with pytest.raises(ValueError):
        LContext.build(["a"], rg_pole_at_1=["b"])
    with pytest.raises(ValueError):
        LContext.build(["a"], nonvanishing=[("a", "b")])
    with pytest.raises(ValueError):
        LContext.build(
            ["a", "b"], nonvanishing=[("a", "b")], vanishing=[("b", "a")]
        )


def test_violation_str():
    v = Violation("SomeCode", "detail here")
    assert str(v) == "[SomeCode] detail here"
