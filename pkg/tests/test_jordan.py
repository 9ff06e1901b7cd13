"""Blocks, quadruple coordinates, parity classification, decomposition,
domination, and structural parameter validation."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from apackets.core_types import MINUS, PLUS, GroupKind
from apackets.jordan import (
    ArthurParameter,
    JordanBlock,
    Quadruple,
    decompose,
    dominates,
    from_quadruple,
    good_parity,
    to_quadruple,
    validate_parameter,
)
from _helpers import (
    blk,
    h,
    h2,
    so_odd,
    soodd_param,
    sp,
    standard_labels,
)

LABELS = standard_labels()


# --- quadruple coordinates ----------------------------------------------------


def test_to_quadruple_examples():
    assert to_quadruple(3, 1) == Quadruple(h(1), h(1), PLUS)
    assert to_quadruple(1, 3) == Quadruple(h(1), h(1), MINUS)
    assert to_quadruple(2, 2) == Quadruple(h(1), h(0), PLUS)


def test_from_quadruple_examples():
    assert from_quadruple(h(1), h(1), PLUS) == (3, 1)
    assert from_quadruple(h(1), h(0), PLUS) == (2, 2)
    assert from_quadruple(h2(5), h2(1), MINUS) == (3, 4)


def test_to_quadruple_rejects_bad_sizes():
    with pytest.raises(ValueError):
        to_quadruple(0, 1)
    with pytest.raises(ValueError):
        to_quadruple(1, 0)


def test_from_quadruple_rejects_bad_coordinates():
    with pytest.raises(ValueError):
        from_quadruple(h(1), h(2), PLUS)  # A < B
    with pytest.raises(ValueError):
        from_quadruple(h(1), h2(-1), PLUS)  # B < 0
    with pytest.raises(ValueError):
        from_quadruple(h2(3), h(1), PLUS)  # A - B not an integer
    with pytest.raises(ValueError):
        from_quadruple(h(1), h(0), MINUS)  # zeta must be + at B = 0
    with pytest.raises(ValueError):
        from_quadruple(h(1), h(1), 0)  # not a sign


@given(st.integers(1, 50), st.integers(1, 50))
def test_quadruple_roundtrip(a, b):
    q = to_quadruple(a, b)
    assert from_quadruple(q.A, q.B, q.zeta) == (a, b)


@given(st.integers(1, 50), st.integers(1, 50))
def test_quadruple_shape_invariants(a, b):
    q = to_quadruple(a, b)
    assert q.B >= 0
    assert q.A >= q.B
    assert (q.A + q.B).doubled == 2 * (max(a, b) - 1)
    assert q.zeta * (a - b) >= 0
    if a == b:
        assert q.zeta == PLUS


# --- blocks ---------------------------------------------------------------------


def test_block_twist_coercion_and_bounds():
    assert blk("r", 1, 1).twist == Fraction(0)
    assert JordanBlock("r", 1, 1, Fraction(1, 4)).is_unitary is False
    assert blk("r", 2, 3).is_unitary is True
    with pytest.raises(ValueError):
        JordanBlock("r", 1, 1, Fraction(1, 2))
    with pytest.raises(ValueError):
        JordanBlock("r", 1, 1, Fraction(-3, 4))
    with pytest.raises(ValueError):
        JordanBlock("r", 0, 1)


def test_block_dim_multiplier():
    assert blk("r", 3, 4).dim_multiplier() == 12


def test_standard_dim():
    psi = soodd_param([blk("r", 2, 1), blk("rs", 1, 1)])
    assert psi.standard_dim(LABELS) == 1 * 2 + 2 * 1
    with pytest.raises(ValueError):
        ArthurParameter(so_odd(2), (blk("nope", 1, 1),)).standard_dim(LABELS)


# --- good parity -----------------------------------------------------------------


def test_good_parity_examples():
    g = so_odd(4)
    assert good_parity(blk("r", 2, 1), g, LABELS) is True
    assert good_parity(blk("r", 1, 1), g, LABELS) is False
    assert good_parity(blk("u", 2, 1), g, LABELS) is False  # not self-dual


def test_good_parity_twisted_is_false():
    g = so_odd(4)
    assert good_parity(JordanBlock("r", 2, 1, Fraction(1, 4)), g, LABELS) is False


def test_good_parity_requires_declared_parity():
    g = so_odd(4)
    with pytest.raises(ValueError):
        good_parity(blk("w", 2, 1), g, LABELS)
    with pytest.raises(ValueError):
        good_parity(blk("nope", 2, 1), g, LABELS)


@given(st.integers(1, 12), st.integers(1, 12))
def test_good_parity_swap_invariance(a, b):
    for g in (so_odd(4), sp(4)):
        assert good_parity(blk("r", a, b), g, LABELS) == good_parity(
            blk("r", b, a), g, LABELS
        )


@given(st.integers(1, 12), st.integers(1, 12))
def test_good_parity_for_dim1_orthogonal_label(a, b):
    # SOodd wants a symplectic product: exactly one even size.
    so_good = good_parity(blk("r", a, b), so_odd(4), LABELS)
    assert so_good == ((a % 2 == 0) != (b % 2 == 0))
    # Sp wants an orthogonal product: sizes of equal parity.
    sp_good = good_parity(blk("r", a, b), sp(4), LABELS)
    assert sp_good == ((a % 2) == (b % 2))


# --- decomposition ---------------------------------------------------------------


def test_decompose_all_good_parity():
    psi = soodd_param([blk("r", 2, 1), blk("r", 4, 1)])
    dec = decompose(psi, LABELS)
    assert set(dec.bp) == {blk("r", 2, 1), blk("r", 4, 1)}
    assert dec.mp_half == ()
    assert dec.nu_pos == ()


def test_decompose_twisted_pair_distinct_labels():
    psi = soodd_param(
        [
            JordanBlock("u", 2, 1, Fraction(1, 4)),
            JordanBlock("v", 2, 1, Fraction(-1, 4)),
        ]
    )
    dec = decompose(psi, LABELS)
    assert dec.bp == ()
    assert dec.mp_half == ()
    assert dec.nu_pos == (JordanBlock("u", 2, 1, Fraction(1, 4)),)


def test_decompose_twisted_pair_self_dual_label():
    psi = soodd_param(
        [
            JordanBlock("r", 2, 1, Fraction(1, 4)),
            JordanBlock("r", 2, 1, Fraction(-1, 4)),
        ]
    )
    dec = decompose(psi, LABELS)
    assert dec.nu_pos == (JordanBlock("r", 2, 1, Fraction(1, 4)),)


def test_decompose_bad_parity_double_copy():
    # (r,1,1) has orthogonal product, wrong for SOodd: pairs with its copy.
    psi = soodd_param([blk("r", 1, 1), blk("r", 1, 1)])
    dec = decompose(psi, LABELS)
    assert dec.bp == ()
    assert dec.mp_half == (blk("r", 1, 1),)
    assert dec.nu_pos == ()


def test_decompose_unpairable_raises():
    psi = soodd_param([JordanBlock("r", 2, 1, Fraction(1, 4))])
    with pytest.raises(ValueError):
        decompose(psi, LABELS)
    psi2 = soodd_param([blk("r", 1, 1)])  # lone bad-parity block
    with pytest.raises(ValueError):
        decompose(psi2, LABELS)


@given(
    st.lists(
        st.tuples(st.integers(1, 4), st.integers(1, 4)),
        min_size=0,
        max_size=3,
    ),
    st.lists(
        st.tuples(st.integers(1, 3), st.integers(1, 3)),
        min_size=0,
        max_size=2,
    ),
)
def test_decompose_partition_law(good_sizes, pair_sizes):
    # Build a parameter from good-parity blocks plus constructed dual pairs.
    blocks = []
    for a, b in good_sizes:
        if (a % 2 == 0) != (b % 2 == 0):
            blocks.append(blk("r", a, b))
    for a, b in pair_sizes:
        blocks.append(JordanBlock("u", a, b, Fraction(1, 4)))
        blocks.append(JordanBlock("v", a, b, Fraction(-1, 4)))
    if not blocks:
        blocks.append(blk("r", 2, 1))
    psi = soodd_param(blocks)
    dec = decompose(psi, LABELS)
    assert len(dec.bp) + 2 * len(dec.mp_half) + 2 * len(dec.nu_pos) == len(blocks)


# --- domination -------------------------------------------------------------------


def test_dominates_identity():
    blocks = [blk("r", 2, 1), blk("r", 4, 1)]
    assert dominates(blocks, blocks) == (0, 0)


def test_dominates_shift_example():
    # (A=1,B=0,+) is (2,2); (A=3,B=2,+) is (6,2): T = 2.
    assert dominates([blk("r", 6, 2)], [blk("r", 2, 2)]) == (2,)


def test_dominates_zeta_mismatch_is_none():
    # (4,2) has zeta +, (2,4) has zeta -.
    assert dominates([blk("r", 4, 2)], [blk("r", 2, 4)]) is None


def test_dominates_negative_shift_is_none():
    assert dominates([blk("r", 2, 2)], [blk("r", 6, 2)]) is None


def test_dominates_unequal_ab_shift_is_none():
    # A grows by 1 but B grows by 0: not a common shift.
    assert dominates([blk("r", 3, 3)], [blk("r", 2, 2)]) is None


def test_dominates_label_mismatch_is_none():
    assert dominates([blk("rs", 2, 2)], [blk("r", 2, 2)]) is None


def test_dominates_length_mismatch_raises():
    with pytest.raises(ValueError):
        dominates([blk("r", 2, 2)], [])


@given(
    st.lists(
        st.tuples(st.integers(1, 8), st.integers(1, 8), st.integers(0, 5)),
        min_size=1,
        max_size=4,
    )
)
def test_dominates_per_block_shift(rows):
    # Shifting a block's A and B by the same T translates (a, b) to
    # (a + 2T, b) when a >= b and to (a, b + 2T) otherwise.
    small, big, shifts = [], [], []
    for a, b, t in rows:
        small.append(blk("r", a, b))
        big.append(blk("r", a + 2 * t, b) if a >= b else blk("r", a, b + 2 * t))
        shifts.append(t)
    assert dominates(big, small) == tuple(shifts)


# --- structural validation ----------------------------------------------------------


def test_validate_parameter_clean():
    psi = soodd_param([blk("r", 3, 2), blk("r", 1, 2)])
    assert validate_parameter(psi, LABELS) == []


def test_validate_parameter_dimension_mismatch():
    psi = ArthurParameter(so_odd(5), (blk("r", 2, 1),))  # sums to 2, group wants 5
    vs = validate_parameter(psi, LABELS)
    assert [v.code for v in vs] == ["DimensionMismatch"]


def test_validate_parameter_unpaired_twisted_block():
    psi = ArthurParameter(
        so_odd(2), (JordanBlock("r", 2, 1, Fraction(1, 4)),)
    )
    vs = validate_parameter(psi, LABELS)
    assert "UnpairedBlock" in [v.code for v in vs]


def test_validate_parameter_unknown_label_suppresses_dim_check():
    psi = ArthurParameter(so_odd(5), (blk("nope", 2, 2),))
    vs = validate_parameter(psi, LABELS)
    assert [v.code for v in vs] == ["UnknownLabel"]


def test_validate_parameter_insufficient_declaration():
    psi = ArthurParameter(so_odd(4), (blk("w", 2, 2),))
    vs = validate_parameter(psi, LABELS)
    assert [v.code for v in vs] == ["InsufficientDeclaration"]


def test_validate_parameter_returns_multiple():
    psi = ArthurParameter(so_odd(99), (blk("r", 1, 1),))
    codes = sorted(v.code for v in validate_parameter(psi, LABELS))
    assert codes == ["DimensionMismatch", "UnpairedBlock"]
