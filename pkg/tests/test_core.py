from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from elep.core import (
    ElepPair,
    NotElepPair,
    NotOnTree,
    check_sides,
    diagonals_from_sides,
    metrics,
    pair_to_params,
    params_to_pair,
    rhombus_witness,
    sigma_from_residue,
)
from elep.numth import perfect_square, val3

from .oracles import brute_pairs


def test_check_sides_examples():
    assert check_sides(2, 4) == 12
    assert check_sides(2, 28) == 132
    assert check_sides(3, 6) is None
    assert check_sides(1, 1) is None


def test_check_sides_oracle_values():
    assert 9 * 4 * 16 - 12 * 36 == 144
    assert 9 * 4 * 784 - 12 * 900 == 17424
    assert perfect_square(9 * 9 * 36 - 12 * 81) is None


def test_pair_to_params_examples():
    assert pair_to_params(2, 4) == (1, 1, -1)
    assert pair_to_params(4, 14) == (1, 3, -1)
    assert pair_to_params(2, 28) == (5, 1, 1)
    with pytest.raises(NotElepPair):
        pair_to_params(3, 6)
    with pytest.raises(NotElepPair):
        pair_to_params(4, 2)


def test_params_to_pair_examples():
    assert params_to_pair(1, 1) == (2, 4)
    assert params_to_pair(5, 9) == (2, 268)
    assert params_to_pair(1, 41) == (52, 194)
    with pytest.raises(NotOnTree):
        params_to_pair(3, 1)
    with pytest.raises(ValueError):
        params_to_pair(2, 1)
    with pytest.raises(ValueError):
        params_to_pair(3, 9)


def test_metrics_root():
    m = metrics(ElepPair.from_sides(2, 4))
    assert (m.dl_sq, m.ds_sq) == (84, 36)
    assert (m.h_l, m.h_s) == (6, 3)
    assert (m.eta_l_sq, m.eta_s_sq) == (12, Fraction(36, 7))


def test_metrics_2_28():
    m = metrics(ElepPair.from_sides(2, 28))
    assert (m.dl_sq, m.ds_sq) == (2628, 2100)
    # (s, t) free route
    assert diagonals_from_sides(2, 28) == (2628, 2100)


def test_rhombus_witness_examples():
    assert rhombus_witness(3) is None
    assert rhombus_witness(4) is None


def test_brute_pairs_all_admissible_structure():
    pairs = brute_pairs(700)
    assert (2, 4) in pairs and (4, 14) in pairs and (2, 28) in pairs
    for a, b in pairs:
        p = ElepPair.from_sides(a, b)
        assert p.violations() == []
        assert (a + b) % 3 == 0
        assert sigma_from_residue(a, b) == p.sigma
        assert params_to_pair(p.s, p.t) == (a, b)


def test_from_params_agrees_with_from_sides():
    for a, b in brute_pairs(300):
        p = ElepPair.from_sides(a, b)
        assert ElepPair.from_params(p.s, p.t) == p


def test_pair_metrics_invariants():
    for a, b in brute_pairs(700):
        p = ElepPair.from_sides(a, b)
        m = metrics(p)
        assert m.dl_sq > m.ds_sq and m.h_l > m.h_s and m.eta_l_sq > m.eta_s_sq
        assert (m.dl_sq, m.ds_sq) == diagonals_from_sides(a, b)
        assert m.dl_sq * m.ds_sq == (a + b) ** 2 * (48 + 9 * (a - b) ** 2)
        assert (val3(m.dl_sq) + val3(m.ds_sq)) % 2 == 1
        assert 4 < m.eta_s_sq <= Fraction(36, 7)
        assert 4 < m.eta_l_sq <= 12


@given(st.integers(1, 10**4), st.integers(1, 10**4))
def test_no_rational_sine(a, b):
    # sin^2 = 12(a+b)^2 / (9a^2b^2) is never the square of a rational
    num, den = 12 * (a + b) ** 2, 9 * a * a * b * b
    f = Fraction(num, den)
    assert perfect_square(f.numerator) is None or perfect_square(f.denominator) is None


@given(st.integers(1, 10**9))
def test_no_rhombus_hypothesis(a):
    assert rhombus_witness(a) is None


def test_sin_theta_for_root_below_one():
    # 0 < sin^2 < 1 for every admissible pair so the parallelogram exists
    for a, b in brute_pairs(300):
        assert 12 * (a + b) ** 2 < 9 * a * a * b * b
