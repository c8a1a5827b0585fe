import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pclab.valuation import (BoundCheck, bound_x_even, bound_x_odd, bound_y_even_even_level,
                             bound_y_even_odd_level, bound_y_odd, capped_valuation,
                             check_m_bounds, check_valuation_lemmas, valuation)
from pclab.vectors import VectorEngine


def test_valuation_examples():
    assert valuation(0) == math.inf
    assert valuation(49) == 2
    assert valuation(13825) == 1
    assert valuation(-343 * 5) == 3
    assert valuation(124754) == 2


@given(st.integers(min_value=0, max_value=40), st.integers(min_value=1, max_value=10**20))
def test_valuation_of_product(e, u):
    u = u * 7 + 3  # not divisible by 7
    assert valuation(7 ** e * u) == e


def test_capped_valuation():
    assert capped_valuation(0, 5) == 5
    assert capped_valuation(7 ** 7, 5) == 5
    assert capped_valuation(98, 5) == 2


def test_bound_examples():
    assert bound_y_odd(1, 1, 1) == 1          # y^(1)_{2,1} = 13825 has valuation 1
    assert bound_y_even_even_level(1, 0, 1) == 2  # y^(2)_{2,1} = 124754 has valuation 2
    assert bound_x_even(1, 1) == 2
    assert bound_x_odd(1, 1) == 2
    assert bound_y_even_odd_level(1, 0, 1) == 1


def test_vector_values_meet_bounds():
    e = VectorEngine()
    assert valuation(e.y_odd_vector(1, 2, 1)[1]) == 1
    assert valuation(e.y_even_vector(1, 2, 1)[1]) == 2


def test_x1_equalities():
    e = VectorEngine()
    x1 = e.x_vector(1, 2)
    assert (valuation(x1[1]), valuation(x1[2])) == (1, 2)


def test_boundcheck_semantics():
    c = BoundCheck("t", "demo", entries=[(1, 3, 2), (2, 1, 2)])
    assert c.violations == [(2, 1, 2)] and not c.passed and c.slack == [1, -1]
    eq = BoundCheck("t", "demo", entries=[(1, 3, 2)], equality=True)
    assert not eq.passed


def test_m_bounds(mtable):
    assert check_m_bounds(mtable, 20, 40).passed


@pytest.fixture(scope="module")
def lemma_checks():
    return {(c.lemma, c.label): c for c in check_valuation_lemmas(2, 2, 6)}


def test_all_bounds_except_base_case(lemma_checks):
    failing = {key for key, c in lemma_checks.items() if not c.passed}
    # the only entries below their bound come from x_1 = (7, 49) at j = 2
    assert failing == {("pi4+1", "y^(1)_1 (k=1, beta=0)"), ("pi4", "y^(2)_1 (k=1, beta=0)")}
    for key in failing:
        assert lemma_checks[key].violations == [(2, 2, 3)]


def test_bounds_are_tight(lemma_checks):
    for c in lemma_checks.values():
        if c.lemma != "pmij":
            assert 0 in c.slack


def test_cap_must_exceed_bounds():
    with pytest.raises(ValueError):
        check_valuation_lemmas(2, 2, 6, cap=8)
