"""Laurent polynomials, the skein oracle, and the state-sum Alexander polynomial."""

import pytest

from tauknot.alexander import (LaurentPoly, conway_polynomial,
                               conway_skein_oracle, determinant,
                               state_sum_polynomial, symmetric_degree,
                               torus_alexander)
from tauknot.diagram import decorate, mirror, parse_pd

from conftest import TREFOIL_PD, load_diagram

TREFOIL_DELTA = LaurentPoly({1: 1, 0: -1, -1: 1})


def test_laurent_basic_arithmetic():
    p = LaurentPoly({2: 1, 0: -3})
    q = LaurentPoly({-1: 2})
    assert p + q == LaurentPoly({2: 1, 0: -3, -1: 2})
    assert p - p == LaurentPoly()
    assert -q == LaurentPoly({-1: -2})
    assert p * q == LaurentPoly({1: 2, -1: -6})
    assert p * 0 == LaurentPoly()
    assert (p + q) * 1 == p + q


def test_laurent_shift_pow_reciprocal():
    p = LaurentPoly({1: 1, 0: -1})
    assert p.shift(2) == LaurentPoly({3: 1, 2: -1})
    assert p ** 3 == p * p * p
    assert p.reciprocal() == LaurentPoly({-1: 1, 0: -1})
    assert TREFOIL_DELTA.reciprocal() == TREFOIL_DELTA
    assert TREFOIL_DELTA.is_symmetric()
    assert not p.is_symmetric()


def test_laurent_evaluate_and_degree():
    assert TREFOIL_DELTA.evaluate(1) == 1
    assert TREFOIL_DELTA.evaluate(-1) == -3
    assert TREFOIL_DELTA.min_exp == -1
    assert TREFOIL_DELTA.max_exp == 1
    assert symmetric_degree(TREFOIL_DELTA) == 1
    assert symmetric_degree(LaurentPoly({0: 1})) == 0


def test_laurent_divexact():
    p = LaurentPoly({1: 1, 0: 2, -1: 1})
    q = LaurentPoly({1: 1, 0: 1})
    assert p.divexact(q) == LaurentPoly({0: 1, -1: 1})
    with pytest.raises(Exception):
        LaurentPoly({0: 3}).divexact(LaurentPoly({0: 2, 1: 1}))


def test_laurent_str_and_json():
    assert str(TREFOIL_DELTA) == "T^1 - 1 + T^-1"
    assert str(LaurentPoly()) == "0"
    assert LaurentPoly.from_json(TREFOIL_DELTA.to_json()) == TREFOIL_DELTA


def test_torus_alexander_small():
    assert torus_alexander(2, 3) == TREFOIL_DELTA
    p = torus_alexander(2, 5)
    assert p.is_symmetric() and p.evaluate(1) == 1
    assert symmetric_degree(p) == 2


def test_conway_oracle_unknot_and_trefoil():
    assert conway_polynomial(parse_pd("U")) == LaurentPoly({0: 1})
    assert conway_skein_oracle(parse_pd(TREFOIL_PD)) == TREFOIL_DELTA


def test_conway_oracle_mirror_invariant():
    d = load_diagram("5_2")
    assert conway_skein_oracle(mirror(d)) == conway_skein_oracle(d)


def test_state_sum_trefoil():
    dec = decorate(parse_pd(TREFOIL_PD), 1)
    assert state_sum_polynomial(dec) == TREFOIL_DELTA


def test_state_sum_independent_of_mark():
    d = load_diagram("6_3")
    polys = {str(state_sum_polynomial(decorate(d, e))) for e in range(1, 13)}
    assert len(polys) == 1


def test_determinant_values():
    assert determinant(parse_pd(TREFOIL_PD)) == (3, -1)
    assert determinant(load_diagram("4_1")) == (5, 1)
    assert determinant(parse_pd("U")) == (1, 1)


def test_unknot_state_sum():
    dec = decorate(parse_pd("U"), 1)
    assert state_sum_polynomial(dec) == LaurentPoly({0: 1})
