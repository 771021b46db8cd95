"""Kauffman states, gradings, essential intervals, and filtrations."""

from tauknot.alexander import LaurentPoly, determinant, state_sum_polynomial
from tauknot.braids import braid_pd
from tauknot.diagram import decorate, parse_pd
from tauknot.states import (alexander_grading, differential_admissible,
                            enumerate_states, essential_states,
                            maximal_essential_interval, maslov_grading,
                            multi_filtration)

from conftest import TREFOIL_PD, load_diagram


def test_trefoil_state_gradings(trefoil):
    dec = decorate(trefoil, 1)
    states = enumerate_states(dec)
    assert len(states) == 3
    assert sorted((s.A, s.M) for s in states) == [(-1, -2), (0, -1), (1, 0)]


def test_states_are_injective_and_avoid_marked_regions():
    d = load_diagram("6_1")
    dec = decorate(d, 1)
    for s in enumerate_states(dec):
        assert len(set(s.regions)) == d.n
        assert not set(s.regions) & set(dec.marked_regions)


def test_state_count_equals_determinant_alternating():
    for name in ("3_1", "4_1", "5_2", "6_3", "7_5"):
        d = load_diagram(name)
        det, _ = determinant(d)
        assert len(enumerate_states(decorate(d, 1))) == det


def test_unknot_single_state():
    dec = decorate(parse_pd("U"), 1)
    states = enumerate_states(dec)
    assert len(states) == 1
    assert (states[0].A, states[0].M) == (0, 0)
    assert alexander_grading(states[0]) == 0
    assert maslov_grading(states[0]) == 0


def test_five_state_trefoil_presentation():
    # 4-crossing closed-braid presentation of the left trefoil: five states,
    # one canceling pair, and the essential filter removes it for interior marks
    d = braid_pd([-1, -2, -1, -2])
    assert d.n == 4
    full = sorted((s.A, s.M) for s in enumerate_states(decorate(d, 1)))
    assert full == [(-1, 0), (0, 0), (0, 1), (0, 1), (1, 2)]
    for mark in (3, 4, 5, 6):
        dec = decorate(d, mark)
        ess = sorted((s.A, s.M) for s in essential_states(dec))
        assert ess == [(-1, 0), (0, 1), (1, 2)]
    for mark in (1, 2, 7, 8):
        dec = decorate(d, mark)
        assert len(essential_states(dec)) == 5
    assert state_sum_polynomial(decorate(d, 1)) == LaurentPoly({1: 1, 0: -1, -1: 1})


def test_essential_interval_contains_marked_edge():
    for name in ("5_1", "7_7", "10_152"):
        d = load_diagram(name)
        dec = decorate(d, 1)
        E = maximal_essential_interval(dec)
        assert 0 in E.index_set
        assert E.size == len(E.index_set)
        interior = {dec.passes[i % dec.N][0] for i in E.interior}
        assert len(interior) == len(E.interior)


def test_essential_states_subset_of_states():
    d = load_diagram("10_139")
    dec = decorate(d, 8)
    states = enumerate_states(dec)
    ess = essential_states(dec)
    assert set(ess) <= set(states)
    assert len(ess) < len(states)


def test_multi_filtration_recursion_shape():
    d = load_diagram("7_3")
    dec = decorate(d, 1)
    for s in enumerate_states(dec)[:20]:
        f = multi_filtration(dec, s)
        assert len(f) == dec.N
        assert f[0] == (0, 0)
        for prev, cur in zip(f, f[1:]):
            da, db = cur[0] - prev[0], cur[1] - prev[1]
            assert (abs(da), abs(db)) in ((1, 0), (0, 1))


def test_multi_filtration_unknot_constant():
    dec = decorate(parse_pd("U"), 1)
    s = enumerate_states(dec)[0]
    assert multi_filtration(dec, s) == [(0, 0)]


def test_admissibility_on_10_161():
    d = load_diagram("10_161")
    dec = decorate(d, 5)
    ess = essential_states(dec)
    zero = sorted((s for s in ess if s.M == 0), key=lambda s: s.A)
    assert [s.A for s in zero] == [-3, -2]
    b = zero[1]
    cands = [s for s in ess if s.M == 1 and s.A == -1]
    assert cands
    directed = [c for c in cands
                if differential_admissible(dec, c, b)
                and not differential_admissible(dec, b, c)]
    assert directed


def test_admissibility_is_reflexive_outside_e():
    d = load_diagram("5_1")
    dec = decorate(d, 1)
    s = enumerate_states(dec)[0]
    assert differential_admissible(dec, s, s)
    assert not differential_admissible(dec, s, s, literal=True)
