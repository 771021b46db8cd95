"""Property-based checks for polynomial arithmetic, diagrams, and complexes."""

import random

from hypothesis import given
from hypothesis import strategies as st

from tauknot.alexander import (LaurentPoly, conway_skein_oracle,
                               state_sum_polynomial)
from tauknot.braids import braid_pd
from tauknot.diagram import decorate, mirror
from tauknot.filtered import FilteredComplex
from tauknot.signature import signature
from tauknot.states import enumerate_states

coeff = st.integers(min_value=-6, max_value=6)
poly = st.dictionaries(st.integers(min_value=-4, max_value=4), coeff,
                       max_size=5).map(LaurentPoly)


@given(poly, poly, poly)
def test_laurent_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(poly)
def test_laurent_reciprocal_involution(p):
    assert p.reciprocal().reciprocal() == p
    assert (p * p.reciprocal()).is_symmetric()


@given(poly, poly)
def test_laurent_divexact_inverts_product(p, q):
    if q:
        assert (p * q).divexact(q) == p


@given(poly, st.integers(min_value=-3, max_value=3))
def test_laurent_shift_is_monomial_product(p, k):
    assert p.shift(k) == p * LaurentPoly({k: 1})


def _knot_words():
    rng = random.Random(7)
    words = []
    while len(words) < 12:
        length = rng.randint(3, 7)
        word = [rng.choice([1, -1]) * rng.randint(1, 2)
                for _ in range(length)]
        try:
            d = braid_pd(word)
        except Exception:
            continue
        words.append((word, d))
    return words


WORD_DIAGRAMS = _knot_words()


def test_braid_closure_writhe_and_regions():
    for word, d in WORD_DIAGRAMS:
        assert d.writhe == sum(1 if w > 0 else -1 for w in word)
        assert len(d.regions) == d.n + 2


def test_braid_closure_mirror_signature():
    for _, d in WORD_DIAGRAMS:
        assert signature(mirror(d)) == -signature(d)


def test_braid_closure_state_sum_is_normalized():
    for _, d in WORD_DIAGRAMS:
        p = state_sum_polynomial(decorate(d, 1))
        assert p.is_symmetric()
        assert p.evaluate(1) == 1
        assert p == conway_skein_oracle(d)


def test_braid_closure_state_gradings_consistent():
    for _, d in WORD_DIAGRAMS:
        dec = decorate(d, 1)
        total = LaurentPoly()
        for s in enumerate_states(dec):
            total += LaurentPoly({s.A: (-1) ** (s.M % 2)})
        assert total == state_sum_polynomial(dec)


def _random_unknot_like(rng):
    """A complex with unknot-type homology: one surviving generator plus
    filtration-respecting acyclic pairs, with triangular extra terms."""
    a0 = rng.randint(-3, 3)
    gens = [("g0", 0, a0)]
    diff = {}
    pairs = []
    for i in range(rng.randint(1, 4)):
        m = rng.randint(-2, 3)
        a_top = rng.randint(-3, 3)
        a_bot = a_top - rng.randint(0, 2)
        top, bot = "x%d" % i, "y%d" % i
        gens.append((top, m, a_top))
        gens.append((bot, m - 1, a_bot))
        diff[top] = {bot: rng.choice([1, -1, 2])}
        for j in range(i):
            pm, pa = pairs[j]
            if pm == m - 1 and pa <= a_top and rng.random() < 0.5:
                diff[top]["y%d" % j] = rng.choice([1, -1])
        pairs.append((m - 1, a_bot))
    return a0, FilteredComplex(gens, diff)


def test_random_complexes_tau_is_survivor_level():
    rng = random.Random(0)
    for _ in range(120):
        a0, c = _random_unknot_like(rng)
        assert c.homology() == {0: 1}
        assert c.tau() == a0
        flags = [c.iota_nontrivial(m) for m in range(-5, 6)]
        assert flags == sorted(flags)  # False before True, monotone


def test_random_complexes_tensor_adds_tau():
    rng = random.Random(1)
    for _ in range(25):
        a0, c = _random_unknot_like(rng)
        b0, d = _random_unknot_like(rng)
        assert c.tensor(d).tau() == a0 + b0
        assert c.dual().tau() == -a0
