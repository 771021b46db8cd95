"""Acceptance criteria: one test per headline requirement, with time budgets."""

import random
import time

from tauknot.alexander import (LaurentPoly, conway_skein_oracle, determinant,
                               state_sum_polynomial, symmetric_degree,
                               torus_alexander)
from tauknot.diagram import decorate, parse_pd
from tauknot.filtered import FilteredComplex
from tauknot.signature import seifert_signature, signature
from tauknot.states import (differential_admissible, essential_states,
                            enumerate_states)
from tauknot.tau import (TauCertificate, combine_connected_sum, combine_mirror,
                         genus_lower_bound, skein_propagate, tau_alternating,
                         tau_explicit_complex, tau_unique_state, tau_unknot,
                         unknotting_lower_bound)

from conftest import load_entry


class _Budget:
    def __init__(self, seconds):
        self.seconds = seconds
        self.start = time.monotonic()

    def check(self):
        elapsed = time.monotonic() - self.start
        assert elapsed < self.seconds, "over time budget: %.1fs" % elapsed


def test_criterion_01_10_139_unique_state_tau_4():
    budget = _Budget(10)
    entry = load_entry("10_139")
    dec = decorate(parse_pd(entry["pd"]), entry["decoration"])
    zero = [s for s in essential_states(dec) if s.M == 0]
    assert len(zero) == 1
    assert zero[0].A == 4
    cert = tau_unique_state(dec)
    assert cert is not None
    assert (cert.lower, cert.upper) == (4, 4)
    assert genus_lower_bound(cert) == 4
    assert unknotting_lower_bound(cert) == 4
    budget.check()


def test_criterion_02_10_152_unique_state_tau_minus_4():
    budget = _Budget(10)
    entry = load_entry("10_152")
    dec = decorate(parse_pd(entry["pd"]), entry["decoration"])
    zero = [s for s in essential_states(dec) if s.M == 0]
    assert len(zero) == 1
    assert zero[0].A == -4
    cert = tau_unique_state(dec)
    assert (cert.lower, cert.upper) == (-4, -4)
    assert genus_lower_bound(cert) == 4
    assert unknotting_lower_bound(cert) == 4
    budget.check()


def test_criterion_03_10_161_two_states_and_explicit_complex():
    budget = _Budget(10)
    entry = load_entry("10_161")
    dec = decorate(parse_pd(entry["pd"]), entry["decoration"])
    zero = sorted((s for s in essential_states(dec) if s.M == 0),
                  key=lambda s: s.A)
    assert [s.A for s in zero] == [-3, -2]
    b = zero[1]
    candidates = [s for s in essential_states(dec)
                  if s.M == 1 and s.A == -1
                  and differential_admissible(dec, s, b)]
    assert candidates
    model = FilteredComplex([("a", 0, -3), ("b", 0, -2), ("c", 1, -1)],
                            {"c": {"b": 1}})
    cert = tau_explicit_complex(entry["name"], model)
    assert (cert.lower, cert.upper) == (-3, -3)
    budget.check()


def test_criterion_04_torus_knot_degree_law():
    budget = _Budget(1)
    for p, q in ((2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5)):
        expected = (p * q - p - q + 1) // 2
        assert symmetric_degree(torus_alexander(p, q)) == expected
    budget.check()


def test_criterion_05_alternating_rule_on_corpus(corpus):
    budget = _Budget(5)
    checked = 0
    for entry in corpus:
        d = parse_pd(entry["pd"])
        if not (d.is_alternating() and d.is_reduced() and d.n <= 7):
            continue
        sig = signature(d)
        dec = decorate(d, entry["decoration"])
        for s in enumerate_states(dec):
            assert s.M - s.A == sig // 2, entry["name"]
        assert tau_alternating(d).value == -sig // 2, entry["name"]
        checked += 1
    assert checked >= 6
    budget.check()


def test_criterion_06_state_sum_calibration(corpus):
    budget = _Budget(60)
    for entry in corpus:
        d = parse_pd(entry["pd"])
        assert d.n <= 10
        dec = decorate(d, entry["decoration"])
        states = enumerate_states(dec)
        poly = state_sum_polynomial(dec)
        assert poly.is_symmetric(), entry["name"]
        assert poly.evaluate(1) == 1, entry["name"]
        assert poly == conway_skein_oracle(d), entry["name"]
        if d.is_alternating() and d.is_reduced():
            det, _ = determinant(d)
            assert len(states) == det, entry["name"]
    budget.check()


def test_criterion_07_concordance_algebra():
    budget = _Budget(1)
    model = FilteredComplex([("a", 0, 1), ("b", -1, 0), ("c", -2, -1)],
                            {"b": {"c": 1}})
    assert model.tensor(model).tau() == 2
    assert model.tensor(model.dual()).tau() == 0
    cert = tau_explicit_complex("trefoil", model)
    double = combine_connected_sum(cert, cert)
    assert (double.lower, double.upper) == (2, 2)
    cancel = combine_connected_sum(cert, combine_mirror(cert))
    assert (cancel.lower, cancel.upper) == (0, 0)
    budget.check()


def test_criterion_08_signature_checks(corpus):
    budget = _Budget(10)
    assert signature(parse_pd(load_entry("9_42")["pd"])) == 2
    for entry in corpus:
        d = parse_pd(entry["pd"])
        sig = signature(d)
        assert seifert_signature(d) == sig, entry["name"]
        _, sign = determinant(d)
        assert sign == (-1) ** ((sig // 2) % 2), entry["name"]
    budget.check()


def test_criterion_09_skein_propagation_to_unknot():
    budget = _Budget(1)
    entry = load_entry("10_139")
    changes = entry["known"]["unknotting"]
    assert len(changes) == 4
    cert = TauCertificate(entry["name"], 4, 4, "UniqueState")
    remaining = 4
    for _ in changes:
        cert = skein_propagate(cert, "pos_to_neg")
        remaining -= 1
        # the interval must still contain a value that can reach tau = 0
        # with the remaining positive-to-negative changes
        assert cert.lower <= remaining and cert.upper >= 0
    assert cert.lower <= 0 <= cert.upper
    back = tau_unknot()
    for _ in changes:
        back = skein_propagate(back, "neg_to_pos")
    assert back.lower <= 4 <= back.upper
    budget.check()


def _random_unknot_like(rng):
    a0 = rng.randint(-3, 3)
    gens = [("g0", 0, a0)]
    diff = {}
    for i in range(rng.randint(1, 4)):
        m = rng.randint(-2, 3)
        a_top = rng.randint(-3, 3)
        top, bot = "x%d" % i, "y%d" % i
        gens.append((top, m, a_top))
        gens.append((bot, m - 1, a_top - rng.randint(0, 2)))
        diff[top] = {bot: rng.choice([1, -1, 2])}
    return a0, FilteredComplex(gens, diff)


def test_criterion_10_property_suite_random_complexes():
    budget = _Budget(30)
    rng = random.Random(0)
    for _ in range(120):
        a0, c = _random_unknot_like(rng)
        assert c.homology() == {0: 1}
        # iota monotonicity in the filtration level
        flags = [c.iota_nontrivial(m) for m in range(-5, 6)]
        assert flags == sorted(flags)
        # tau is unchanged by the filtration-respecting acyclic pairs
        assert c.tau() == a0
        # interval-arithmetic soundness around the true value
        lo, hi = a0 - rng.randint(0, 2), a0 + rng.randint(0, 2)
        cert = TauCertificate("random", lo, hi, "SkeinInterval")
        assert cert.lower <= a0 <= cert.upper
        assert genus_lower_bound(cert) <= abs(a0)
        mirror_cert = combine_mirror(cert)
        assert mirror_cert.lower <= -a0 <= mirror_cert.upper
        down = skein_propagate(cert, "pos_to_neg")
        assert down.lower <= a0 - 1 and a0 <= down.upper
        up = skein_propagate(cert, "neg_to_pos")
        assert up.lower <= a0 and a0 + 1 <= up.upper
    budget.check()
