"""Classify every 3-braid closure qualifying for the 10_161 state structure
by its (sigma, det, Alexander) profile, and eliminate profiles explained by
knots of nine or fewer crossings, composites, or known ten-crossing knots.

The slice writhe range [-8, -4] is forced for a 3-braid diagram of a tau=-3
knot by the braid-closure genus bound applied to the word and its reverse.
"""

import itertools
import time

from searchlib import (goeritz_determinant, is_cycle_perm, knot_closure,
                       signature, state_profile, switch_crossings, word_classes)
from tauknot.alexander import (LaurentPoly, conway_polynomial,
                               state_sum_polynomial, symmetric_degree,
                               torus_alexander)
from tauknot.diagram import decorate
from tauknot.states import differential_admissible, essential_states


def qualifying_mark(d):
    for e in range(1, 2 * d.n + 1):
        dec = decorate(d, e)
        ess = essential_states(dec)
        zero = sorted(s.A for s in ess if s.M == 0)
        if zero != [-3, -2]:
            continue
        b = next(s for s in ess if s.M == 0 and s.A == -2)
        for c in (s for s in ess if s.M == 1 and s.A == -1):
            if (differential_admissible(dec, c, b)
                    and not differential_admissible(dec, b, c)):
                return e
    return None


def known_small_alexander():
    """Symmetric Alexander polynomials of every knot type that could explain
    a hit: all knots through 9 crossings with |sigma| in {4,6} and determinant
    in {3,5,7,9,15}, their relevant connected sums, and the torus knots."""
    t = LaurentPoly({1: 1, 0: -1, -1: 1})            # trefoil
    out = {
        "5_1": torus_alexander(2, 5),
        "7_1": torus_alexander(2, 7),
        "8_19": torus_alexander(3, 4),
        "9_1": torus_alexander(2, 9),
        "3_1#3_1": t * t,
        "3_1#5_1": t * torus_alexander(2, 5),
        "3_1#3_1#3_1": t * t * t,
        "3_1": t,
    }
    return out


def main():
    t0 = time.monotonic()
    words = []
    for nneg in (7, 8, 9):
        for positions in itertools.combinations(range(10), nneg):
            for letters in itertools.product((1, 2), repeat=10):
                w = tuple(-letters[i] if i in positions else letters[i]
                          for i in range(10))
                if is_cycle_perm(w, 3):
                    words.append(w)
    reps = word_classes(words, 3)
    print("classes:", len(reps))
    profiles = {}
    for w in sorted(reps):
        d = knot_closure(w)
        if d is None or not d.is_reduced() or d.is_alternating():
            continue
        sig = signature(d)
        if abs(sig) > 6:
            continue
        mark = qualifying_mark(d)
        if mark is None:
            continue
        poly = state_sum_polynomial(decorate(d, mark))
        det = goeritz_determinant(d)
        key = (sig, det, str(poly))
        profiles.setdefault(key, []).append((list(w), mark))
    known = known_small_alexander()
    print("distinct (sigma, det, alexander) profiles:", len(profiles))
    survivors = []
    for (sig, det, poly_s), members in sorted(profiles.items()):
        poly = state_sum_polynomial(
            decorate(knot_closure(members[0][0]), members[0][1]))
        deg = symmetric_degree(poly)
        match = [name for name, kp in known.items()
                 if kp == poly or kp == poly.reciprocal()]
        tag = "EXPLAINED:" + ",".join(match) if match else "UNEXPLAINED"
        print("profile sigma=%d det=%d deg=%d  %-18s members=%d  %s"
              % (sig, det, deg, tag, len(members), poly_s))
        if not match:
            survivors.append(((sig, det, deg), members))
    print()
    one = LaurentPoly({0: 1})
    for (sig, det, deg), members in survivors:
        w, mark = members[0]
        d = knot_closure(w)
        unknot3 = None
        for combo in itertools.combinations(range(d.n), 3):
            sw = switch_crossings(d, set(combo))
            if goeritz_determinant(sw) != 1:
                continue
            if conway_polynomial(sw) == one:
                unknot3 = list(combo)
                break
        print("survivor sigma=%d det=%d deg=%d word=%s mark=%d unknot3=%s"
              % (sig, det, deg, w, mark, unknot3))
    print("elapsed %.1fs" % (time.monotonic() - t0))


if __name__ == "__main__":
    main()
