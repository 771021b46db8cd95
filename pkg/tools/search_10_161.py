"""Search for a 10-crossing mixed 3-braid closure realizing the documented
state structure of the standard-table knot 10_161: a decoration with exactly
two essential M=0 states at filtration levels -3 and -2, plus an essential
M=1 state at level -1 admitting a differential onto the level -2 state but
not conversely, and a three-change unknotting sequence."""

import itertools
import time

from searchlib import (goeritz_determinant, is_cycle_perm, knot_closure,
                       signature, state_profile, switch_crossings, word_classes)
from tauknot.alexander import LaurentPoly, conway_polynomial, state_sum_polynomial
from tauknot.diagram import decorate
from tauknot.states import differential_admissible, essential_states


def qualifying_marks(d):
    """Marks whose essential-state structure matches the target profile."""
    out = []
    for e in range(1, 2 * d.n + 1):
        dec = decorate(d, e)
        ess = essential_states(dec)
        zero = sorted(s.A for s in ess if s.M == 0)
        if zero != [-3, -2]:
            continue
        b = next(s for s in ess if s.M == 0 and s.A == -2)
        cands = [s for s in ess if s.M == 1 and s.A == -1]
        for c in cands:
            if (differential_admissible(dec, c, b)
                    and not differential_admissible(dec, b, c)):
                out.append((e, c, b))
                break
    return out


def main():
    t0 = time.monotonic()
    seen = 0
    words = []
    for nneg in (7, 8, 9):
        for positions in itertools.combinations(range(10), nneg):
            for letters in itertools.product((1, 2), repeat=10):
                w = tuple(-letters[i] if i in positions else letters[i]
                          for i in range(10))
                seen += 1
                if is_cycle_perm(w, 3):
                    words.append(w)
    print("scanned %d words, %d knot closures" % (seen, len(words)))
    reps = word_classes(words, 3)
    print("classes:", len(reps))
    hits = []
    for w in sorted(reps):
        d = knot_closure(w)
        if d is None:
            continue
        if not d.is_reduced() or d.is_alternating():
            continue
        sig = signature(d)
        if abs(sig) > 6:
            continue
        marks = qualifying_marks(d)
        if marks:
            det = goeritz_determinant(d)
            hits.append((list(w), sig, det, [m[0] for m in marks]))
            print("HIT", list(w), "sigma", sig, "det", det,
                  "marks", [m[0] for m in marks])
    print("qualifying classes:", len(hits), " elapsed %.1fs" % (time.monotonic() - t0))
    if not hits:
        return
    profiles = sorted({(s, det) for _, s, det, _ in hits})
    print("distinct (sigma, det) profiles:", profiles)
    word, sig, det, marks = hits[0]
    d = knot_closure(word)
    dec = decorate(d, marks[0])
    print("chosen word", word, "mark", marks[0])
    print("pd:", d.to_pd_text())
    poly = state_sum_polynomial(dec)
    print("sigma:", sig, "det:", det, " alexander:", poly)
    print("essential profile:", state_profile(dec))

    one = LaurentPoly({0: 1})
    unknotting = None
    for combo in itertools.combinations(range(d.n), 3):
        sw = switch_crossings(d, set(combo))
        if goeritz_determinant(sw) != 1:
            continue
        if conway_polynomial(sw) == one:
            unknotting = list(combo)
            break
    print("unknotting:", unknotting)
    print("total elapsed %.1fs" % (time.monotonic() - t0))


if __name__ == "__main__":
    main()
