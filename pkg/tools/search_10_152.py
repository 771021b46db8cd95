"""Search for a 10-crossing negative 3-braid closure with determinant 11 whose
decorated diagram has a unique essential M=0 state at filtration level -4.

Mirrors of positive 3-braid closures at ten letters have genus 4, and the only
<=10 crossing knot with determinant 11 and genus 4 is the standard-table knot
10_152; see the notes ledger.
"""

import itertools
import time

from searchlib import (goeritz_determinant, is_cycle_perm, knot_closure,
                       signature, state_profile, switch_crossings, word_classes)
from tauknot.alexander import LaurentPoly, conway_polynomial, state_sum_polynomial
from tauknot.diagram import decorate


def main():
    t0 = time.monotonic()
    words = [w for w in itertools.product((-1, -2), repeat=10)
             if is_cycle_perm(w, 3)]
    reps = word_classes(words, 3)
    print("negative length-10 words with knot closure:", len(words),
          "classes:", len(reps))
    hits = []
    for w in sorted(reps):
        d = knot_closure(w)
        if d is None:
            continue
        if goeritz_determinant(d) != 11:
            continue
        sig = signature(d)
        marks = []
        for e in range(1, 2 * d.n + 1):
            prof = state_profile(decorate(d, e))
            if prof.get(0) == [-4]:
                marks.append(e)
        if marks:
            hits.append((list(w), sig, marks))
            print("HIT", list(w), "sigma", sig, "unique-state marks", marks)
    print("det-11 classes with a unique-state mark:", len(hits))
    if not hits:
        return
    word, sig, marks = hits[0]
    d = knot_closure(word)
    dec = decorate(d, marks[0])
    print("chosen word", word, "mark", marks[0])
    print("pd:", d.to_pd_text())
    print("sigma:", sig, " alexander:", state_sum_polynomial(dec))

    one = LaurentPoly({0: 1})
    unknotting = None
    for combo in itertools.combinations(range(d.n), 4):
        sw = switch_crossings(d, set(combo))
        if goeritz_determinant(sw) != 1:
            continue
        if conway_polynomial(sw) == one:
            unknotting = list(combo)
            break
    print("unknotting:", unknotting)
    print("elapsed %.1fs" % (time.monotonic() - t0))


if __name__ == "__main__":
    main()
