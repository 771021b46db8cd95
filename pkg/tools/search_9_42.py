"""Search for a 9-crossing braid closure with determinant 7, |signature| 2,
and symmetric Alexander degree 2.

A nine-crossing diagram bounds the crossing number by 9.  The only knots
through nine crossings with determinant 7 are 5_2, 7_1, and 9_42 (alternating
knots have determinant at least their crossing number, ruling everything else
out, and composites have composite determinant at least 9); 5_2 and 7_1 have
Alexander degrees 1 and 3, so degree 2 forces 9_42.  See the notes ledger.
"""

import itertools
import time

from searchlib import (goeritz_determinant, is_cycle_perm, knot_closure,
                       signature, word_classes)
from tauknot.alexander import state_sum_polynomial, symmetric_degree
from tauknot.diagram import decorate, mirror


def scan(n_strands, length):
    letters = [i for i in range(1, n_strands)] + [-i for i in range(1, n_strands)]
    words = [w for w in itertools.product(letters, repeat=length)
             if is_cycle_perm(w, n_strands)]
    reps = word_classes(words, n_strands)
    print("strands %d: %d knot words, %d classes" % (n_strands, len(words), len(reps)))
    hits = []
    for w in sorted(reps):
        d = knot_closure(w, n_strands)
        if d is None:
            continue
        if goeritz_determinant(d) != 7:
            continue
        sig = signature(d)
        if abs(sig) != 2:
            continue
        poly = state_sum_polynomial(decorate(d))
        if symmetric_degree(poly) != 2:
            continue
        hits.append((list(w), sig, poly))
        print("HIT", list(w), "sigma", sig, "alexander", poly)
        if len(hits) >= 4:
            break
    return hits


def main():
    t0 = time.monotonic()
    hits = scan(3, 9)
    if not hits:
        hits = scan(4, 9)
    print("hits:", len(hits), " elapsed %.1fs" % (time.monotonic() - t0))
    if not hits:
        return
    word, sig, poly = hits[0]
    d = knot_closure(word, 3 if max(abs(x) for x in word) <= 2 else 4)
    if sig != 2:
        d = mirror(d)
        sig = signature(d)
        poly = state_sum_polynomial(decorate(d))
    print("chosen word", word, "(mirrored)" if sig == 2 else "")
    print("pd:", d.to_pd_text())
    print("sigma:", sig, " det:", goeritz_determinant(d), " alexander:", poly)


if __name__ == "__main__":
    main()
