"""Shared helpers for the diagram searches in this directory."""

import sys
from fractions import Fraction

sys.path.insert(0, __file__.rsplit("/", 2)[0] + "/src")

from tauknot.braids import braid_pd
from tauknot.diagram import decorate
from tauknot.signature import _goeritz_minor, signature
from tauknot.states import (enumerate_states, essential_states,
                            differential_admissible)


def goeritz_determinant(d):
    """Knot determinant as |det| of the reduced Goeritz form (fast integer path)."""
    if d.n == 0:
        return 1
    H, _ = _goeritz_minor(d)
    n = len(H)
    M = [row[:] for row in H]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    assert det.denominator == 1
    return abs(int(det))


def knot_closure(word, n_strands=None):
    """Closure of the braid word when it is a knot diagram, else None."""
    try:
        return braid_pd(word, n_strands)
    except Exception:
        return None


def is_cycle_perm(word, n):
    """Whether the braid word's strand permutation is a single n-cycle."""
    perm = list(range(n))
    for letter in word:
        i = abs(letter) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen = 1
    j = perm[0]
    while j != 0:
        j = perm[j]
        seen += 1
    return seen == n


def word_classes(words, n):
    """Group braid words by closure symmetry (cyclic rotation and the flip
    i -> n-i), keeping one canonical representative per class."""
    seen = set()
    reps = []
    for w in words:
        variants = []
        for base in (tuple(w),
                     tuple((n - abs(x)) * (1 if x > 0 else -1) for x in w)):
            for r in range(len(base)):
                variants.append(base[r:] + base[:r])
        key = min(variants)
        if key not in seen:
            seen.add(key)
            reps.append(list(key))
    return reps


def switch_crossings(d, which):
    """New diagram with the crossings in `which` switched (over strand made
    under).  A rotated slot reading keeps the coordinates consistent."""
    from tauknot.diagram import PlanarDiagram
    quads = []
    for v in range(d.n):
        q = list(d.crossings[v])
        if v in which:
            if d.signs[v] == 1:
                q = [q[1], q[2], q[3], q[0]]
            else:
                q = [q[3], q[0], q[1], q[2]]
        quads.append(tuple(q))
    return PlanarDiagram(quads, name=(d.name or "diagram") + " switched")


def state_profile(dec):
    """Essential states of the decoration grouped as {M: sorted A list}."""
    out = {}
    for s in essential_states(dec):
        out.setdefault(s.M, []).append(s.A)
    for m in out:
        out[m].sort()
    return out
