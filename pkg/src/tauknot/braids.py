"""Diagram builders: braid closures, torus knots, and 2-bridge plats."""

from math import gcd

from .diagram import PlanarDiagram


class _UnionFind(dict):
    def find(self, x):
        self.setdefault(x, x)
        while self[x] != x:
            self[x] = self[self[x]]
            x = self[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self[ry] = rx
        return rx


def _relabel(quads, uf):
    """Map provisional edge labels to 1..2n by first appearance in the quadruples."""
    new = {}
    out = []
    for q in quads:
        row = []
        for e in q:
            r = uf.find(e)
            if r not in new:
                new[r] = len(new) + 1
            row.append(new[r])
        out.append(tuple(row))
    roots = {uf.find(x) for x in uf}
    if len(roots - set(new)) > 0:
        raise ValueError("closure has a crossing-free component")
    return out


def braid_pd(word, n_strands=None, name=None):
    """Closed-braid diagram of a braid word (letters ±1, ±2, ... act on adjacent strands).

    Strands run down the page; a positive letter puts the right-hand strand
    over the left as they swap.  The closure must be a single knot.
    """
    word = list(word)
    if not word or any(w == 0 for w in word):
        raise ValueError("braid word must be a nonempty list of nonzero letters")
    k = n_strands if n_strands is not None else max(abs(w) for w in word) + 1
    if any(abs(w) >= k for w in word):
        raise ValueError("braid letter out of range for %d strands" % k)
    init = list(range(1, k + 1))
    cur = init[:]
    next_label = k + 1
    quads = []
    for w in word:
        i = abs(w) - 1
        bl, br = next_label, next_label + 1
        next_label += 2
        if w > 0:
            quads.append((cur[i], cur[i + 1], br, bl))
        else:
            quads.append((cur[i + 1], br, bl, cur[i]))
        cur[i], cur[i + 1] = bl, br
    uf = _UnionFind()
    for x in range(1, next_label):
        uf.find(x)
    for j in range(k):
        uf.union(cur[j], init[j])
    return PlanarDiagram(_relabel(quads, uf), name=name)


def torus_pd(p, q, name=None):
    """The (p,q) torus knot as the closure of (s1 s2 ... s_{p-1})^q, all positive."""
    if p < 2 or q < 1 or gcd(p, q) != 1:
        raise ValueError("torus knot parameters must be coprime with p >= 2, q >= 1")
    word = [i for _ in range(q) for i in range(1, p)]
    return braid_pd(word, n_strands=p, name=name or "T(%d,%d)" % (p, q))


def _orient_and_emit(raw, name=None):
    """Turn direction-agnostic crossings into an oriented PlanarDiagram.

    Each raw crossing is (quad, over_diag): quad lists the four edge labels in
    rotational order, and the over-strand occupies slots {1,3} when over_diag
    is 1, slots {0,2} when it is 0.  The knot is walked to find each
    crossing's arrival slots, and every quadruple is rotated to start at its
    under-strand arrival.
    """
    inc = {}
    for v, (quad, _) in enumerate(raw):
        for s, e in enumerate(quad):
            inc.setdefault(e, []).append((v, s))
    for e, pairs in inc.items():
        if len(pairs) != 2:
            raise ValueError("edge %r does not appear exactly twice" % (e,))
    arrivals = {}
    e, head = 1, inc[1][0]
    count = 0
    while True:
        v, s = head
        arrivals.setdefault(v, []).append(s)
        count += 1
        t = (s + 2) % 4
        e = raw[v][0][t]
        pair = list(inc[e])
        pair.remove((v, t))
        head = pair[0]
        if e == 1 and head == inc[1][0]:
            break
        if count > 2 * len(raw):
            raise ValueError("strand walk does not close up")
    if count != 2 * len(raw):
        raise ValueError("plat closure is a link, not a knot")
    quads = []
    for v, (quad, over_diag) in enumerate(raw):
        under = (0, 2) if over_diag == 1 else (1, 3)
        slots = [s for s in arrivals[v] if s in under]
        assert len(slots) == 1, "crossing %d visited %r" % (v, arrivals[v])
        u = slots[0]
        quads.append(tuple(quad[(u + t) % 4] for t in range(4)))
    return PlanarDiagram(quads, name=name)


def rational_pd(coeffs, name=None):
    """Alternating 2-bridge diagram from a positive continued-fraction vector.

    Built as a 4-strand plat: block j twists strand pair (2,3) for even j and
    (1,2) for odd j, with the over-diagonal alternating so the result is an
    alternating diagram with sum(coeffs) crossings.
    """
    coeffs = list(coeffs)
    if not coeffs or any(not isinstance(a, int) or a < 1 for a in coeffs):
        raise ValueError("continued-fraction coefficients must be positive integers")
    label = name or "C(%s)" % ",".join(str(a) for a in coeffs)
    if len(coeffs) % 2 == 0:
        # same fraction, odd length: [..., x, 1] == [..., x+1]; the plat caps
        # close up to a knot only for odd-length vectors
        if coeffs[-1] == 1:
            coeffs = coeffs[:-2] + [coeffs[-2] + 1]
        else:
            coeffs = coeffs[:-1] + [coeffs[-1] - 1, 1]
    cur = [1, 1, 2, 2]
    next_label = 3
    raw = []
    for j, a in enumerate(coeffs):
        i = 1 if j % 2 == 0 else 0
        over_diag = 1 if j % 2 == 0 else 0
        for _ in range(a):
            bl, br = next_label, next_label + 1
            next_label += 2
            raw.append(((cur[i], cur[i + 1], br, bl), over_diag))
            cur[i], cur[i + 1] = bl, br
    uf = _UnionFind()
    for x in range(1, next_label):
        uf.find(x)
    uf.union(cur[0], cur[1])
    uf.union(cur[2], cur[3])
    fixed = _relabel([q for q, _ in raw], uf)
    raw = [(fixed[v], raw[v][1]) for v in range(len(raw))]
    return _orient_and_emit(raw, name=label)


def continuant(coeffs):
    """Numerator of the continued fraction [a_1, a_2, ..., a_m]."""
    p0, p1 = 0, 1
    for a in coeffs:
        p0, p1 = p1, a * p1 + p0
    return p1
