"""Kauffman states of decorated diagrams: gradings, essential intervals, filtrations."""

# Per-quadrant grading weights, by crossing sign and corner index.  Each entry
# is (doubled Alexander weight, Maslov weight); corners not listed weigh zero.
_WEIGHTS = {
    1: ((1, 0), (0, 0), (-1, -1), (0, 0)),
    -1: ((0, 0), (1, 1), (0, 0), (-1, 0)),
}


class KauffmanState:
    """An injective assignment of one quadrant per crossing, avoiding the
    two regions adjacent to the marked edge."""

    def __init__(self, dec, corners):
        self.dec = dec
        d = dec.diagram
        self.corners = tuple(corners)
        self.regions = tuple(d.corner_region[(v, k)] for v, k in enumerate(self.corners))
        a2 = 0
        m = 0
        for v, k in enumerate(self.corners):
            wa, wm = _WEIGHTS[d.signs[v]][k]
            a2 += wa
            m += wm
        assert a2 % 2 == 0, "half-integer Alexander grading on a knot state"
        self.A = a2 // 2
        self.M = m

    def assignment(self):
        return {v: r for v, r in enumerate(self.regions)}

    def to_json(self):
        return {"assignment": {str(v): r for v, r in enumerate(self.regions)},
                "A": self.A, "M": self.M}

    def __eq__(self, other):
        return isinstance(other, KauffmanState) and self.corners == other.corners \
            and self.dec.diagram.crossings == other.dec.diagram.crossings

    def __hash__(self):
        return hash(self.corners)

    def __repr__(self):
        return "<KauffmanState A=%d M=%d regions=%s>" % (self.A, self.M, list(self.regions))


def enumerate_states(dec):
    """All Kauffman states of the decorated diagram, sorted by region assignment."""
    d = dec.diagram
    if d.n == 0:
        return [KauffmanState(dec, ())]
    banned = set(dec.marked_regions)
    options = []
    for v in range(d.n):
        options.append([k for k in range(4) if d.corner_region[(v, k)] not in banned])
    assigned = {}
    used = set()
    remaining = set(range(d.n))
    found = []

    def candidates(v):
        return [k for k in options[v] if d.corner_region[(v, k)] not in used]

    def rec():
        if not remaining:
            found.append(dict(assigned))
            return
        v = min(remaining, key=lambda w: (len(candidates(w)), w))
        cands = candidates(v)
        if not cands:
            return
        remaining.remove(v)
        for k in cands:
            r = d.corner_region[(v, k)]
            assigned[v] = k
            used.add(r)
            rec()
            del assigned[v]
            used.discard(r)
        remaining.add(v)

    rec()
    states = [KauffmanState(dec, tuple(a[v] for v in range(d.n))) for a in found]
    states.sort(key=lambda s: (s.regions, s.corners))
    return states


def alexander_grading(state):
    return state.A


def maslov_grading(state):
    return state.M


class EssentialInterval:
    """A contiguous edge interval around the marked edge, with one-sided
    constant pass type and pairwise-distinct interior crossings."""

    def __init__(self, dec, l, m, plus_type, minus_type):
        self.dec = dec
        self.l = l
        self.m = m
        self.plus_type = plus_type
        self.minus_type = minus_type
        N = dec.N
        self.indices = [i % N for i in range(-l, m + 1)]
        self.index_set = set(self.indices)
        self.edges = [dec.eps[i] for i in self.indices]
        self.interior = list(range(-l + 1, m + 1))

    @property
    def size(self):
        return self.l + self.m + 1

    def __repr__(self):
        return "<EssentialInterval edges=%s>" % self.edges


def maximal_essential_interval(dec):
    """Greedy maximal essential interval: grow the forward side, then the back side."""
    N = dec.N
    l = m = 0
    plus_type = minus_type = None
    interior_crossings = set()

    def try_add(side):
        nonlocal l, m, plus_type, minus_type
        if l + m + 2 > N:
            return False
        if side > 0:
            i = m + 1
            t = dec.pass_type(i)
            if plus_type is not None and t != plus_type:
                return False
        else:
            i = -l
            t = dec.pass_type(i)
            if minus_type is not None and t != minus_type:
                return False
        v = dec.passes[i % N][0]
        if v in interior_crossings:
            return False
        interior_crossings.add(v)
        if side > 0:
            m += 1
            plus_type = t
        else:
            l += 1
            minus_type = t
        return True

    if dec.diagram.n > 0:
        while try_add(+1):
            pass
        while try_add(-1):
            pass
    return EssentialInterval(dec, l, m, plus_type, minus_type)


def essential_states(dec, states=None):
    """States whose marker, at each interior pass of the maximal interval,
    sits in a region adjacent to the far edge of the pass."""
    E = maximal_essential_interval(dec)
    if states is None:
        states = enumerate_states(dec)
    d = dec.diagram
    N = dec.N
    out = []
    for x in states:
        ok = True
        for i in E.interior:
            v = dec.passes[i % N][0]
            far = dec.eps[i % N] if i >= 1 else dec.eps[(i - 1) % N]
            allowed = (d.edge_side_region[(far, "L")], d.edge_side_region[(far, "R")])
            if x.regions[v] not in allowed:
                ok = False
                break
        if ok:
            out.append(x)
    return out


def multi_filtration(dec, state):
    """Edge-indexed pair filtration of a state: list of (under, over) pairs,
    one per traversal position, starting with (0,0) at the marked edge."""
    a = b = 0
    out = [(0, 0)]
    for i in range(1, dec.N):
        v, s = dec.passes[i]
        k = state.corners[v]
        left = k in (s, (s + 1) % 4)
        if dec.pass_type(i) == "o":
            b += -1 if left else 1
        else:
            a += 1 if left else -1
        out.append((a, b))
    return out


def differential_admissible(dec, x, y, literal=False):
    """Whether a differential from state x to state y respects the filtration
    at every traversal position outside the maximal essential interval.

    The default test asks the filtration drop to be componentwise nonnegative;
    with literal=True it instead asks both components to be nonzero.
    """
    E = maximal_essential_interval(dec)
    mx = multi_filtration(dec, x)
    my = multi_filtration(dec, y)
    for i in range(dec.N):
        if i in E.index_set:
            continue
        da = mx[i][0] - my[i][0]
        db = mx[i][1] - my[i][1]
        if literal:
            if da == 0 or db == 0:
                return False
        else:
            if da < 0 or db < 0:
                return False
    return True
