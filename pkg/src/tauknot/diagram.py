"""Planar knot diagrams: PD parsing, regions, orientation, mirrors, sums."""

import json
import re

_PD_TOKEN = re.compile(r"^X\[(\d+),(\d+),(\d+),(\d+)\]$")


class PlanarDiagram:
    """An oriented knot diagram on the sphere, presented by PD quadruples.

    Each quadruple lists the four edge labels around a crossing in rotational
    order starting at the incoming under-strand, so slot 0 is the under-strand
    arrival, slot 2 its departure, and the over-strand occupies slots 1 and 3.
    The quadrant between slots k and k+1 (mod 4) is corner k; faces are traced
    by the next-slot rule, which fixes the orientation of the sphere once and
    for all.  A crossing is positive exactly when its over-strand arrives at
    slot 1.
    """

    def __init__(self, crossings, name=None):
        self.name = name
        self.crossings = [tuple(int(x) for x in q) for q in crossings]
        for q in self.crossings:
            if len(q) != 4 or any(x < 1 for x in q):
                raise ValueError("bad crossing quadruple %r" % (q,))
        self.n = len(self.crossings)
        self.edge_count = 2 * self.n if self.n else 1
        self._check_labels()
        self.incidences = self._collect_incidences()
        self._check_connected()
        self.over_in = self._orient()
        self.signs = [1 if s == 1 else -1 for s in self.over_in]
        self.head_of = self._edge_heads()
        self._check_single_component()
        self._trace_regions()

    # ------------------------------------------------------------------
    # validation and derived structure

    def _check_labels(self):
        seen = {}
        for q in self.crossings:
            for e in q:
                seen[e] = seen.get(e, 0) + 1
        if self.n == 0:
            return
        bad = sorted(set([e for e in range(1, 2 * self.n + 1) if seen.get(e, 0) != 2]
                         + [e for e in seen if not 1 <= e <= 2 * self.n]))
        if bad:
            raise ValueError("edges %s do not appear exactly twice among labels 1..%d"
                             % (bad, 2 * self.n))

    def _collect_incidences(self):
        inc = {}
        for v, q in enumerate(self.crossings):
            for s, e in enumerate(q):
                inc.setdefault(e, []).append((v, s))
        return inc

    def _check_connected(self):
        if self.n <= 1:
            return
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for e in self.crossings[v]:
                for w, _ in self.incidences[e]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        if len(seen) != self.n:
            raise ValueError("diagram is disconnected")

    def _orient(self):
        """Decide, per crossing, whether the over-strand arrives at slot 1 or 3."""
        if self.n == 0:
            return []
        over_in = [None] * self.n

        def arrival(v, s):
            # True/False when decidable, None while it depends on an unset crossing
            if s == 0:
                return True
            if s == 2:
                return False
            if over_in[v] is None:
                return None
            return s == over_in[v]

        def set_arrival(v, s, val):
            want = s if val else (s ^ 2)
            if over_in[v] is None:
                over_in[v] = want
                return True
            if over_in[v] != want:
                raise ValueError("inconsistent orientation at crossing %d" % v)
            return False

        edges = sorted(self.incidences)
        changed = True
        while True:
            while changed:
                changed = False
                for e in edges:
                    (v1, s1), (v2, s2) = self.incidences[e]
                    a1, a2 = arrival(v1, s1), arrival(v2, s2)
                    if a1 is None and a2 is None:
                        continue
                    if a1 is None:
                        changed |= set_arrival(v1, s1, not a2)
                    elif a2 is None:
                        changed |= set_arrival(v2, s2, not a1)
                    elif a1 == a2:
                        raise ValueError("inconsistent orientation at edge %d" % e)
            if all(o is not None for o in over_in):
                break
            # ambiguous remainder: fix the first undecided edge in label order
            for e in edges:
                (v1, s1), (v2, s2) = self.incidences[e]
                if arrival(v1, s1) is None and arrival(v2, s2) is None:
                    set_arrival(v1, s1, True)
                    changed = True
                    break
            assert changed
        for e in edges:
            (v1, s1), (v2, s2) = self.incidences[e]
            if arrival(v1, s1) == arrival(v2, s2):
                raise ValueError("inconsistent orientation at edge %d" % e)
        return over_in

    def _edge_heads(self):
        heads = {}
        for e, incs in self.incidences.items():
            arr = [(v, s) for v, s in incs
                   if s == 0 or (s % 2 == 1 and s == self.over_in[v])]
            if len(arr) != 1:
                raise ValueError("inconsistent orientation at edge %d" % e)
            heads[e] = arr[0]
        return heads

    def next_edge(self, e):
        """The edge the knot enters after traversing e."""
        if self.n == 0:
            return e
        v, s = self.head_of[e]
        return self.crossings[v][(s + 2) % 4]

    def _check_single_component(self):
        if self.n == 0:
            return
        e = 1
        count = 0
        while True:
            e = self.next_edge(e)
            count += 1
            if e == 1:
                break
            if count > self.edge_count:
                raise ValueError("edge traversal does not close up")
        if count != self.edge_count:
            raise ValueError("diagram has more than one strand component; only knots are supported")

    def _trace_regions(self):
        """Trace the faces of the diagram and index them deterministically."""
        if self.n == 0:
            self.regions = [[(1, "L")], [(1, "R")]]
            self.edge_side_region = {(1, "L"): 0, (1, "R"): 1}
            self.corner_region = {}
            self.region_corners = [[], []]
            return
        head_index = {e: incs.index(self.head_of[e]) for e, incs in self.incidences.items()}
        visited = set()
        faces = []
        for e0 in sorted(self.incidences):
            for t0 in (0, 1):
                if (e0, t0) in visited:
                    continue
                boundary = []
                corners = []
                e, t = e0, t0
                while (e, t) not in visited:
                    visited.add((e, t))
                    boundary.append((e, "L" if t == head_index[e] else "R"))
                    v, p = self.incidences[e][t]
                    corners.append((v, p))
                    q = (p + 1) % 4
                    f = self.crossings[v][q]
                    e, t = f, 1 - self.incidences[f].index((v, q))
                faces.append((boundary, corners))
        if len(faces) != self.n + 2:
            raise ValueError("face count %d does not match %d: the rotation data is not planar"
                             % (len(faces), self.n + 2))
        faces.sort(key=lambda bc: sorted(bc[0]))
        self.regions = [b for b, _ in faces]
        self.region_corners = [c for _, c in faces]
        self.corner_region = {}
        self.edge_side_region = {}
        for rid, (boundary, corners) in enumerate(faces):
            for item in boundary:
                self.edge_side_region[item] = rid
            for vc in corners:
                self.corner_region[vc] = rid

    # ------------------------------------------------------------------
    # basic invariants and operations

    @property
    def writhe(self):
        return sum(self.signs)

    def is_alternating(self):
        """True when the strand alternates over/under along the knot."""
        if self.n == 0:
            return True
        for incs in self.incidences.values():
            if sorted(s % 2 for _, s in incs) != [0, 1]:
                return False
        return True

    def is_reduced(self):
        """True when no crossing has two opposite quadrants in the same region."""
        for v in range(self.n):
            if (self.corner_region[(v, 0)] == self.corner_region[(v, 2)]
                    or self.corner_region[(v, 1)] == self.corner_region[(v, 3)]):
                return False
        return True

    def mirror(self):
        """The reflected diagram: same shadow, every crossing switched."""
        quads = []
        for q, s in zip(self.crossings, self.signs):
            a, b, c, d = q
            quads.append((b, c, d, a) if s == 1 else (d, a, b, c))
        name = None
        if self.name:
            if self.name.endswith("-mirror"):
                name = self.name[:-len("-mirror")]
            else:
                name = self.name + "-mirror"
        return PlanarDiagram(quads, name=name)

    def to_pd_text(self):
        if self.n == 0:
            body = "U"
        else:
            body = " ".join("X[%d,%d,%d,%d]" % q for q in self.crossings)
        if self.name:
            return "name: %s\n%s" % (self.name, body)
        return body

    def to_json(self):
        return {"name": self.name, "pd": [list(q) for q in self.crossings]}

    def __repr__(self):
        label = self.name or "knot"
        return "<PlanarDiagram %s: %d crossings, writhe %+d>" % (label, self.n, self.writhe)


def parse_pd(text):
    """Parse a PD-code string or its JSON equivalent into a PlanarDiagram."""
    s = text.strip()
    if not s:
        raise ValueError("empty PD input")
    if s[0] in "{[":
        data = json.loads(s)
        if isinstance(data, list):
            data = {"pd": data}
        return PlanarDiagram(data.get("pd") or [], name=data.get("name"))
    name = None
    lines = s.splitlines()
    if lines and lines[0].lstrip().lower().startswith("name:"):
        name = lines[0].split(":", 1)[1].strip()
        s = "\n".join(lines[1:])
    tokens = s.split()
    if tokens == ["U"]:
        return PlanarDiagram([], name=name)
    quads = []
    for tok in tokens:
        m = _PD_TOKEN.match(tok)
        if not m:
            raise ValueError('malformed PD token "%s"' % tok)
        quads.append(tuple(int(g) for g in m.groups()))
    if not quads:
        raise ValueError("no crossings found (use the token U for the unknot)")
    return PlanarDiagram(quads, name=name)


def compute_regions(d):
    """The complementary regions of the diagram, as cyclic (edge, side) lists."""
    return d.regions


def mirror(d):
    return d.mirror()


def is_alternating(d):
    return d.is_alternating()


def is_reduced(d):
    return d.is_reduced()


class DecoratedDiagram:
    """A knot diagram with a marked edge and the induced edge traversal.

    Traversal position i holds edge eps[i]; passes[i] records the crossing
    between eps[i-1] and eps[i] together with the arrival slot of eps[i-1]
    there (indices mod N, so passes[0] sits between the last edge and the
    marked one).
    """

    def __init__(self, diagram, marked_edge=1):
        self.diagram = diagram
        if diagram.n > 0 and marked_edge not in diagram.incidences:
            raise ValueError("marked edge %r is not an edge of the diagram" % (marked_edge,))
        self.marked_edge = marked_edge
        d = diagram
        if d.n == 0:
            self.eps = [1]
            self.passes = []
            self.marked_regions = (0, 1)
        else:
            eps = [marked_edge]
            e = marked_edge
            while True:
                e = d.next_edge(e)
                if e == marked_edge:
                    break
                eps.append(e)
            assert len(eps) == d.edge_count
            self.eps = eps
            self.passes = [d.head_of[eps[i - 1]] for i in range(len(eps))]
            self.marked_regions = (d.edge_side_region[(marked_edge, "L")],
                                   d.edge_side_region[(marked_edge, "R")])
        self.N = len(self.eps)
        self.index_of = {e: i for i, e in enumerate(self.eps)}

    def pass_type(self, i):
        """'u' or 'o': how the strand passes its crossing at traversal point i."""
        _, s = self.passes[i % self.N]
        return "u" if s == 0 else "o"

    def __repr__(self):
        return "<DecoratedDiagram %r marked at %d>" % (self.diagram.name or "knot", self.marked_edge)


def decorate(diagram, marked_edge=1):
    """Mark an edge of a diagram, fixing the traversal used by state computations."""
    return DecoratedDiagram(diagram, marked_edge)


def _sum_name(d1, d2):
    a = d1.diagram.name or "knot"
    b = d2.diagram.name or "knot"
    return "%s # %s" % (a, b)


def connected_sum(d1, d2):
    """Splice two decorated diagrams at their marked edges."""
    if d2.diagram.n == 0:
        return DecoratedDiagram(PlanarDiagram(d1.diagram.crossings, name=_sum_name(d1, d2)),
                                d1.marked_edge)
    if d1.diagram.n == 0:
        return DecoratedDiagram(PlanarDiagram(d2.diagram.crossings, name=_sum_name(d1, d2)),
                                d2.marked_edge)
    a = d1.marked_edge
    off = d1.diagram.edge_count
    b = d2.marked_edge + off
    quads = [list(q) for q in d1.diagram.crossings]
    quads += [[x + off for x in q] for q in d2.diagram.crossings]
    n1 = d1.diagram.n
    ha_v, ha_s = d1.diagram.head_of[a]
    hb_v, hb_s = d2.diagram.head_of[d2.marked_edge]
    quads[ha_v][ha_s] = b       # the spliced strand leaves d2 and ends where a ended
    quads[n1 + hb_v][hb_s] = a  # a now runs from its old tail into d2
    pd = PlanarDiagram([tuple(q) for q in quads], name=_sum_name(d1, d2))
    return DecoratedDiagram(pd, b)
