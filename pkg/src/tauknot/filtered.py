"""Filtered chain complexes over the rationals: homology, inclusion maps, tau."""

from fractions import Fraction


def _rank(rows):
    """Rank of a list of rational row vectors."""
    rows = [row[:] for row in rows if any(row)]
    rank = 0
    width = len(rows[0]) if rows else 0
    col = 0
    while rows and col < width:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / lead
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def _kernel_basis(rows):
    """Coefficient vectors spanning the kernel of the map sending basis i to rows[i]."""
    n = len(rows)
    width = len(rows[0]) if rows else 0
    aug = [rows[i][:] + [Fraction(1 if j == i else 0) for j in range(n)]
           for i in range(n)]
    rank = 0
    for col in range(width):
        pivot = next((i for i in range(rank, n) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        lead = aug[rank][col]
        for i in range(n):
            if i != rank and aug[i][col] != 0:
                f = aug[i][col] / lead
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[rank])]
        rank += 1
    return [row[width:] for row in aug[rank:]]


class FilteredComplex:
    """A chain complex over Q with a homological grading M and a filtration
    level A on each generator; differentials drop M by one and never raise A."""

    def __init__(self, generators, differential=None):
        self.gens = []
        self.M = {}
        self.A = {}
        for label, m, a in generators:
            label = str(label)
            if label in self.M:
                raise ValueError("duplicate generator label %r" % label)
            self.gens.append(label)
            self.M[label] = int(m)
            self.A[label] = int(a)
        self.diff = {}
        for src, row in (differential or {}).items():
            src = str(src)
            if src not in self.M:
                raise ValueError("differential source %r is not a generator" % src)
            clean = {}
            for dst, c in row.items():
                dst = str(dst)
                c = Fraction(c)
                if not c:
                    continue
                if dst not in self.M:
                    raise ValueError("differential target %r is not a generator" % dst)
                if self.M[dst] != self.M[src] - 1:
                    raise ValueError("differential %r -> %r does not drop M by one"
                                     % (src, dst))
                if self.A[dst] > self.A[src]:
                    raise ValueError("differential %r -> %r raises the filtration"
                                     % (src, dst))
                clean[dst] = c
            if clean:
                self.diff[src] = clean
        self._check_square_zero()

    def _check_square_zero(self):
        for src, row in self.diff.items():
            acc = {}
            for mid, c1 in row.items():
                for dst, c2 in self.diff.get(mid, {}).items():
                    acc[dst] = acc.get(dst, Fraction(0)) + c1 * c2
            if any(acc.values()):
                raise ValueError("differential does not square to zero at %r" % src)

    # ------------------------------------------------------------------

    def _level(self, m):
        return [g for g in self.gens if self.M[g] == m]

    def _boundary_rows(self, sources, targets):
        pos = {g: i for i, g in enumerate(targets)}
        rows = []
        for g in sources:
            row = [Fraction(0)] * len(targets)
            for dst, c in self.diff.get(g, {}).items():
                row[pos[dst]] = c
            rows.append(row)
        return rows

    def homology(self):
        """Ranks of homology by M level, as a dict with zero ranks omitted."""
        levels = sorted({self.M[g] for g in self.gens})
        rank_d = {}
        for m in levels:
            sources = self._level(m)
            targets = self._level(m - 1)
            if sources and targets:
                rank_d[m] = _rank(self._boundary_rows(sources, targets))
        out = {}
        for m in levels:
            h = len(self._level(m)) - rank_d.get(m, 0) - rank_d.get(m + 1, 0)
            if h:
                out[m] = h
        return out

    def iota_nontrivial(self, m):
        """Whether the filtration-level-m subcomplex carries the M=0 homology.

        Requires the total homology to be a single class at M=0; returns True
        when some M=0 cycle supported in filtration level <= m is not a
        boundary in the full complex.
        """
        if self.homology() != {0: 1}:
            raise ValueError("total homology is not one class at level 0")
        zero = self._level(0)
        targets = self._level(-1)
        sub = [g for g in zero if self.A[g] <= m]
        if not sub:
            return False
        if targets:
            kernel = _kernel_basis(self._boundary_rows(sub, targets))
        else:
            kernel = [[Fraction(1 if j == i else 0) for j in range(len(sub))]
                      for i in range(len(sub))]
        pos = {g: i for i, g in enumerate(zero)}
        cycles = []
        for combo in kernel:
            row = [Fraction(0)] * len(zero)
            for coeff, g in zip(combo, sub):
                row[pos[g]] = coeff
            cycles.append(row)
        boundaries = self._boundary_rows(self._level(1), zero)
        rank_b = _rank(boundaries)
        return _rank(boundaries + cycles) > rank_b

    def tau(self):
        """Least filtration level whose subcomplex carries the homology."""
        for m in sorted({self.A[g] for g in self._level(0)}):
            if self.iota_nontrivial(m):
                return m
        raise ValueError("no filtration level carries the homology")

    # ------------------------------------------------------------------

    def tensor(self, other):
        gens = []
        for g in self.gens:
            for h in other.gens:
                gens.append(("(%s)x(%s)" % (g, h),
                             self.M[g] + other.M[h], self.A[g] + other.A[h]))
        diff = {}
        for g in self.gens:
            for h in other.gens:
                row = {}
                for dst, c in self.diff.get(g, {}).items():
                    row["(%s)x(%s)" % (dst, h)] = c
                sign = -1 if self.M[g] % 2 else 1
                for dst, c in other.diff.get(h, {}).items():
                    key = "(%s)x(%s)" % (g, dst)
                    row[key] = row.get(key, Fraction(0)) + sign * c
                if row:
                    diff["(%s)x(%s)" % (g, h)] = row
        return FilteredComplex(gens, diff)

    def dual(self):
        gens = [(g + "*", -self.M[g], -self.A[g]) for g in self.gens]
        diff = {}
        for src, row in self.diff.items():
            for dst, c in row.items():
                diff.setdefault(dst + "*", {})[src + "*"] = c
        return FilteredComplex(gens, diff)

    # ------------------------------------------------------------------

    def to_json(self):
        return {
            "generators": [{"label": g, "M": self.M[g], "A": self.A[g]}
                           for g in self.gens],
            "differential": [{"from": src, "to": dst, "coeff": str(c)}
                             for src in self.gens if src in self.diff
                             for dst, c in sorted(self.diff[src].items())],
        }

    @classmethod
    def from_json(cls, data):
        gens = [(g["label"], g["M"], g["A"]) for g in data["generators"]]
        diff = {}
        for entry in data.get("differential", []):
            diff.setdefault(entry["from"], {})[entry["to"]] = Fraction(entry["coeff"])
        return cls(gens, diff)

    def __repr__(self):
        return "<FilteredComplex %d generators, %d differentials>" % (
            len(self.gens), sum(len(r) for r in self.diff.values()))


def homology(c):
    return c.homology()


def iota_nontrivial(c, m):
    return c.iota_nontrivial(m)


def tau_from_complex(c):
    return c.tau()


def tensor(c1, c2):
    return c1.tensor(c2)


def dual(c):
    return c.dual()
