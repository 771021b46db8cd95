"""Certificates bounding the concordance invariant tau, with genus and
unknotting-number consequences."""

from .alexander import state_sum_polynomial, symmetric_degree
from .signature import signature
from .states import enumerate_states, essential_states


_METHODS = (
    "Alternating",
    "TorusKnot",
    "LensSurgery",
    "UniqueState",
    "ExplicitComplex",
    "ConnectedSum",
    "Mirror",
    "SkeinInterval",
    "Unknot",
)


class HomologyClass:
    """A second-homology class in a connected sum of CP^2-bars, written in the
    standard generators."""

    def __init__(self, components):
        self.components = [int(s) for s in components]

    def l1_norm(self):
        return sum(abs(s) for s in self.components)

    def self_intersection(self):
        return -sum(s * s for s in self.components)

    def __repr__(self):
        return "HomologyClass(%r)" % (self.components,)


class TauCertificate:
    """An interval [lower, upper] certified to contain tau of a knot."""

    def __init__(self, knot, lower, upper, method, evidence=None):
        if method not in _METHODS:
            raise ValueError("unknown certificate method %r" % method)
        lower = int(lower)
        upper = int(upper)
        if lower > upper:
            raise ValueError("empty certificate interval [%d, %d]" % (lower, upper))
        self.knot = str(knot)
        self.lower = lower
        self.upper = upper
        self.method = method
        self.evidence = dict(evidence or {})

    @property
    def determined(self):
        return self.lower == self.upper

    @property
    def value(self):
        if not self.determined:
            raise ValueError("certificate interval [%d, %d] is not a point"
                             % (self.lower, self.upper))
        return self.lower

    def to_json(self):
        return {
            "knot": self.knot,
            "tau_lower": self.lower,
            "tau_upper": self.upper,
            "method": self.method,
            "evidence": self.evidence,
            "g4_lower": genus_lower_bound(self),
            "u_lower": unknotting_lower_bound(self),
        }

    def __repr__(self):
        return "<TauCertificate %s: [%d, %d] via %s>" % (
            self.knot, self.lower, self.upper, self.method)


# ----------------------------------------------------------------------
# direct certificates


def tau_unknot(name="unknot"):
    """The zero-crossing diagram has tau zero."""
    return TauCertificate(name, 0, 0, "Unknot")


def tau_alternating(diagram):
    """Tau of a reduced alternating diagram is minus half the signature."""
    if not diagram.is_alternating():
        raise ValueError("diagram is not alternating")
    if not diagram.is_reduced():
        raise ValueError("diagram is not reduced")
    sigma = signature(diagram)
    assert sigma % 2 == 0
    t = -sigma // 2
    return TauCertificate(diagram.name, t, t, "Alternating",
                          {"sigma": sigma})


def tau_torus(p, q, positive=True):
    """Tau of the (p,q) torus knot, or its mirror when positive is False."""
    p, q = int(p), int(q)
    assert p >= 2 and q >= 2
    t = (p * q - p - q + 1) // 2
    name = "T(%d,%d)" % (p, q)
    if not positive:
        t = -t
        name = "mirror " + name
    return TauCertificate(name, t, t, "TorusKnot",
                          {"p": p, "q": q, "positive": bool(positive)})


def tau_unique_state(dec):
    """When exactly one essential state sits in Maslov grading zero, tau is
    its Alexander grading.  Returns None when the hypothesis fails."""
    hits = [s for s in essential_states(dec) if s.M == 0]
    if len(hits) != 1:
        return None
    a = hits[0].A
    return TauCertificate(dec.diagram.name, a, a, "UniqueState",
                          {"A": a, "marked_edge": dec.eps[0]})


def tau_lens_surgery(dec):
    """Tau read off the Alexander polynomial, valid under the hypothesis that
    some integral surgery on the knot yields a lens space."""
    poly = state_sum_polynomial(dec)
    deg = symmetric_degree(poly)
    return TauCertificate(
        dec.diagram.name, deg, deg, "LensSurgery",
        {"hypothesis": "an integral surgery on the knot yields a lens space",
         "alexander_degree": deg})


def tau_explicit_complex(knot, complex_):
    """Tau computed from an explicitly given filtered complex."""
    t = complex_.tau()
    return TauCertificate(knot, t, t, "ExplicitComplex",
                          {"generators": len(complex_.gens)})


# ----------------------------------------------------------------------
# combination rules


def combine_connected_sum(c1, c2):
    """Tau adds under connected sum."""
    return TauCertificate(
        "%s # %s" % (c1.knot, c2.knot),
        c1.lower + c2.lower, c1.upper + c2.upper,
        "ConnectedSum",
        {"summands": [c1.to_json(), c2.to_json()]})


def combine_mirror(cert):
    """Tau negates under mirroring."""
    return TauCertificate(
        "mirror " + cert.knot,
        -cert.upper, -cert.lower,
        "Mirror",
        {"of": cert.to_json()})


def skein_propagate(cert, direction):
    """Propagate a certificate across a crossing change.

    direction "pos_to_neg": the certified knot has a positive crossing and the
    result describes the knot after switching it; "neg_to_pos" the reverse.
    Switching a positive crossing to negative keeps tau or drops it by one.
    """
    if direction == "pos_to_neg":
        lower, upper = cert.lower - 1, cert.upper
    elif direction == "neg_to_pos":
        lower, upper = cert.lower, cert.upper + 1
    else:
        raise ValueError("direction must be pos_to_neg or neg_to_pos")
    return TauCertificate(
        cert.knot + " (crossing changed)", lower, upper, "SkeinInterval",
        {"direction": direction, "of": cert.to_json()})


# ----------------------------------------------------------------------
# consequences


def genus_lower_bound(cert, homology_class=None):
    """Lower bound for the smooth four-genus implied by a tau certificate.

    Without a homology class this is max(lower, -upper, 0), using the bound
    for the knot and for its mirror.  With a class S in a blown-up four-ball
    it is the surface bound ceil((2*lower + |S| + S.S) / 2), floored at zero.
    """
    if homology_class is None:
        return max(cert.lower, -cert.upper, 0)
    num = (2 * cert.lower + homology_class.l1_norm()
           + homology_class.self_intersection())
    return max(0, -(-num // 2))


def unknotting_lower_bound(cert, homology_class=None):
    """Lower bound for the unknotting number; the genus bound applies since
    an unknotting sequence builds a surface of that genus."""
    return genus_lower_bound(cert, homology_class)
