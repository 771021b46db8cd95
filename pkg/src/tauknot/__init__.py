"""tauknot: combinatorial knot invariants from planar diagrams.

Grid-free Kauffman-state machinery for knots: PD codes, bigraded state
enumeration, essential intervals, multi-filtrations, Alexander polynomials,
signatures, filtered chain complexes, and tau certificates.
"""

from .alexander import (LaurentPoly, conway_polynomial, conway_skein_oracle,
                        determinant, state_sum_polynomial, symmetric_degree,
                        torus_alexander)
from .braids import braid_pd, continuant, rational_pd, torus_pd
from .diagram import (DecoratedDiagram, PlanarDiagram, compute_regions,
                      connected_sum, decorate, is_alternating, is_reduced,
                      mirror, parse_pd)
from .filtered import (FilteredComplex, dual, homology, iota_nontrivial,
                       tau_from_complex, tensor)
from .signature import seifert_alexander, seifert_signature, signature
from .states import (KauffmanState, alexander_grading, differential_admissible,
                     enumerate_states, essential_states,
                     maximal_essential_interval, maslov_grading,
                     multi_filtration)
from .tau import (HomologyClass, TauCertificate, combine_connected_sum,
                  combine_mirror, genus_lower_bound, skein_propagate,
                  tau_alternating, tau_explicit_complex, tau_lens_surgery,
                  tau_torus, tau_unique_state, tau_unknot,
                  unknotting_lower_bound)

__version__ = "0.1.0"

__all__ = [
    "PlanarDiagram", "DecoratedDiagram", "parse_pd", "compute_regions",
    "mirror", "is_alternating", "is_reduced", "decorate", "connected_sum",
    "KauffmanState", "enumerate_states", "alexander_grading", "maslov_grading",
    "maximal_essential_interval", "essential_states", "multi_filtration",
    "differential_admissible",
    "LaurentPoly", "symmetric_degree", "torus_alexander", "conway_polynomial",
    "conway_skein_oracle", "determinant", "state_sum_polynomial",
    "signature", "seifert_signature", "seifert_alexander",
    "braid_pd", "torus_pd", "rational_pd", "continuant",
    "FilteredComplex", "homology", "iota_nontrivial", "tau_from_complex",
    "tensor", "dual",
    "HomologyClass", "TauCertificate", "tau_unknot", "tau_alternating",
    "tau_torus", "tau_unique_state", "tau_lens_surgery",
    "tau_explicit_complex", "combine_connected_sum", "combine_mirror",
    "skein_propagate", "genus_lower_bound", "unknotting_lower_bound",
]
