"""Exact braid, monodromy and Alexander polynomial computations for the
Birman-Menasco families and their double branched covering links."""
from braidcover._backend import BACKEND
from braidcover.alexander import (
    alexander_of_closure,
    covering_invariants,
    linking_formula,
    theorem_dd,
    unknot_evidence,
)
from braidcover.braidword import (
    BraidWord,
    artin_action,
    b_family,
    format_braid_word,
    gamma_word,
    parse_braid_word,
    phi_psi_words,
    pi1_presentation,
)
from braidcover.cover import compare_closed_vs_oracle, homology_monodromy
from braidcover.exactmatrix import IntMatrix, char_poly, det
from braidcover.laurent import LaurentPoly

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BraidWord",
    "IntMatrix",
    "LaurentPoly",
    "alexander_of_closure",
    "artin_action",
    "b_family",
    "char_poly",
    "compare_closed_vs_oracle",
    "covering_invariants",
    "det",
    "format_braid_word",
    "gamma_word",
    "homology_monodromy",
    "linking_formula",
    "parse_braid_word",
    "phi_psi_words",
    "pi1_presentation",
    "theorem_dd",
    "unknot_evidence",
    "__version__",
]
