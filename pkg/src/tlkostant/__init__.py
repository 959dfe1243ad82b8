"""Deciding Kostant positivity for fully commutative permutations.

The package builds the planar diagram calculus for the Temperley-Lieb
quotient of the symmetric group, classifies fully commutative elements by
a separation criterion on their diagrams, re-verifies the classification
against a representation-theoretic multiplicity oracle at small rank, and
reproduces the exact counting formulas for the elements involved.
"""

from .permutations import (
    Permutation,
    Word,
    Tableau,
    word_to_permutation,
    reduced_word,
    is_fully_commutative,
    rs_tableaux,
    rs_inverse,
    a_value,
    enumerate_fc,
)
from .laurent import LaurentPoly
from .diagrams import (
    TLDiagram,
    Arc,
    identity_diagram,
    generator,
    compose,
    flip,
    arcs,
    top_arcs,
    bottom_arcs,
    arc_count,
    diagram_of_fc,
    fc_of_diagram,
    render_ascii,
    render_svg,
)
from .algebra import (
    TLElement,
    basis_of,
    tle_multiply,
    coefficient_of,
    cells,
    duflo_involution,
    left_cell_involution,
    theta_nonzero,
)
from .kostant import (
    SpecialFactor,
    special_involution,
    is_distant,
    decompose_into_specials,
    KostantVerdict,
    is_kostant,
    negative_witness,
    maximal_parabolic_element,
)
from .verify import (
    multiplicity_at_one,
    check_lemma_multi,
    find_distinguisher,
    witness_postconditions,
    DistinguishReport,
    VerifySummary,
    verify_classification,
)
from .counting import (
    catalan,
    fibonacci_polynomial,
    hook_length_count,
    ki_of,
    mi_of,
    CountTable,
    counts_by_formula,
    counts_by_bruteforce,
    RecursionReport,
    recursion_checks,
    RatioReport,
    ratio_report,
)

__all__ = [
    "Permutation",
    "Word",
    "Tableau",
    "word_to_permutation",
    "reduced_word",
    "is_fully_commutative",
    "rs_tableaux",
    "rs_inverse",
    "a_value",
    "enumerate_fc",
    "LaurentPoly",
    "TLDiagram",
    "Arc",
    "identity_diagram",
    "generator",
    "compose",
    "flip",
    "arcs",
    "top_arcs",
    "bottom_arcs",
    "arc_count",
    "diagram_of_fc",
    "fc_of_diagram",
    "render_ascii",
    "render_svg",
    "TLElement",
    "basis_of",
    "tle_multiply",
    "coefficient_of",
    "cells",
    "duflo_involution",
    "left_cell_involution",
    "theta_nonzero",
    "SpecialFactor",
    "special_involution",
    "is_distant",
    "decompose_into_specials",
    "KostantVerdict",
    "is_kostant",
    "negative_witness",
    "maximal_parabolic_element",
    "multiplicity_at_one",
    "check_lemma_multi",
    "find_distinguisher",
    "witness_postconditions",
    "DistinguishReport",
    "VerifySummary",
    "verify_classification",
    "catalan",
    "fibonacci_polynomial",
    "hook_length_count",
    "ki_of",
    "mi_of",
    "CountTable",
    "counts_by_formula",
    "counts_by_bruteforce",
    "RecursionReport",
    "recursion_checks",
    "RatioReport",
    "ratio_report",
]
