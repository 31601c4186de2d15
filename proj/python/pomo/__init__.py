"""Morse matchings on finite posets.

Order complexes, exact integer homology via Smith normal form, admissible
Morse matchings, the cone-gluing filtration, and critical-point search.
The heavy lifting lives in the compiled extension ``pomo._pomo``.
"""

from ._pomo import (
    PomoError,
    Poset,
    PosetDocument,
    SimplicialComplex,
    cone,
    euler_characteristic,
    exhaustive_min,
    face_poset,
    filtration_report,
    greedy_collapse,
    greedy_matching,
    h_regular_check,
    height_function,
    induced_subposet,
    join,
    load_document,
    minimize_critical,
    opposite,
    order_complex,
    order_complex_of,
    parse_document,
    reduced_homology,
    run,
    serialize,
    simplicial_join,
    sphere_check,
    synthesize_function,
    triviality_verdict,
    validate_function,
    validate_matching,
)

__version__ = "0.1.0"

__all__ = [
    "PomoError",
    "Poset",
    "PosetDocument",
    "SimplicialComplex",
    "cone",
    "euler_characteristic",
    "exhaustive_min",
    "face_poset",
    "filtration_report",
    "greedy_collapse",
    "greedy_matching",
    "h_regular_check",
    "height_function",
    "induced_subposet",
    "join",
    "load_document",
    "minimize_critical",
    "opposite",
    "order_complex",
    "order_complex_of",
    "parse_document",
    "reduced_homology",
    "run",
    "serialize",
    "simplicial_join",
    "sphere_check",
    "synthesize_function",
    "triviality_verdict",
    "validate_function",
    "validate_matching",
    "__version__",
]
