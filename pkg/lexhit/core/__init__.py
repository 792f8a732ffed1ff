"""
Algorithms of the lexhit package, as pure functions over the data models.
"""

from .hypergraph import (
    check_minimal,
    is_hitting_set,
    is_minimal_transversal,
    lex_compare,
    lex_key,
    lex_sorted,
    rank,
    reorder,
    restrict,
)
from .extension import (
    build_witness_systems,
    extend_decide,
    mcif_to_extension,
    reduce_to_mcif,
)
from .enumeration import (
    LexEnumerator,
    enumerate_transversals,
    enumerate_under_order,
    lex_largest_greedy,
    lex_smallest,
    lex_smallest_contains,
    transversal_hypergraph,
    transversal_rank,
)
from .families import (
    if_to_mcif,
    mcif_to_if,
    solve_if_bruteforce,
    solve_mcif_bruteforce,
    wa3ns_to_if,
)
from .circuits import (
    check_weft3,
    circuit_to_formula,
    eval_wa3ns,
    evaluate_circuit,
    if_to_circuit,
    layer_counts,
    weft,
)
from .reference import bf_all_minimal_transversals, bf_extension, bf_weight_k_sat

__all__ = [
    "check_minimal",
    "is_hitting_set",
    "is_minimal_transversal",
    "lex_compare",
    "lex_key",
    "lex_sorted",
    "rank",
    "reorder",
    "restrict",
    "build_witness_systems",
    "extend_decide",
    "mcif_to_extension",
    "reduce_to_mcif",
    "LexEnumerator",
    "enumerate_transversals",
    "enumerate_under_order",
    "lex_largest_greedy",
    "lex_smallest",
    "lex_smallest_contains",
    "transversal_hypergraph",
    "transversal_rank",
    "if_to_mcif",
    "mcif_to_if",
    "solve_if_bruteforce",
    "solve_mcif_bruteforce",
    "wa3ns_to_if",
    "check_weft3",
    "circuit_to_formula",
    "eval_wa3ns",
    "evaluate_circuit",
    "if_to_circuit",
    "layer_counts",
    "weft",
    "bf_all_minimal_transversals",
    "bf_extension",
    "bf_weight_k_sat",
]
