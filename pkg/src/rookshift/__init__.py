"""Shift maps on full rook placements on Ferrers boards.

The library models placements of non-attacking rooks filling a Ferrers
board, the two greedy shift maps that trade an occurrence of k...21 for
one of (k-1)...21k, and the confluent rewriting system the shifts
generate.  An enumeration harness re-verifies the structural claims
exhaustively at desk scale.
"""

from .core import (
    Board,
    InvariantViolation,
    PatternSet,
    Permutation,
    Placement,
    admits_full_placement,
    avoids_all,
    conjugate_board,
    contains,
    cycled_pattern,
    decreasing_pattern,
    find_occurrences,
    inverse_placement,
    is_symmetric,
)
from .enumeration import (
    CountReport,
    MotzkinReport,
    WilfReport,
    count_avoiders,
    enumerate_placements,
    enumerate_symmetric_placements,
    ferrers_boards,
    motzkin,
    verify_bwx_bijection,
    verify_involution_transfer,
    verify_motzkin_identities,
    verify_wilf_set,
)
from .rewriting import (
    LocalCommutationReport,
    RewriteNode,
    ShiftProgram,
    apply_program,
    build_rewrite_graph,
    export_graph,
    global_commutation_check,
    local_commutation_check,
    normal_form,
)
from .shifts import (
    LabelSequence,
    ShiftStep,
    ShiftTrace,
    a_sequence,
    a_sequence_leftmost,
    a_shift,
    b_sequence,
    b_shift,
    inversion_number,
    label_sequence,
    phi_star,
    psi_star,
    successor_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "Board",
    "CountReport",
    "InvariantViolation",
    "LabelSequence",
    "LocalCommutationReport",
    "MotzkinReport",
    "PatternSet",
    "Permutation",
    "Placement",
    "RewriteNode",
    "ShiftProgram",
    "ShiftStep",
    "ShiftTrace",
    "WilfReport",
    "a_sequence",
    "a_sequence_leftmost",
    "a_shift",
    "admits_full_placement",
    "apply_program",
    "avoids_all",
    "b_sequence",
    "b_shift",
    "build_rewrite_graph",
    "conjugate_board",
    "contains",
    "count_avoiders",
    "cycled_pattern",
    "decreasing_pattern",
    "enumerate_placements",
    "enumerate_symmetric_placements",
    "export_graph",
    "ferrers_boards",
    "find_occurrences",
    "global_commutation_check",
    "inverse_placement",
    "inversion_number",
    "is_symmetric",
    "label_sequence",
    "local_commutation_check",
    "motzkin",
    "normal_form",
    "phi_star",
    "psi_star",
    "successor_sequence",
    "verify_bwx_bijection",
    "verify_involution_transfer",
    "verify_motzkin_identities",
    "verify_wilf_set",
]
