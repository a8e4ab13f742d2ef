"""Exact mutation engine for skew-symmetrizable integer matrices.

Checked-integer matrix mutation with framed C-matrix tracking, sign-coherence
checkers, irreducible block decomposition, and searchers for maximal green and
green-to-red sequences. Also ships a CLI (``greenseq``) and an HTTP explorer
service for a browser UI.
"""

from .coherence import (
    CoherenceVerdict,
    ColumnSign,
    Counterexample,
    block_invariance_check,
    check_uniform_sign_coherence,
    column_sign,
    column_sign_coherent,
    matrix_rank_exact,
    row_sign_coherent,
    scaling_commutation_check,
)
from .errors import (
    ArithmeticOverflow,
    GreenSeqError,
    IndexOutOfRange,
    InternalSignViolation,
    InvalidInputSequence,
    NonNegativityViolation,
    NotSignCoherentInput,
    NotSkewSymmetrizable,
    ParseError,
    ShapeViolation,
    SizeLimit,
)
from .matrices import (
    ExchangeMatrix,
    ExtendedMatrix,
    IntMatrix,
    as_extended,
    find_symmetrizer,
    frame,
    matmul,
    mutate,
    mutate_sequence,
    set_unbounded_entries,
    stack_attached,
    trace_sequence,
)
from .quiver import (
    BlockDecomposition,
    QuiverClass,
    QuiverGraph,
    classify,
    decompose,
    is_irreducible,
    reachability_sets,
    strongly_connected_components,
    underlying_quiver,
)
from .search import (
    GreenState,
    SearchOutcome,
    SequenceVerdict,
    compose_mgs,
    find_sequence,
    green_indices,
    reduce_and_search,
    split_mgs,
    verify_sequence,
)
from .serialize import MatrixDocument, emit_dot, parse_matrix, serialize_matrix

__version__ = "0.1.0"

__all__ = [
    "ArithmeticOverflow",
    "BlockDecomposition",
    "CoherenceVerdict",
    "ColumnSign",
    "Counterexample",
    "ExchangeMatrix",
    "ExtendedMatrix",
    "GreenSeqError",
    "GreenState",
    "IndexOutOfRange",
    "IntMatrix",
    "InternalSignViolation",
    "InvalidInputSequence",
    "MatrixDocument",
    "NonNegativityViolation",
    "NotSignCoherentInput",
    "NotSkewSymmetrizable",
    "ParseError",
    "QuiverClass",
    "QuiverGraph",
    "SearchOutcome",
    "SequenceVerdict",
    "ShapeViolation",
    "SizeLimit",
    "as_extended",
    "block_invariance_check",
    "check_uniform_sign_coherence",
    "classify",
    "column_sign",
    "column_sign_coherent",
    "compose_mgs",
    "decompose",
    "emit_dot",
    "find_sequence",
    "find_symmetrizer",
    "frame",
    "green_indices",
    "is_irreducible",
    "matmul",
    "matrix_rank_exact",
    "mutate",
    "mutate_sequence",
    "parse_matrix",
    "reachability_sets",
    "reduce_and_search",
    "row_sign_coherent",
    "scaling_commutation_check",
    "serialize_matrix",
    "set_unbounded_entries",
    "split_mgs",
    "stack_attached",
    "strongly_connected_components",
    "trace_sequence",
    "underlying_quiver",
    "verify_sequence",
]
