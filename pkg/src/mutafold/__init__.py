"""mutafold: exact mutation of skew-symmetrizable matrices and diagrams,
finite-mutation-type decisions, block decompositions, and unfoldings."""

from .classes import (
    ClassEnumeration,
    ClassSummary,
    classify_named_type,
    enumerate_class_diagrams,
    enumerate_class_matrices,
    is_mutation_finite_diagram,
    is_mutation_finite_large,
    is_mutation_finite_matrix,
    minimal_mutation_infinite_scan,
)
from .diagram import (
    CanonicalKey,
    Diagram,
    canonical_key,
    check_realizable,
    chordless_cycles,
    diagram_of,
    matrices_of,
    mutate_diagram,
    subdiagram,
)
from .matrix import (
    CartanCompanion,
    ExchangeMatrix,
    SkewSymmetrizer,
    cartan_companion,
    find_skew_symmetrizer,
    is_finite_type,
    matrix_canonical_key,
    mutate_matrix,
    validate,
)
from .sdecomp import (
    BlockPlacement,
    DecompositionWeight,
    SDecomposition,
    all_decompositions,
    decomposition_weight,
    is_s_decomposable,
    regular_irregular_split,
    validate_decomposition,
)
from .blocks import BlockTemplate, MatrixOption, block_catalog
from .unfolding import (
    ExceptionalUnfolding,
    UnfoldingSpec,
    VerificationReport,
    check_conditions,
    check_diagram_conditions,
    composite_mutation,
    exceptional_unfoldings,
    local_unfolding,
    nonlocal_unfolding,
    verify_unfolding,
)

__version__ = "0.1.0"
