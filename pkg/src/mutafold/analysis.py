"""State analysis shared by the CLI and the HTTP service.

An analysis depends only on the current matrix/diagram, never on the path
that produced it.
"""

from __future__ import annotations

from typing import Optional

from .classes import (
    classify_named_type,
    enumerate_class_matrices,
    is_mutation_finite_diagram,
)
from .diagram import Diagram, canonical_key, matrices_of
from .errors import BudgetExhausted
from .io import print_diagram, print_matrix
from .matrix import ExchangeMatrix
from .sdecomp import is_s_decomposable


def analyze_diagram(
    S: Diagram,
    B: Optional[ExchangeMatrix] = None,
    max_nodes: Optional[int] = None,
    with_matrix_size: bool = False,
) -> dict:
    """Full verdict record for one state."""
    summary = is_mutation_finite_diagram(S, max_nodes=max_nodes)
    dec = is_s_decomposable(S)
    named = None
    if summary.finite:
        named = classify_named_type(S, check_finite=False)
    out = {
        "diagram": print_diagram(S),
        "matrix": print_matrix(B) if B is not None else None,
        "finite": summary.finite,
        "size": summary.size,
        "named_type": named,
        "s_decomposable": dec is not None,
        "decomposition": dec.serialize() if dec else None,
        "witness": summary.witness,
        "canonical_key": canonical_key(S).hex(),
    }
    if with_matrix_size and summary.finite and B is not None:
        try:
            out["size_matrices"] = enumerate_class_matrices(
                B, max_nodes=max_nodes
            ).size
        except BudgetExhausted:
            out["size_matrices"] = None
    return out


def matrix_for(S: Diagram) -> ExchangeMatrix:
    """A fixed representative matrix of a realizable diagram."""
    mats = matrices_of(S)
    if not mats:
        raise ValueError("diagram has no skew-symmetrizable realization")
    return mats[0]
