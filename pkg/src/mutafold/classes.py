"""Mutation-class enumeration and finiteness decisions.

The enumerator runs a breadth-first search over canonical keys with the
frontier sorted lexicographically at every level, so output order is
reproducible regardless of scheduling.  For connected diagrams of order at
least 3 the search is total: it either exhausts the class or finds a diagram
with an edge of weight greater than 4, which certifies an infinite class.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb
from typing import Callable, Dict, List, Optional, Tuple

from .diagram import Diagram, canonical_key, diagram_of, mutate_diagram, subdiagram
from .errors import BudgetExhausted, NotMutationFinite, OrderTooSmall
from .matrix import ExchangeMatrix, matrix_canonical_key, mutate_matrix


def default_max_nodes() -> int:
    env = os.environ.get("MUTAFOLD_MAX_NODES")
    return int(env) if env else 200_000


@dataclass
class ClassEnumeration:
    """Result of a class BFS: representatives in deterministic order."""

    representatives: List[bytes]
    witnesses: List
    complete: bool
    explored: int
    frontier_witness: Optional[List[int]] = None

    @property
    def size(self) -> int:
        return len(self.representatives)


@dataclass
class ClassSummary:
    """Finiteness verdict with optional exact size and classification."""

    finite: bool
    size: Optional[int] = None
    named_type: Optional[str] = None
    witness: Optional[List[int]] = None

    def to_dict(self) -> dict:
        return {
            "finite": self.finite,
            "size": self.size,
            "named_type": self.named_type,
            "witness": self.witness,
        }


def _heavy_edge_witness(S: Diagram, weight_cap: int) -> bool:
    """True when some edge of weight > cap lies in a component of order >= 3."""
    heavy = [(t, h) for t, h, w in S.edges if w > weight_cap]
    if not heavy:
        return False
    comps = S.components()
    size_of = {}
    for comp in comps:
        for v in comp:
            size_of[v] = len(comp)
    return any(size_of[t] >= 3 for t, _ in heavy)


def _bfs(
    seed,
    key_fn: Callable,
    mutate_fn: Callable,
    n: int,
    max_nodes: int,
    heavy_fn: Optional[Callable] = None,
) -> ClassEnumeration:
    seed_key = key_fn(seed)
    reps = [seed_key]
    wits = [seed]
    parent: Dict[bytes, Tuple[Optional[bytes], int]] = {seed_key: (None, 0)}
    if heavy_fn is not None and heavy_fn(seed):
        return ClassEnumeration(reps, wits, False, 1, frontier_witness=[])
    level = [(seed_key, seed)]
    explored = 1
    while level:
        level.sort(key=lambda kv: kv[0])
        nxt = []
        for key, obj in level:
            for k in range(1, n + 1):
                child = mutate_fn(obj, k)
                ckey = key_fn(child)
                if ckey in parent:
                    continue
                parent[ckey] = (key, k)
                reps.append(ckey)
                wits.append(child)
                explored += 1
                if heavy_fn is not None and heavy_fn(child):
                    path = [k]
                    at = key
                    while parent[at][0] is not None:
                        at, step = parent[at][0], parent[at][1]
                        path.append(step)
                    path.reverse()
                    return ClassEnumeration(
                        reps, wits, False, explored, frontier_witness=path
                    )
                if explored > max_nodes:
                    raise BudgetExhausted(
                        f"class enumeration exceeded {max_nodes} nodes",
                        explored=explored,
                    )
                nxt.append((ckey, child))
        level = nxt
    return ClassEnumeration(reps, wits, True, explored)


def enumerate_class_diagrams(
    S: Diagram,
    max_nodes: Optional[int] = None,
    weight_cap: int = 4,
) -> ClassEnumeration:
    """BFS of the diagram mutation class with canonical-key deduplication.

    Stops with an infiniteness witness as soon as an edge of weight > cap
    appears inside a connected component of order at least 3.
    """
    budget = max_nodes if max_nodes is not None else default_max_nodes()
    return _bfs(
        S,
        lambda d: canonical_key(d).bytes,
        mutate_diagram,
        S.n,
        budget,
        heavy_fn=lambda d: _heavy_edge_witness(d, weight_cap),
    )


def enumerate_class_matrices(
    B: ExchangeMatrix,
    max_nodes: Optional[int] = None,
    weight_cap: int = 4,
    sign_quotient: bool = False,
) -> ClassEnumeration:
    """BFS of the matrix mutation class up to simultaneous permutations."""
    budget = max_nodes if max_nodes is not None else default_max_nodes()
    return _bfs(
        B,
        lambda m: matrix_canonical_key(m, sign_quotient=sign_quotient),
        mutate_matrix,
        B.n,
        budget,
        heavy_fn=lambda m: _heavy_edge_witness(diagram_of(m), weight_cap),
    )


def _component_summaries(S: Diagram, max_nodes: Optional[int]) -> List[ClassSummary]:
    out = []
    for comp in S.components():
        sub = subdiagram(S, comp)
        if sub.n <= 2:
            enum = enumerate_class_diagrams(sub, max_nodes=max_nodes)
            out.append(ClassSummary(finite=True, size=enum.size))
            continue
        enum = enumerate_class_diagrams(sub, max_nodes=max_nodes)
        if enum.complete:
            out.append(ClassSummary(finite=True, size=enum.size))
        else:
            labels = sub.source_labels or tuple(range(1, sub.n + 1))
            witness = [labels[k - 1] for k in (enum.frontier_witness or [])]
            out.append(ClassSummary(finite=False, witness=witness))
    return out


def is_mutation_finite_diagram(
    S: Diagram, max_nodes: Optional[int] = None
) -> ClassSummary:
    """Total finiteness decision for a diagram.

    Components of order <= 2 are always finite; components of order >= 3 are
    decided by BFS with the weight-4 early exit.  The size reported for a
    disconnected diagram counts isomorphism classes of disjoint unions, which
    is a product of per-component counts with multiset correction.
    """
    comps = S.components()
    if len(comps) == 1:
        summaries = _component_summaries(S, max_nodes)
        return summaries[0]
    enums = []
    for comp in comps:
        sub = subdiagram(S, comp)
        enum = enumerate_class_diagrams(sub, max_nodes=max_nodes)
        if not enum.complete:
            labels = sub.source_labels or tuple(range(1, sub.n + 1))
            witness = [labels[k - 1] for k in (enum.frontier_witness or [])]
            return ClassSummary(finite=False, witness=witness)
        enums.append(frozenset(enum.representatives))
    groups: Dict[frozenset, int] = {}
    for keyset in enums:
        groups[keyset] = groups.get(keyset, 0) + 1
    size = 1
    for keyset, mult in groups.items():
        size *= comb(len(keyset) + mult - 1, mult)
    return ClassSummary(finite=True, size=size)


def is_mutation_finite_matrix(
    B: ExchangeMatrix, max_nodes: Optional[int] = None, with_size: bool = False
) -> ClassSummary:
    """Finiteness of a matrix class, decided on its diagram (Lemma: the two
    agree).  Matrix-class size is computed on request."""
    S = diagram_of(B)
    verdict = is_mutation_finite_diagram(S, max_nodes=max_nodes)
    if not verdict.finite:
        return ClassSummary(finite=False, witness=verdict.witness)
    if not with_size:
        return ClassSummary(finite=True)
    comps = S.components()
    if len(comps) == 1:
        enum = enumerate_class_matrices(B, max_nodes=max_nodes)
        return ClassSummary(finite=True, size=enum.size)
    groups: Dict[frozenset, int] = {}
    for comp in comps:
        idx = [v - 1 for v in comp]
        sub = ExchangeMatrix(
            [[B.rows[i][j] for j in idx] for i in idx], _trusted=True
        )
        enum = enumerate_class_matrices(sub, max_nodes=max_nodes)
        keyset = frozenset(enum.representatives)
        groups[keyset] = groups.get(keyset, 0) + 1
    size = 1
    for keyset, mult in groups.items():
        size *= comb(len(keyset) + mult - 1, mult)
    return ClassSummary(finite=True, size=size)


def classify_named_type(
    S: Diagram, max_nodes: Optional[int] = None, check_finite: bool = True
) -> Optional[str]:
    """Tag of the named mutation-finite class containing S, if any.

    Looks the canonical key up in the shipped class key-sets of the eighteen
    named diagrams; returns None for s-decomposable (and order <= 2) inputs.
    Raises NotMutationFinite if the precondition fails.
    """
    if check_finite and not is_mutation_finite_diagram(S, max_nodes=max_nodes).finite:
        raise NotMutationFinite("classify_named_type needs a mutation-finite diagram")
    from .named import named_class_tag

    return named_class_tag(S)


def is_mutation_finite_large(
    B: ExchangeMatrix, max_nodes: Optional[int] = None
) -> ClassSummary:
    """Submatrix criterion: for n >= 10, B is mutation-finite iff every
    principal 10x10 submatrix is.  Memoizes on diagram canonical keys and
    reports a witness subset on the infinite verdict."""
    from itertools import combinations

    n = B.n
    if n < 10:
        raise OrderTooSmall("criterion needs order at least 10")
    S = diagram_of(B)
    seen: Dict[bytes, bool] = {}
    for subset in combinations(range(1, n + 1), 10):
        sub = subdiagram(S, subset)
        key = canonical_key(sub).bytes
        if key not in seen:
            seen[key] = is_mutation_finite_diagram(sub, max_nodes=max_nodes).finite
        if not seen[key]:
            return ClassSummary(finite=False, witness=list(subset))
    return ClassSummary(finite=True)


def minimal_mutation_infinite_scan(
    n: int,
    weight_cap: int = 4,
    max_nodes: Optional[int] = None,
    max_candidates: int = 500_000,
) -> List[Diagram]:
    """All order-n diagrams (up to isomorphism) that are mutation-infinite
    while every proper subdiagram is mutation-finite; desk scale only.

    Grows connected mutation-finite diagrams order by order, so candidates of
    order n automatically have all order-(n-1) subdiagrams finite.
    """
    if n < 2:
        return []
    finite_by_order: Dict[int, List[Diagram]] = {
        1: [Diagram(1, [])],
    }
    for order in range(2, n + 1):
        seen: Dict[bytes, Diagram] = {}
        candidates = 0
        for base in finite_by_order[order - 1]:
            for attach in _attachments(base, weight_cap):
                candidates += 1
                if candidates > max_candidates:
                    raise BudgetExhausted(
                        f"minimal scan exceeded {max_candidates} candidates at order {order}"
                    )
                edges = list(base.edges) + [
                    (order if tail else v, v if tail else order, w)
                    for v, w, tail in attach
                ]
                try:
                    cand = Diagram(order, edges)
                except Exception:
                    continue
                from .diagram import check_realizable

                if not check_realizable(cand):
                    continue
                key = canonical_key(cand).bytes
                if key not in seen:
                    seen[key] = cand
        finite: List[Diagram] = []
        minimal_infinite: List[Diagram] = []
        for cand in seen.values():
            if not all(
                is_mutation_finite_diagram(
                    subdiagram(cand, [v for v in range(1, order + 1) if v != drop]),
                    max_nodes=max_nodes,
                ).finite
                for drop in range(1, order + 1)
            ):
                continue
            if is_mutation_finite_diagram(cand, max_nodes=max_nodes).finite:
                finite.append(cand)
            else:
                minimal_infinite.append(cand)
        finite_by_order[order] = finite
        if order == n:
            return sorted(minimal_infinite, key=lambda d: canonical_key(d).bytes)
    return []


def _attachments(base: Diagram, weight_cap: int):
    """Nonempty ways to join one new vertex to a connected base diagram.

    Yields lists of (existing vertex, weight, tail?) where tail? means the new
    vertex is the tail of the edge.
    """
    verts = list(range(1, base.n + 1))
    options: List[List[Optional[Tuple[int, int, bool]]]] = []
    for v in verts:
        opts: List[Optional[Tuple[int, int, bool]]] = [None]
        for w in range(1, weight_cap + 1):
            opts.append((v, w, True))
            opts.append((v, w, False))
        options.append(opts)

    def rec(i: int, chosen: List[Tuple[int, int, bool]]):
        if i == len(options):
            if chosen:
                yield list(chosen)
            return
        for opt in options[i]:
            if opt is None:
                yield from rec(i + 1, chosen)
            else:
                chosen.append(opt)
                yield from rec(i + 1, chosen)
                chosen.pop()

    yield from rec(0, [])
