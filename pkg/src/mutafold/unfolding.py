"""Unfoldings of skew-symmetrizable matrices and diagrams.

An unfolding pairs a base matrix B with a skew-symmetric cover C and an
index partition E_1..E_n, |E_i| = d_i.  The defining conditions:

  (1) every column of each E_i x E_j block of C sums to b_ij;
  (2) whenever b_ij >= 0, the E_i x E_j block is entrywise non-negative;

must persist under all composite mutations.  Note (1) + (2) force E_i x E_i
blocks to vanish, so composite mutations stay well-defined along any
verified trajectory.

Exhaustive verification walks the base's finite mutation class carrying the
cover along, deduplicating on a joint canonical form of the pair (base and
cover permuted simultaneously, respecting the partition), and checks the
matrix conditions plus the diagram-level conditions (A), (B), (C) at every
state.  Rejections carry a replayable mutation sequence.
"""

from __future__ import annotations

import random as _random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .blocks import MatrixOption, template_by_tag
from .canon import canonical_certificate
from .diagram import Diagram, diagram_of
from .errors import (
    BudgetExhausted,
    IllDefinedComposite,
    InconsistentWeights,
    InfiniteBaseClass,
    NotWeightOne,
    NotWeightTwo,
    PartitionMismatch,
    UnsupportedIrregularCase,
    ValidationError,
)
from .matrix import ExchangeMatrix, find_skew_symmetrizer, mutate_matrix
from .sdecomp import (
    SDecomposition,
    assign_matrix_options,
    decomposition_weight,
    superposed_matrix,
)
from .tables import EXCEPTIONAL_UNFOLDINGS

Partition = Tuple[Tuple[int, ...], ...]


class UnfoldingSpec:
    """Base matrix, index partition and skew-symmetric cover."""

    __slots__ = ("base", "partition", "cover")

    def __init__(self, base: ExchangeMatrix, partition: Sequence[Sequence[int]], cover: ExchangeMatrix):
        part: Partition = tuple(tuple(int(x) for x in grp) for grp in partition)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "partition", part)
        object.__setattr__(self, "cover", cover)
        if not cover.is_skew_symmetric():
            raise ValidationError("cover matrix is not skew-symmetric")
        if len(part) != base.n:
            raise PartitionMismatch(
                f"partition has {len(part)} groups for a base of order {base.n}"
            )
        flat = [x for grp in part for x in grp]
        if sorted(flat) != list(range(1, cover.n + 1)):
            raise PartitionMismatch(
                "partition groups must be disjoint and cover 1..m"
            )
        d = find_skew_symmetrizer(base).d
        sizes = tuple(len(grp) for grp in part)
        if sizes != d:
            raise PartitionMismatch(
                f"group sizes {sizes} differ from the skew-symmetrizer {d}"
            )

    def __setattr__(self, name, value):
        raise AttributeError("UnfoldingSpec is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UnfoldingSpec)
            and self.base == other.base
            and self.partition == other.partition
            and self.cover == other.cover
        )

    def __repr__(self) -> str:
        return (
            f"UnfoldingSpec(base order {self.base.n}, cover order {self.cover.n}, "
            f"partition {self.partition})"
        )


@dataclass
class VerificationReport:
    verdict: str  # "accepted" | "rejected" | "bounded-accepted"
    witness: Optional[List[int]] = None
    violated: Optional[Tuple[str, Tuple[int, int]]] = None
    depth_checked: int = 0
    policy: str = "exhaustive"
    seed: Optional[int] = None
    states: int = 0

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness": self.witness,
            "violated": list(self.violated) if self.violated else None,
            "depth_checked": self.depth_checked,
            "policy": self.policy,
            "seed": self.seed,
            "states": self.states,
        }


def _matrix_violation(
    B: ExchangeMatrix, C: ExchangeMatrix, partition: Partition
) -> Optional[Tuple[str, Tuple[int, int]]]:
    rows = C.rows
    for i, Ei in enumerate(partition):
        for j, Ej in enumerate(partition):
            b = B.rows[i][j]
            for col in Ej:
                if sum(rows[a - 1][col - 1] for a in Ei) != b:
                    return ("(1)", (i + 1, j + 1))
            if b >= 0:
                for a in Ei:
                    ra = rows[a - 1]
                    for col in Ej:
                        if ra[col - 1] < 0:
                            return ("(2)", (i + 1, j + 1))
    return None


def check_conditions(spec: UnfoldingSpec) -> VerificationReport:
    """Single-state check of conditions (1) and (2)."""
    viol = _matrix_violation(spec.base, spec.cover, spec.partition)
    if viol:
        return VerificationReport("rejected", witness=[], violated=viol)
    return VerificationReport("accepted", depth_checked=0)


def check_diagram_conditions(
    S: Diagram, partition: Sequence[Sequence[int]], Shat: Diagram
) -> VerificationReport:
    """Diagram-level unfolding conditions (A), (B), (C).

    Shat is a diagram of a skew-symmetric matrix, so an edge of weight w
    stands for isqrt(w) parallel arrows; the sums in (B) and the products in
    (C) count arrows, which is what makes (C) match the column-sum condition
    on matrices.
    """
    from math import isqrt

    part: Partition = tuple(tuple(grp) for grp in partition)
    adj = Shat.adj()
    for w in (e[2] for e in Shat.edges):
        if isqrt(w) ** 2 != w:
            raise ValidationError(
                "cover diagram has a non-square weight; not skew-symmetric"
            )
    for i, Ei in enumerate(part):
        for a in Ei:
            for b in Ei:
                if a < b and adj.get((a, b), 0):
                    return VerificationReport(
                        "rejected", witness=[], violated=("(A)", (i + 1, i + 1))
                    )
    totals: Dict[Tuple[int, int], int] = {}
    for i, Ei in enumerate(part):
        for j, Ej in enumerate(part):
            if i == j:
                continue
            sums = []
            signs = set()
            for a in Ei:
                s = 0
                for b in Ej:
                    w = adj.get((a, b), 0)
                    if w:
                        signs.add(1 if w > 0 else -1)
                        s += isqrt(abs(w))
                sums.append(s)
            if len(signs) > 1 or len(set(sums)) > 1:
                return VerificationReport(
                    "rejected", witness=[], violated=("(B)", (i + 1, j + 1))
                )
            totals[(i, j)] = sums[0] if sums else 0
    amb = S.adj()
    for i in range(len(part)):
        for j in range(i + 1, len(part)):
            prod = totals[(i, j)] * totals[(j, i)]
            if prod != abs(amb.get((i + 1, j + 1), 0)):
                return VerificationReport(
                    "rejected", witness=[], violated=("(C)", (i + 1, j + 1))
                )
    return VerificationReport("accepted")


def composite_mutation(spec: UnfoldingSpec, i: int) -> ExchangeMatrix:
    """Apply the commuting product of mutations over E_i to the cover."""
    Ei = spec.partition[i - 1]
    rows = spec.cover.rows
    for a in Ei:
        for b in Ei:
            if a != b and rows[a - 1][b - 1] != 0:
                raise IllDefinedComposite(
                    f"cover has an edge inside E_{i}; composite mutation undefined"
                )
    C = spec.cover
    for a in Ei:
        C = mutate_matrix(C, a)
    return C


def _state_violation(B, C, partition) -> Optional[Tuple[str, Tuple[int, int]]]:
    viol = _matrix_violation(B, C, partition)
    if viol:
        return viol
    rep = check_diagram_conditions(diagram_of(B), partition, diagram_of(C))
    return rep.violated


def _pair_certificate(B: ExchangeMatrix, C: ExchangeMatrix, partition: Partition):
    n, m = B.n, C.n
    big = 1 << 40
    M = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        Mi = M[i]
        for j in range(n):
            Mi[j] = B.rows[i][j]
    for a in range(m):
        Ma = M[n + a]
        for b in range(m):
            Ma[n + b] = C.rows[a][b]
    for i, Ei in enumerate(partition):
        for a in Ei:
            M[i][n + a - 1] = big
            M[n + a - 1][i] = -big
    return canonical_certificate(M)


def verify_unfolding(
    spec: UnfoldingSpec,
    policy: str = "exhaustive",
    depth: int = 8,
    trials: int = 64,
    seed: int = 0,
    max_nodes: Optional[int] = None,
) -> VerificationReport:
    """Check conditions (1), (2), (A), (B), (C) along mutation sequences.

    Exhaustive mode covers every state of the base's finite class (the cover
    is transported along a BFS tree; revisited base states are identified
    only when base and cover match under a simultaneous partition-respecting
    permutation, so no sequence escapes the check).  Bounded mode replays
    seeded random sequences and can only ever report bounded-accepted.
    """
    root_viol = _state_violation(spec.base, spec.cover, spec.partition)
    if root_viol:
        return VerificationReport(
            "rejected", witness=[], violated=root_viol, policy=policy
        )
    n = spec.base.n
    if policy == "exhaustive":
        from .classes import is_mutation_finite_matrix

        if not is_mutation_finite_matrix(spec.base).finite:
            raise InfiniteBaseClass(
                "base matrix is mutation-infinite; use the bounded policy"
            )
        budget = max_nodes if max_nodes is not None else 200_000
        seen = {_pair_certificate(spec.base, spec.cover, spec.partition)}
        frontier: List[Tuple[ExchangeMatrix, ExchangeMatrix, List[int]]] = [
            (spec.base, spec.cover, [])
        ]
        depth_reached = 0
        while frontier:
            nxt = []
            for B, C, path in frontier:
                state = UnfoldingSpec.__new__(UnfoldingSpec)
                object.__setattr__(state, "base", B)
                object.__setattr__(state, "partition", spec.partition)
                object.__setattr__(state, "cover", C)
                for i in range(1, n + 1):
                    B2 = mutate_matrix(B, i)
                    C2 = composite_mutation(state, i)
                    viol = _state_violation(B2, C2, spec.partition)
                    if viol:
                        return VerificationReport(
                            "rejected",
                            witness=path + [i],
                            violated=viol,
                            depth_checked=len(path) + 1,
                            policy=policy,
                            states=len(seen),
                        )
                    cert = _pair_certificate(B2, C2, spec.partition)
                    if cert not in seen:
                        seen.add(cert)
                        if len(seen) > budget:
                            raise BudgetExhausted(
                                f"pair-state search exceeded {budget} states",
                                explored=len(seen),
                            )
                        nxt.append((B2, C2, path + [i]))
            if nxt:
                depth_reached += 1
            frontier = nxt
        return VerificationReport(
            "accepted", depth_checked=depth_reached, policy=policy, states=len(seen)
        )
    if policy != "bounded":
        raise ValueError(f"unknown policy {policy!r}")
    rng = _random.Random(seed)
    for _ in range(trials):
        B, C = spec.base, spec.cover
        path: List[int] = []
        for _ in range(depth):
            i = rng.randint(1, n)
            path.append(i)
            state = UnfoldingSpec.__new__(UnfoldingSpec)
            object.__setattr__(state, "base", B)
            object.__setattr__(state, "partition", spec.partition)
            object.__setattr__(state, "cover", C)
            B = mutate_matrix(B, i)
            C = composite_mutation(state, i)
            viol = _state_violation(B, C, spec.partition)
            if viol:
                return VerificationReport(
                    "rejected",
                    witness=path,
                    violated=viol,
                    depth_checked=len(path),
                    policy=policy,
                    seed=seed,
                )
    return VerificationReport(
        "bounded-accepted", depth_checked=depth, policy=policy, seed=seed
    )


# -- constructions ------------------------------------------------------------


def _allocate(d: Sequence[int]) -> Tuple[Partition, List[int]]:
    part = []
    start = [0]
    at = 0
    for di in d:
        part.append(tuple(range(at + 1, at + di + 1)))
        at += di
    starts = [grp[0] - 1 for grp in part]
    return tuple(part), starts


def _add_cover(
    C: List[List[int]],
    option: MatrixOption,
    index_map: Dict[int, int],
) -> None:
    """Add a block cover into C through cover-index -> global-index map."""
    rows = option.cover.rows
    k = option.cover.n
    for a in range(1, k + 1):
        ga = index_map[a]
        for b in range(1, k + 1):
            x = rows[a - 1][b - 1]
            if x:
                C[ga - 1][index_map[b] - 1] += x


def local_unfolding(
    S: Diagram, dec: SDecomposition, B: Optional[ExchangeMatrix] = None
) -> UnfoldingSpec:
    """Blockwise unfolding for a weight-1 decomposition.

    Assembles the base by gluing the regular matrix option of every block
    (so each outlet's symmetrizer entry is 1) and the cover by gluing the
    block covers along outlet images.  When a base matrix is supplied it
    must match a regular-options assignment, otherwise NotWeightOne.
    """
    blocks = dec.real_blocks()
    if B is not None:
        choice = assign_matrix_options(dec, B)
        if any(opt.kind != "regular" for opt in choice.values()):
            raise NotWeightOne(
                "matrix assigns an irregular option; use nonlocal_unfolding"
            )
    else:
        choice = {
            idx: template_by_tag(p.tag).matrix_options[0]
            for idx, p in enumerate(blocks)
        }
    base = ExchangeMatrix(superposed_matrix(dec, S.n, choice))
    d = find_skew_symmetrizer(base).d
    partition, starts = _allocate(d)
    m = sum(d)
    C = [[0] * m for _ in range(m)]
    for idx, placement in enumerate(blocks):
        opt = choice[idx]
        tpart = opt.partition()
        index_map: Dict[int, int] = {}
        for t, v in enumerate(placement.vertices, start=1):
            slots = tpart[t - 1]
            if len(slots) != d[v - 1]:
                raise NotWeightOne(
                    f"vertex {v} needs {len(slots)} cover copies but has "
                    f"symmetrizer entry {d[v - 1]}"
                )
            for pos, ci in enumerate(slots):
                index_map[ci] = starts[v - 1] + pos + 1
        _add_cover(C, opt, index_map)
    return UnfoldingSpec(base, partition, ExchangeMatrix(C))


def nonlocal_unfolding(
    S: Diagram, dec: SDecomposition, B: ExchangeMatrix
) -> UnfoldingSpec:
    """Red/black construction for weight-2 decompositions.

    Supported irregular blocks: both weight-2 ĨII orientations and the
    double-symmetrizer Ṽ12 option; anything else raises
    UnsupportedIrregularCase, matching the case actually constructed.
    Regular components are unfolded locally and duplicated into a black and
    a red copy; each irregular block's cover splits into two same-type
    halves glued to the matching colors.
    """
    blocks = dec.real_blocks()
    choice = assign_matrix_options(dec, B)
    irregular = [i for i, o in choice.items() if o.kind == "irregular"]
    if not irregular:
        raise NotWeightTwo("no irregular blocks; use local_unfolding")
    w = decomposition_weight(S, dec, B).w
    if w != 2:
        raise NotWeightTwo(f"decomposition weight is {w}, not 2")
    for i in irregular:
        if not choice[i].nonlocal_ok:
            raise UnsupportedIrregularCase(
                f"irregular block {blocks[i].tag} with this matrix is outside "
                "the constructed case"
            )
    d = find_skew_symmetrizer(B).d
    partition, starts = _allocate(d)
    m = sum(d)
    C = [[0] * m for _ in range(m)]

    # regular components: union-find over regular placements sharing vertices
    regs = [i for i in range(len(blocks)) if choice[i].kind == "regular"]
    parent = {i: i for i in regs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner: Dict[int, int] = {}
    for i in regs:
        for v in blocks[i].vertices:
            if v in owner:
                parent[find(i)] = find(owner[v])
            else:
                owner[v] = i
    comps: Dict[int, List[int]] = {}
    for i in regs:
        comps.setdefault(find(i), []).append(i)

    for members in comps.values():
        verts = sorted({v for i in members for v in blocks[i].vertices})
        sub_rows = [[0] * len(verts) for _ in verts]
        pos = {v: k for k, v in enumerate(verts)}
        for i in members:
            opt = choice[i]
            pv = blocks[i].vertices
            for a in range(opt.base.n):
                for b in range(opt.base.n):
                    sub_rows[pos[pv[a]]][pos[pv[b]]] += opt.base.rows[a][b]
        dprime = find_skew_symmetrizer(ExchangeMatrix(sub_rows)).d
        local_part, local_starts = _allocate(dprime)
        for v in verts:
            if 2 * dprime[pos[v]] != d[v - 1]:
                raise InconsistentWeights(
                    f"regular-part vertex {v} has symmetrizer {d[v - 1]}, "
                    f"component needs twice {dprime[pos[v]]}"
                )
        for color in (0, 1):  # 0 = black, 1 = red
            for i in members:
                opt = choice[i]
                tpart = opt.partition()
                index_map: Dict[int, int] = {}
                for t, v in enumerate(blocks[i].vertices, start=1):
                    slots = tpart[t - 1]
                    base_slot = starts[v - 1] + color * dprime[pos[v]]
                    for p, ci in enumerate(slots):
                        index_map[ci] = base_slot + p + 1
                _add_cover(C, opt, index_map)

    for i in irregular:
        opt = choice[i]
        shared, black, red = opt.halves
        tpart = opt.partition()
        index_map = {}
        for t, v in enumerate(blocks[i].vertices, start=1):
            slots = tpart[t - 1]
            if len(slots) == 1:
                if d[v - 1] != 1:
                    raise InconsistentWeights(
                        f"irregular dead end {v} expects symmetrizer 1, got {d[v - 1]}"
                    )
                index_map[slots[0]] = starts[v - 1] + 1
            elif len(slots) == 2:
                if d[v - 1] != 2:
                    raise InconsistentWeights(
                        f"irregular outlet {v} expects symmetrizer 2, got {d[v - 1]}"
                    )
                for ci in slots:
                    offset = 0 if ci in black else 1
                    index_map[ci] = starts[v - 1] + offset + 1
            else:
                raise UnsupportedIrregularCase(
                    f"irregular block {blocks[i].tag} has a vertex of symmetrizer "
                    f"{len(slots)}"
                )
        _add_cover(C, opt, index_map)

    return UnfoldingSpec(B, partition, ExchangeMatrix(C))


# -- shipped exceptional unfoldings -------------------------------------------


@dataclass(frozen=True)
class ExceptionalUnfolding:
    type_tag: str
    variant: str
    spec: UnfoldingSpec
    cover_class: str


_EXC_CACHE: Optional[List[ExceptionalUnfolding]] = None


def exceptional_unfoldings() -> List[ExceptionalUnfolding]:
    """The unfoldings of all matrices with non-decomposable mutation-finite
    diagrams, as shipped data (two G2~ rows, F4, G2(*,+), two G2(*,*) rows,
    two F4~ rows, F4(*,+), two F4(*,*) rows)."""
    global _EXC_CACHE
    if _EXC_CACHE is None:
        rows = []
        for type_tag, variant, base_rows, cover_rows, tag in EXCEPTIONAL_UNFOLDINGS:
            base = ExchangeMatrix(base_rows)
            cover = ExchangeMatrix(cover_rows)
            partition, _ = _allocate(find_skew_symmetrizer(base).d)
            rows.append(
                ExceptionalUnfolding(
                    type_tag=type_tag,
                    variant=variant,
                    spec=UnfoldingSpec(base, partition, cover),
                    cover_class=tag,
                )
            )
        _EXC_CACHE = rows
    return list(_EXC_CACHE)
