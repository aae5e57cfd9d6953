"""s-decomposability: backtracking cover of a diagram by catalog blocks.

Gluing semantics: blocks are placed by injective vertex maps; a vertex lies
in at most two blocks and then is an outlet of both; two simple edges placed
on one pair cancel when anti-parallel and merge to weight 4 when parallel.
The search is a complete decision procedure: it branches on the lowest
unsatisfied vertex over every consistent placement, so failure means no
decomposition exists.

Placements that land every edge exactly are tried before ones that leave a
pair waiting for a cancelling or merging partner; consequently, when a
diagram has both a cancellation-free decomposition and one with cancelled
edges (the exceptional three-vertex double-weight-2 path does), the
cancellation-free one is returned, which is also the right choice for
building unfoldings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .blocks import BlockTemplate, MatrixOption, block_catalog, template_by_tag
from .diagram import Diagram
from .errors import InconsistentWeights, UnknownBlockMatrix
from .matrix import ExchangeMatrix, find_skew_symmetrizer

VERTEX_TAG = "vertex"  # degenerate single-vertex block


@dataclass(frozen=True)
class BlockPlacement:
    tag: str
    vertices: Tuple[int, ...]  # ambient images of template vertices, in order

    def serialize(self) -> str:
        return f"block {self.tag} {' '.join(map(str, self.vertices))}"


@dataclass
class SDecomposition:
    blocks: List[BlockPlacement]

    def real_blocks(self) -> List[BlockPlacement]:
        return [b for b in self.blocks if b.tag != VERTEX_TAG]

    def identified_outlets(self) -> List[int]:
        count: Dict[int, int] = {}
        for b in self.real_blocks():
            for v in b.vertices:
                count[v] = count.get(v, 0) + 1
        return sorted(v for v, c in count.items() if c >= 2)

    def serialize(self) -> str:
        lines = [b.serialize() for b in self.blocks]
        lines += [f"glue {v}" for v in self.identified_outlets()]
        return "\n".join(lines)


@dataclass(frozen=True)
class DecompositionWeight:
    w: int

    def __post_init__(self):
        if self.w not in (1, 2):
            raise InconsistentWeights(f"decomposition weight {self.w} is not 1 or 2")


def _combined(L: Sequence[int]) -> Optional[int]:
    if len(L) == 0:
        return 0
    if len(L) == 1:
        return L[0]
    if len(L) == 2 and abs(L[0]) == 1 and abs(L[1]) == 1:
        return 4 * L[0] if L[0] == L[1] else 0
    return None


class _TemplateInfo:
    """Precomputed embedding structure for one template."""

    __slots__ = ("tpl", "edges", "adj", "orders", "shape_adj")

    def __init__(self, tpl: BlockTemplate):
        self.tpl = tpl
        self.edges = tpl.diagram().edges
        self.adj: Dict[int, List[Tuple[int, int]]] = {
            t: [] for t in range(1, tpl.n + 1)
        }
        self.shape_adj: Dict[Tuple[int, int], int] = {}
        for t, h, w in self.edges:
            self.adj[t].append((h, w))
            self.adj[h].append((t, -w))
            self.shape_adj[(t, h)] = w
            self.shape_adj[(h, t)] = -w
        self.orders = {
            anchor: _Search._bfs_order(tpl, self.adj, anchor)
            for anchor in range(1, tpl.n + 1)
        }


_TEMPLATE_INFO_CACHE: Dict[str, _TemplateInfo] = {}


def _template_info(tpl: BlockTemplate) -> _TemplateInfo:
    info = _TEMPLATE_INFO_CACHE.get(tpl.tag)
    if info is None or info.tpl is not tpl:
        info = _TemplateInfo(tpl)
        _TEMPLATE_INFO_CACHE[tpl.tag] = info
    return info


class _Search:
    def __init__(self, S: Diagram, catalog: List[BlockTemplate]):
        self.S = S
        self.n = S.n
        self.amb = S.adj()
        self.catalog = catalog
        self.infos = [_template_info(t) for t in catalog]
        self.templates = {t.tag: t for t in catalog}
        self.contribs: Dict[Tuple[int, int], List[int]] = {}
        self.roles: Dict[int, List[bool]] = {v: [] for v in range(1, S.n + 1)}
        self.placed: List[BlockPlacement] = []
        self.isolated = {
            v for v in range(1, S.n + 1) if not any(v in (t, h) for t, h, _ in S.edges)
        }
        self.incident: Dict[int, set] = {v: set() for v in range(1, S.n + 1)}
        for t, h, _ in S.edges:
            self.incident[t].add(h)
            self.incident[h].add(t)

    # contributions are stored on ordered pairs (a, b) with a < b; a value +s
    # means an edge a -> b of weight s
    def _target(self, a: int, b: int) -> int:
        return self.amb.get((a, b), 0)

    def _pair(self, a: int, b: int) -> Tuple[int, int]:
        return (a, b) if a < b else (b, a)

    def _contrib_list(self, a: int, b: int) -> List[int]:
        return self.contribs.get(self._pair(a, b), [])

    def _pair_satisfied(self, a: int, b: int) -> bool:
        p = self._pair(a, b)
        return _combined(self.contribs.get(p, [])) == self._target(*p)

    def _accepts(self, a: int, b: int, s: int) -> bool:
        """Whether adding contribution s (signed, relative to a->b) to the
        pair keeps a correct completion possible."""
        p = self._pair(a, b)
        if p != (a, b):
            s = -s
        L = self.contribs.get(p, [])
        T = self._target(*p)
        if len(L) >= 2:
            return False
        if abs(s) >= 2:
            return not L and T == s
        if len(L) == 1:
            if abs(L[0]) != 1:
                return False
            return T == (4 * s if L[0] == s else 0)
        return T in (s, 4 * s, 0)

    def _role_accepts(self, v: int, is_outlet: bool) -> bool:
        r = self.roles[v]
        if len(r) >= 2:
            return False
        if len(r) == 1:
            return r[0] and is_outlet
        return True

    # -- placement enumeration ------------------------------------------

    def _placements_at(self, pivot: int) -> List[Tuple[int, BlockPlacement]]:
        found: Dict[Tuple, Tuple[int, BlockPlacement]] = {}
        for tpl_idx, info in enumerate(self.infos):
            for anchor in range(1, info.tpl.n + 1):
                self._embed(
                    info,
                    tpl_idx,
                    info.orders[anchor],
                    {anchor: pivot},
                    {pivot},
                    found,
                )
        out = sorted(found.values(), key=lambda kv: (kv[0], kv[1].tag, kv[1].vertices))
        return out

    @staticmethod
    def _bfs_order(tpl: BlockTemplate, adj_t, anchor: int) -> List[Tuple[int, int, int]]:
        """Template vertices as (vertex, parent, signed weight from parent)."""
        seen = {anchor}
        order = []
        queue = [anchor]
        while queue:
            v = queue.pop(0)
            for u, w in sorted(adj_t[v]):
                if u not in seen:
                    seen.add(u)
                    order.append((u, v, w))
                    queue.append(u)
        return order

    def _embed(self, info, tpl_idx, order, mapping, used, found) -> None:
        tpl = info.tpl
        if len(mapping) == tpl.n:
            self._finalize(info, tpl_idx, mapping, found)
            return
        t, parent, w = order[len(mapping) - 1]
        pv = mapping[parent]
        exact = abs(w) >= 2 or (t not in tpl.outlets) or (parent not in tpl.outlets)
        if exact:
            cands = [
                u
                for u in self.incident[pv]
                if u not in used
                and self.amb.get((pv, u), 0) == w
                and not self._contrib_list(pv, u)
            ]
        else:
            cands = [
                u
                for u in range(1, self.n + 1)
                if u not in used and self._accepts(pv, u, 1 if w > 0 else -1)
            ]
        role_t = t in tpl.outlets
        for u in cands:
            if not self._role_accepts(u, role_t):
                continue
            mapping[t] = u
            used.add(u)
            self._embed(info, tpl_idx, order, mapping, used, found)
            del mapping[t]
            used.discard(u)

    def _finalize(self, info, tpl_idx, mapping, found) -> None:
        tpl = info.tpl
        shape_adj = info.shape_adj
        pending = 0
        for t in range(1, tpl.n + 1):
            if not self._role_accepts(mapping[t], t in tpl.outlets):
                return
        for t in range(1, tpl.n + 1):
            for h in range(t + 1, tpl.n + 1):
                a, b = mapping[t], mapping[h]
                w = shape_adj.get((t, h), 0)
                s = w if a < b else -w
                p = self._pair(a, b)
                T = self._target(*p)
                L = self.contribs.get(p, [])
                if w == 0:
                    if T == 0 and not L:
                        continue
                    if (
                        abs(T) == 1
                        and not L
                        and t in tpl.outlets
                        and h in tpl.outlets
                    ):
                        pending += 1  # another block must supply this edge
                        continue
                    return
                if not self._accepts(a, b, w):
                    return
                if _combined(L + [s]) != T:
                    pending += 1
        key = (
            tpl.tag,
            frozenset((mapping[t], t in tpl.outlets) for t in range(1, tpl.n + 1)),
            frozenset(
                (self._pair(mapping[t], mapping[h]), w if mapping[t] < mapping[h] else -w)
                for (t, h), w in shape_adj.items()
                if w > 0
            ),
        )
        if key not in found:
            placement = BlockPlacement(
                tag=tpl.tag, vertices=tuple(mapping[t] for t in range(1, tpl.n + 1))
            )
            found[key] = (pending * 100 + tpl_idx, placement)

    # -- search driver ----------------------------------------------------

    def _pivot(self) -> Optional[int]:
        for v in range(1, self.n + 1):
            if v in self.isolated:
                continue
            if not self.roles[v]:
                return v
            for u in self.incident[v]:
                if not self._pair_satisfied(v, u):
                    return v
            for (a, b), L in self.contribs.items():
                if v in (a, b) and _combined(L) != self._target(a, b):
                    return v
        return None

    def _apply(self, placement: BlockPlacement):
        tpl = self.templates[placement.tag]
        undo = []
        for t, h, w in _template_info(tpl).edges:
            a, b = placement.vertices[t - 1], placement.vertices[h - 1]
            s = w if a < b else -w
            p = self._pair(a, b)
            self.contribs.setdefault(p, []).append(s)
            undo.append(p)
        for t in range(1, tpl.n + 1):
            self.roles[placement.vertices[t - 1]].append(t in tpl.outlets)
        self.placed.append(placement)
        return undo

    def _undo(self, placement: BlockPlacement, undo) -> None:
        for p in undo:
            self.contribs[p].pop()
            if not self.contribs[p]:
                del self.contribs[p]
        tpl = self.templates[placement.tag]
        for t in range(1, tpl.n + 1):
            self.roles[placement.vertices[t - 1]].pop()
        self.placed.pop()

    def run(self, collect: Optional[List[SDecomposition]] = None, limit: int = 1):
        pivot = self._pivot()
        if pivot is None:
            dec = SDecomposition(
                blocks=list(self.placed)
                + [BlockPlacement(VERTEX_TAG, (v,)) for v in sorted(self.isolated)]
            )
            if collect is None:
                return dec
            collect.append(dec)
            return dec if len(collect) >= limit else None
        for _, placement in self._placements_at(pivot):
            undo = self._apply(placement)
            result = self.run(collect, limit)
            self._undo(placement, undo)
            if result is not None:
                return result
        return None


def is_s_decomposable(
    S: Diagram, catalog: Optional[List[BlockTemplate]] = None
) -> Optional[SDecomposition]:
    """A block decomposition of S, or None when none exists.

    The search is exhaustive over placements of the given catalog (the full
    one by default), so None is a proof of non-decomposability.
    """
    if any(w == 3 or w > 4 for _, _, w in S.edges):
        return None
    search = _Search(S, catalog if catalog is not None else block_catalog())
    return search.run()


def all_decompositions(
    S: Diagram, limit: int = 100, catalog: Optional[List[BlockTemplate]] = None
) -> List[SDecomposition]:
    """Bounded list of decompositions, for debugging block coverings."""
    if any(w == 3 or w > 4 for _, _, w in S.edges):
        return []
    search = _Search(S, catalog if catalog is not None else block_catalog())
    out: List[SDecomposition] = []
    search.run(collect=out, limit=limit)
    return out


# -- interpretation of a decomposition against a concrete matrix -------------


def _mapped_entries(option: MatrixOption, placement: BlockPlacement):
    """Option entries pushed through the placement, as {(u, v): entry}."""
    verts = placement.vertices
    out = {}
    k = option.base.n
    for i in range(k):
        for j in range(k):
            if i != j:
                out[(verts[i], verts[j])] = option.base.rows[i][j]
    return out


def superposed_matrix(dec: SDecomposition, n: int, choice: Dict[int, MatrixOption]):
    rows = [[0] * n for _ in range(n)]
    for idx, placement in enumerate(dec.real_blocks()):
        for (u, v), x in _mapped_entries(choice[idx], placement).items():
            rows[u - 1][v - 1] += x
    return rows


def validate_decomposition(S: Diagram, dec: SDecomposition) -> bool:
    """Structural validity plus: the signed superposition of block matrices
    reproduces a matrix whose diagram is exactly S."""
    count: Dict[int, List[bool]] = {v: [] for v in range(1, S.n + 1)}
    for placement in dec.blocks:
        if placement.tag == VERTEX_TAG:
            if len(placement.vertices) != 1:
                return False
            continue
        try:
            tpl = template_by_tag(placement.tag)
        except KeyError:
            return False
        verts = placement.vertices
        if len(verts) != tpl.n or len(set(verts)) != tpl.n:
            return False
        if not all(1 <= v <= S.n for v in verts):
            return False
        for t, v in enumerate(verts, start=1):
            count[v].append(t in tpl.outlets)
    for v, flags in count.items():
        if len(flags) > 2:
            return False
        if len(flags) == 2 and not all(flags):
            return False
    covered = {v for v, flags in count.items() if flags}
    covered |= {
        p.vertices[0] for p in dec.blocks if p.tag == VERTEX_TAG and p.vertices
    }
    if covered != set(range(1, S.n + 1)):
        return False
    choice = {
        idx: template_by_tag(p.tag).matrix_options[0]
        for idx, p in enumerate(dec.real_blocks())
    }
    rows = superposed_matrix(dec, S.n, choice)
    edges = set()
    for i in range(S.n):
        for j in range(S.n):
            a, b = rows[i][j], rows[j][i]
            if (a == 0) != (b == 0) or a * b > 0:
                return False
            if a > 0:
                edges.add((i + 1, j + 1, -a * b))
    return edges == set(S.edges)


def assign_matrix_options(
    dec: SDecomposition, B: ExchangeMatrix
) -> Dict[int, MatrixOption]:
    """Choose one matrix option per block so the superposition equals B.

    Raises UnknownBlockMatrix when no assignment exists, which signals either
    a transcription gap or an invalid (S, dec, B) combination.
    """
    blocks = dec.real_blocks()
    pair_users: Dict[Tuple[int, int], List[int]] = {}
    for idx, placement in enumerate(blocks):
        for u in placement.vertices:
            for v in placement.vertices:
                if u < v:
                    pair_users.setdefault((u, v), []).append(idx)

    choice: Dict[int, MatrixOption] = {}

    def consistent(idx: int, option: MatrixOption) -> bool:
        entries = _mapped_entries(option, blocks[idx])
        for (u, v), x in entries.items():
            if u > v:
                continue
            users = pair_users[(u, v)]
            others = [o for o in users if o != idx]
            if not others:
                if B.rows[u - 1][v - 1] != x or B.rows[v - 1][u - 1] != entries[(v, u)]:
                    return False
            else:
                other = others[0]
                if other in choice:
                    y = _mapped_entries(choice[other], blocks[other]).get((u, v), 0)
                    if B.rows[u - 1][v - 1] != x + y:
                        return False
        return True

    def rec(idx: int) -> bool:
        if idx == len(blocks):
            return True
        tpl = template_by_tag(blocks[idx].tag)
        for option in tpl.matrix_options:
            if consistent(idx, option):
                choice[idx] = option
                if rec(idx + 1):
                    return True
                del choice[idx]
        return False

    if not rec(0):
        raise UnknownBlockMatrix(
            "no per-block matrix option assignment reproduces the given matrix"
        )
    return choice


def decomposition_weight(
    S: Diagram, dec: SDecomposition, B: ExchangeMatrix
) -> DecompositionWeight:
    """The common symmetrizer entry over all outlets (1 or 2).

    For decompositions without outlets (a lone VI~ block or isolated
    vertices) the weight is read off the matched matrix option.
    """
    d = find_skew_symmetrizer(B)
    outlet_vertices = set()
    for placement in dec.real_blocks():
        tpl = template_by_tag(placement.tag)
        for t in tpl.outlets:
            outlet_vertices.add(placement.vertices[t - 1])
    if outlet_vertices:
        values = {d[v] for v in outlet_vertices}
        if len(values) != 1:
            raise InconsistentWeights(
                f"outlet symmetrizer entries disagree: {sorted(values)}"
            )
        return DecompositionWeight(values.pop())
    choice = assign_matrix_options(dec, B)
    if all(opt.kind == "regular" for opt in choice.values()):
        return DecompositionWeight(1)
    return DecompositionWeight(2)


def regular_irregular_split(
    dec: SDecomposition, B: ExchangeMatrix
) -> Tuple[List[BlockPlacement], List[BlockPlacement]]:
    """Blocks whose induced matrix admits a local unfolding vs the rest."""
    choice = assign_matrix_options(dec, B)
    blocks = dec.real_blocks()
    regular = [blocks[i] for i in sorted(choice) if choice[i].kind == "regular"]
    irregular = [blocks[i] for i in sorted(choice) if choice[i].kind == "irregular"]
    return regular, irregular
