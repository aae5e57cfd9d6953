"""Diagrams of skew-symmetrizable matrices.

A diagram is a weighted oriented simple graph on vertices 1..n: the edge
i -> j of weight -b_ij*b_ji exists exactly when b_ij > 0.  Mutation acts on
diagrams directly through exact integer square roots; realizability is the
perfect-square condition on chordless cycles.
"""

from __future__ import annotations

from math import isqrt
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .canon import canonical_certificate, certificate_digest
from .errors import (
    EntryOverflow,
    IndexOutOfRange,
    NotRealizable,
    NotSkewSymmetrizable,
    ValidationError,
)
from .matrix import INT64_MAX, ExchangeMatrix, matrix_canonical_key

Edge = Tuple[int, int, int]  # (tail, head, weight), vertices 1-based


class Diagram:
    """Immutable weighted oriented graph; at most one edge per vertex pair."""

    __slots__ = ("n", "edges", "source_labels", "_adj")

    def __init__(
        self,
        n: int,
        edges: Iterable[Edge],
        source_labels: Optional[Tuple[int, ...]] = None,
    ):
        es = tuple(sorted((int(t), int(h), int(w)) for t, h, w in edges))
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "source_labels", source_labels)
        object.__setattr__(self, "_adj", None)
        seen = set()
        for t, h, w in es:
            if not (1 <= t <= n and 1 <= h <= n):
                raise ValidationError(f"edge ({t},{h}) outside 1..{n}")
            if t == h:
                raise ValidationError(f"self-loop at vertex {t}")
            if w < 1:
                raise ValidationError(f"edge ({t},{h}) has weight {w} < 1")
            pair = (t, h) if t < h else (h, t)
            if pair in seen:
                raise ValidationError(f"parallel edges between {pair[0]} and {pair[1]}")
            seen.add(pair)

    def __setattr__(self, name, value):
        raise AttributeError("Diagram is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Diagram)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Diagram({self.n}, {list(self.edges)})"

    # -- derived structure ---------------------------------------------------

    def signed_adjacency(self) -> List[List[int]]:
        """Matrix with +w at (tail, head) and -w at (head, tail)."""
        a = [[0] * self.n for _ in range(self.n)]
        for t, h, w in self.edges:
            a[t - 1][h - 1] = w
            a[h - 1][t - 1] = -w
        return a

    def weight(self, u: int, v: int) -> int:
        """Signed weight from u to v: +w for u->v, -w for v->u, 0 if no edge."""
        return self.adj().get((u, v), 0)

    def adj(self) -> Dict[Tuple[int, int], int]:
        if self._adj is None:
            m: Dict[Tuple[int, int], int] = {}
            for t, h, w in self.edges:
                m[(t, h)] = w
                m[(h, t)] = -w
            object.__setattr__(self, "_adj", m)
        return self._adj

    def neighbors(self, v: int) -> List[int]:
        return sorted(u for (a, u) in self.adj() if a == v)

    def components(self) -> List[List[int]]:
        """Connected components of the underlying undirected graph."""
        parent = list(range(self.n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for t, h, _ in self.edges:
            parent[find(t)] = find(h)
        groups: Dict[int, List[int]] = {}
        for v in range(1, self.n + 1):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


class CanonicalKey:
    """Relabeling-invariant key; equal iff diagrams are isomorphic."""

    __slots__ = ("bytes",)

    def __init__(self, raw: bytes):
        object.__setattr__(self, "bytes", raw)

    def __setattr__(self, name, value):
        raise AttributeError("CanonicalKey is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, CanonicalKey) and self.bytes == other.bytes

    def __hash__(self) -> int:
        return hash(self.bytes)

    def hex(self) -> str:
        import hashlib

        return hashlib.sha256(self.bytes).hexdigest()

    def __repr__(self) -> str:
        return f"CanonicalKey({self.hex()[:12]})"


def diagram_of(B: ExchangeMatrix) -> Diagram:
    """The diagram of a validated exchange matrix."""
    edges = []
    for i in range(B.n):
        for j in range(B.n):
            if B.rows[i][j] > 0:
                edges.append((i + 1, j + 1, -B.rows[i][j] * B.rows[j][i]))
    return Diagram(B.n, edges)


def canonical_key(S: Diagram) -> CanonicalKey:
    return CanonicalKey(repr(canonical_certificate(S.signed_adjacency())).encode())


def key_digest(S: Diagram) -> str:
    return certificate_digest(canonical_certificate(S.signed_adjacency()))


def subdiagram(S: Diagram, V: Sequence[int]) -> Diagram:
    """Induced subdiagram on V, relabeled 1..|V| preserving order.

    Original labels are kept in source_labels for witness reporting.
    """
    keep = sorted(set(V))
    for v in keep:
        if not 1 <= v <= S.n:
            raise IndexOutOfRange(f"vertex {v} outside 1..{S.n}")
    index = {v: i + 1 for i, v in enumerate(keep)}
    edges = [
        (index[t], index[h], w) for t, h, w in S.edges if t in index and h in index
    ]
    return Diagram(len(keep), edges, source_labels=tuple(keep))


def chordless_cycles(S: Diagram) -> List[List[int]]:
    """All chordless cycles of the underlying undirected graph.

    Each cycle is reported once, up to rotation and reflection, as a vertex
    list starting at its minimal vertex.
    """
    adj: Dict[int, set] = {v: set() for v in range(1, S.n + 1)}
    for t, h, _ in S.edges:
        adj[t].add(h)
        adj[h].add(t)
    cycles: List[List[int]] = []

    def extend(path: List[int], blocked: set) -> None:
        u, last = path[0], path[-1]
        first = len(path) == 1
        for nxt in sorted(adj[last]):
            if nxt <= u or nxt in blocked:
                continue
            # chordless along the way: nxt may touch only the path endpoints
            if any(p in adj[nxt] for p in path[1:-1]):
                continue
            if not first and u in adj[nxt]:
                # closing edge; reflection disambiguation: second < last
                if path[1] < nxt:
                    cycles.append(path + [nxt])
            else:
                extend(path + [nxt], blocked | {nxt})

    for u in range(1, S.n + 1):
        extend([u], {u})
    return cycles


def check_realizable(S: Diagram) -> bool:
    """True iff every chordless cycle has a perfect-square weight product."""
    adj = S.adj()
    for cyc in chordless_cycles(S):
        prod = 1
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            prod *= abs(adj[(a, b)])
        if isqrt(prod) ** 2 != prod:
            return False
    return True


def mutate_diagram(S: Diagram, k: int) -> Diagram:
    """Diagram mutation at vertex k via exact integer square roots.

    For every directed path i -> k -> j with weights a, b the edge between
    i and j is replaced by one of weight (sqrt(ab) -+ sqrt(c))^2, the sign
    taken negative exactly when (i,k,j) is an oriented cycle; edges at k
    reverse.  Raises NotRealizable when the required square root of a*b*c is
    not an integer, which signals an unrealizable input.
    """
    if not 1 <= k <= S.n:
        raise IndexOutOfRange(f"vertex {k} outside 1..{S.n}")
    adj = dict(S.adj())
    into = [v for v in range(1, S.n + 1) if adj.get((v, k), 0) > 0]
    outof = [v for v in range(1, S.n + 1) if adj.get((k, v), 0) > 0]
    new_adj = dict(adj)
    for i in into:
        a = adj[(i, k)]
        for j in outof:
            b = adj[(k, j)]
            c = adj.get((i, j), 0)  # signed: +w means i->j
            ab = a * b
            prod = ab * abs(c)
            s = isqrt(prod)
            if s * s != prod:
                raise NotRealizable(
                    f"weight product {prod} on triangle ({i},{k},{j}) is not a square"
                )
            # oriented cycle i->k->j->i means the existing edge runs j->i (c<0)
            if c < 0:
                d = ab + abs(c) - 2 * s
                sign = 1 if ab >= abs(c) else -1
            else:
                d = ab + c + 2 * s
                sign = 1
            if d > INT64_MAX:
                raise EntryOverflow(f"edge weight {d} overflows 64 bits")
            if d == 0:
                new_adj.pop((i, j), None)
                new_adj.pop((j, i), None)
            else:
                new_adj[(i, j)] = sign * d
                new_adj[(j, i)] = -sign * d
    for v in into + outof:
        w = adj[(v, k)] if v in into else adj[(k, v)]
        w = abs(w)
        new_adj[(v, k)] = -w if v in into else w
        new_adj[(k, v)] = w if v in into else -w
    edges = [(t, h, w) for (t, h), w in new_adj.items() if w > 0]
    return Diagram(S.n, edges)


def matrices_of(S: Diagram) -> List[ExchangeMatrix]:
    """All skew-symmetrizable matrices with diagram S.

    One candidate per factorization w = p*q of each edge weight, pruned by
    symmetrizer-ratio consistency, deduplicated up to simultaneous
    permutation, in a deterministic order.
    """
    from fractions import Fraction

    n = S.n
    # spanning-forest-first edge order: each edge beyond the first of its
    # component touches an already-pinned vertex, so symmetrizer ratios never
    # need rescaling across partially-built islands
    by_pair = {}
    support: Dict[int, List[int]] = {v: [] for v in range(1, n + 1)}
    for t, h, w in S.edges:
        by_pair[(min(t, h), max(t, h))] = (t, h, w)
        support[t].append(h)
        support[h].append(t)
    edges = []
    seen_v = set()
    seen_e = set()
    for root in range(1, n + 1):
        if root in seen_v:
            continue
        seen_v.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            for u in sorted(support[v]):
                pair = (min(u, v), max(u, v))
                if u not in seen_v:
                    seen_v.add(u)
                    queue.append(u)
                    edges.append(by_pair[pair])
                    seen_e.add(pair)
    for pair, e in sorted(by_pair.items()):
        if pair not in seen_e:
            edges.append(e)
    found: List[ExchangeMatrix] = []
    keys = set()

    def factor_pairs(w: int) -> List[Tuple[int, int]]:
        return [(p, w // p) for p in range(1, w + 1) if w % p == 0]

    def rec(idx: int, entries: Dict[Tuple[int, int], int], ratio: Dict[int, Fraction]):
        if idx == len(edges):
            rows = [[0] * n for _ in range(n)]
            for (i, j), v in entries.items():
                rows[i - 1][j - 1] = v
            try:
                found.append(ExchangeMatrix(rows))
            except NotSkewSymmetrizable:  # pragma: no cover - pruned earlier
                pass
            return
        t, h, w = edges[idx]
        for p, q in factor_pairs(w):
            # b_th = p, b_ht = -q  =>  d_h / d_t = q / p
            rt, rh = ratio.get(t), ratio.get(h)
            if rt is not None and rh is not None:
                if rh * p != rt * q:
                    continue
                new_ratio = ratio
            else:
                new_ratio = dict(ratio)
                if rt is None and rh is None:
                    new_ratio[t] = Fraction(1)
                    new_ratio[h] = Fraction(q, p)
                elif rt is None:
                    new_ratio[t] = rh * Fraction(p, q)
                else:
                    new_ratio[h] = rt * Fraction(q, p)
            entries[(t, h)] = p
            entries[(h, t)] = -q
            rec(idx + 1, entries, new_ratio)
            del entries[(t, h)], entries[(h, t)]

    rec(0, {}, {})
    out = []
    for M in sorted(found, key=lambda m: m.rows):
        key = matrix_canonical_key(M)
        if key not in keys:
            keys.add(key)
            out.append(M)
    return out
