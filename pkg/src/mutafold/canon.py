"""Canonical forms of integer matrices under simultaneous row/column permutation.

Both exchange matrices and diagrams (encoded as signed weight matrices) are
canonicalized by the same engine: iterated color refinement on the vertices,
followed by individualization backtracking over the residual color classes.
The certificate is the lexicographically minimal row-major read of the matrix
over all admissible orderings, so equal certificates mean simultaneous
permutation equivalence, exactly.

Disconnected inputs are canonicalized per connected component of the support
and recombined by sorting component certificates; this keeps the search tree
small on diagrams with many isolated vertices.
"""

from __future__ import annotations

import hashlib
from typing import List, Sequence, Tuple

Cert = Tuple


def _refine(verts: List[int], M: Sequence[Sequence[int]], colors: dict) -> dict:
    """Iterate color refinement until the partition stabilizes.

    Color ids are reassigned from the sorted signature list each round, so the
    final coloring is invariant under relabeling of the input.
    """
    ncls = len(set(colors.values()))
    while True:
        sigs = {}
        for v in verts:
            row = M[v]
            sigs[v] = (
                colors[v],
                tuple(sorted((colors[u], row[u], M[u][v]) for u in verts if u != v)),
            )
        order = sorted(set(sigs.values()))
        index = {s: i for i, s in enumerate(order)}
        colors = {v: index[sigs[v]] for v in verts}
        if len(order) == ncls:
            return colors
        ncls = len(order)


def _component_cert(verts: List[int], M: Sequence[Sequence[int]]) -> Cert:
    colors = _refine(verts, M, {v: 0 for v in verts})
    best: List[Cert | None] = [None]

    def read(colors: dict) -> Cert:
        order = sorted(verts, key=lambda v: colors[v])
        return tuple(M[a][b] for a in order for b in order)

    def search(colors: dict) -> None:
        classes: dict = {}
        for v in verts:
            classes.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(classes):
            if len(classes[c]) > 1:
                target = classes[c]
                break
        if target is None:
            cert = read(colors)
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        fresh = len(verts)
        for v in target:
            branch = dict(colors)
            branch[v] = fresh
            search(_refine(verts, M, branch))

    search(colors)
    assert best[0] is not None
    return best[0]


def canonical_certificate(M: Sequence[Sequence[int]]) -> Cert:
    """Canonical certificate of a square integer matrix.

    Two matrices get equal certificates iff one is obtained from the other by
    a simultaneous permutation of rows and columns.
    """
    n = len(M)
    if n == 0:
        return ()
    comp_of = list(range(n))

    def find(x: int) -> int:
        while comp_of[x] != x:
            comp_of[x] = comp_of[comp_of[x]]
            x = comp_of[x]
        return x

    for i in range(n):
        row = M[i]
        for j in range(i + 1, n):
            if row[j] != 0 or M[j][i] != 0:
                comp_of[find(i)] = find(j)
    comps: dict = {}
    for v in range(n):
        comps.setdefault(find(v), []).append(v)
    certs = sorted((len(vs), _component_cert(vs, M)) for vs in comps.values())
    if len(certs) == 1:
        return certs[0][1]
    return tuple(certs)


def certificate_digest(cert: Cert) -> str:
    """Stable hex digest of a certificate, used in shipped data files."""
    return hashlib.sha256(repr(cert).encode()).hexdigest()
