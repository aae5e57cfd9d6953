"""The block catalog: old types I-V and the seven new block families.

Old blocks carry only their (unique) skew-symmetric matrix; new blocks carry
the matrix options from the tables, split into regular (admitting a local
unfolding) and irregular ones.  Outlets follow the figure conventions; the
suite pins them with gluing self-tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .diagram import Diagram, diagram_of
from .matrix import ExchangeMatrix, find_skew_symmetrizer
from .tables import IRREGULAR_NEW, NONLOCAL_IRREGULAR, REGULAR_NEW

Edge = Tuple[int, int, int]


@dataclass(frozen=True)
class MatrixOption:
    """One matrix realizing a block, with its cover from the tables."""

    kind: str  # "regular" | "irregular"
    base: ExchangeMatrix
    cover: ExchangeMatrix
    d: Tuple[int, ...]
    halves: Optional[Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]] = None
    nonlocal_ok: bool = False

    def partition(self) -> Tuple[Tuple[int, ...], ...]:
        """Cover indices grouped per base vertex, consecutive by convention."""
        out = []
        at = 1
        for di in self.d:
            out.append(tuple(range(at, at + di)))
            at += di
        return tuple(out)


@dataclass(frozen=True)
class BlockTemplate:
    tag: str
    family: str
    n: int
    edges: Tuple[Edge, ...]
    outlets: frozenset
    matrix_options: Tuple[MatrixOption, ...]

    def diagram(self) -> Diagram:
        return Diagram(self.n, self.edges)

    @property
    def dead_ends(self) -> frozenset:
        return frozenset(range(1, self.n + 1)) - self.outlets


_OLD_SHAPES = {
    "I": (2, [(1, 2, 1)], (1, 2)),
    "II": (3, [(1, 2, 1), (2, 3, 1), (3, 1, 1)], (1, 2, 3)),
    "IIIa": (3, [(2, 1, 1), (3, 1, 1)], (1,)),
    "IIIb": (3, [(1, 2, 1), (1, 3, 1)], (1,)),
    "IV": (4, [(1, 2, 1), (2, 3, 1), (3, 1, 1), (2, 4, 1), (4, 1, 1)], (1, 2)),
    "V": (
        5,
        [
            (1, 2, 1),
            (2, 3, 1),
            (3, 1, 1),
            (2, 4, 1),
            (4, 1, 1),
            (1, 5, 1),
            (5, 3, 1),
            (5, 4, 1),
        ],
        (1,),
    ),
}

_NEW_OUTLETS = {
    "IIIa~": (1,),
    "IIIb~": (2,),
    "IV~": (1, 2),
    "V1~": (1,),
    "V2~": (3,),
    "V12~": (2,),
    "VI~": (),
}

_FAMILY = {"IIIa": "III", "IIIb": "III"}


def _skew_matrix_of(n: int, edges: List[Edge]) -> ExchangeMatrix:
    rows = [[0] * n for _ in range(n)]
    for t, h, w in edges:
        assert w == 1
        rows[t - 1][h - 1] = 1
        rows[h - 1][t - 1] = -1
    return ExchangeMatrix(rows)


def _build_catalog() -> List[BlockTemplate]:
    catalog: List[BlockTemplate] = []
    for tag, (n, edges, outlets) in _OLD_SHAPES.items():
        B = _skew_matrix_of(n, edges)
        opt = MatrixOption(
            kind="regular", base=B, cover=B, d=tuple([1] * n), halves=None
        )
        catalog.append(
            BlockTemplate(
                tag=tag,
                family=_FAMILY.get(tag, tag),
                n=n,
                edges=tuple(sorted(edges)),
                outlets=frozenset(outlets),
                matrix_options=(opt,),
            )
        )
    for tag, (base_rows, cover_rows) in REGULAR_NEW.items():
        base = ExchangeMatrix(base_rows)
        options = [
            MatrixOption(
                kind="regular",
                base=base,
                cover=ExchangeMatrix(cover_rows),
                d=find_skew_symmetrizer(base).d,
            )
        ]
        for idx, (irr_rows, irr_cover, halves) in enumerate(IRREGULAR_NEW[tag]):
            irr = ExchangeMatrix(irr_rows)
            options.append(
                MatrixOption(
                    kind="irregular",
                    base=irr,
                    cover=ExchangeMatrix(irr_cover),
                    d=find_skew_symmetrizer(irr).d,
                    halves=halves,
                    nonlocal_ok=(tag, idx) in NONLOCAL_IRREGULAR,
                )
            )
        shape = diagram_of(base)
        catalog.append(
            BlockTemplate(
                tag=tag,
                family=tag,
                n=shape.n,
                edges=shape.edges,
                outlets=frozenset(_NEW_OUTLETS[tag]),
                matrix_options=tuple(options),
            )
        )
    return catalog


_CATALOG: Optional[List[BlockTemplate]] = None


def block_catalog() -> List[BlockTemplate]:
    """All twelve block families (thirteen templates: III comes in two
    orientations), in a fixed deterministic order."""
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
    return list(_CATALOG)


def template_by_tag(tag: str) -> BlockTemplate:
    for t in block_catalog():
        if t.tag == tag:
            return t
    raise KeyError(tag)


def catalog_families() -> Dict[str, List[BlockTemplate]]:
    fams: Dict[str, List[BlockTemplate]] = {}
    for t in block_catalog():
        fams.setdefault(t.family, []).append(t)
    return fams
