"""The eighteen named mutation-finite classes and their shipped key-sets.

Skew-symmetric family: E6, E7, E8, their affine and doubled-affine versions,
X6, X7.  Non-skew-symmetric family: G2~, F4, F4~, G2(*,+), G2(*,*), F4(*,+),
F4(*,*).  Trees are built directly; the doubled-affine representatives and
all non-skew-symmetric ones are diagrams of the shipped exceptional
unfolding matrices, so they are pinned to printed data.

Class key-sets are enumerated once by tools/gen_named_classes.py and shipped
as JSON with recorded sizes; classification is an O(1) digest lookup.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Dict, Optional, Tuple

from .diagram import Diagram, diagram_of, key_digest
from .matrix import ExchangeMatrix
from .tables import EXCEPTIONAL_UNFOLDINGS

NAMED_TAGS = (
    "E6",
    "E7",
    "E8",
    "E6~",
    "E7~",
    "E8~",
    "E6(1,1)",
    "E7(1,1)",
    "E8(1,1)",
    "X6",
    "X7",
    "G2~",
    "F4",
    "F4~",
    "G2(*,+)",
    "G2(*,*)",
    "F4(*,+)",
    "F4(*,*)",
)


def _tree(arms: Tuple[int, ...]) -> Diagram:
    """Star of paths: center 1, arms of the given lengths, edges oriented
    away from the center (orientation is immaterial for a tree's class)."""
    edges = []
    nxt = 2
    for length in arms:
        prev = 1
        for _ in range(length):
            edges.append((prev, nxt, 1))
            prev = nxt
            nxt += 1
    return Diagram(nxt - 1, edges)


def _x7() -> Diagram:
    edges = []
    for a, b in ((2, 3), (4, 5), (6, 7)):
        edges += [(1, a, 1), (a, b, 4), (b, 1, 1)]
    return Diagram(7, edges)


def _x6() -> Diagram:
    edges = [(1, 2, 1), (2, 3, 4), (3, 1, 1), (1, 4, 1), (4, 5, 4), (5, 1, 1), (1, 6, 1)]
    return Diagram(6, edges)


def _exceptional_diagram(variant: str, which: str) -> Diagram:
    for _, var, base, cover, _tag in EXCEPTIONAL_UNFOLDINGS:
        if var == variant:
            rows = base if which == "base" else cover
            return diagram_of(ExchangeMatrix(rows))
    raise KeyError(variant)


def named_representative(tag: str) -> Diagram:
    """A fixed representative diagram of the named class."""
    trees = {
        "E6": (1, 2, 2),
        "E7": (1, 2, 3),
        "E8": (1, 2, 4),
        "E6~": (2, 2, 2),
        "E7~": (1, 3, 3),
        "E8~": (1, 2, 5),
    }
    if tag in trees:
        return _tree(trees[tag])
    if tag == "X6":
        return _x6()
    if tag == "X7":
        return _x7()
    if tag == "E6(1,1)":
        return _exceptional_diagram("G2(1,3) / G2(3,1)", "cover")
    if tag == "E7(1,1)":
        return _exceptional_diagram("F4(1,2) / F4(2,1)", "cover")
    if tag == "E8(1,1)":
        return _exceptional_diagram("G2(1,1)", "cover")
    bases = {
        "G2~": "G2~ (a)",
        "F4": "F4",
        "F4~": "F4~ (a)",
        "G2(*,+)": "G2(1,3) / G2(3,1)",
        "G2(*,*)": "G2(3,3)",
        "F4(*,+)": "F4(1,2) / F4(2,1)",
        "F4(*,*)": "F4(2,2)",
    }
    if tag in bases:
        return _exceptional_diagram(bases[tag], "base")
    raise KeyError(tag)


def doubled_affine_standard(tag: str) -> Diagram:
    """The drawn form of the doubled-affine types: the branch vertex of the
    affine tree is replaced by a pair joined by a weight-4 edge, each arm's
    first vertex closing an oriented triangle with the pair."""
    arms = {"E6(1,1)": (2, 2, 2), "E7(1,1)": (1, 3, 3), "E8(1,1)": (1, 2, 5)}[tag]
    p, q = 1, 2
    edges = [(p, q, 4)]
    nxt = 3
    for length in arms:
        first = nxt
        edges.append((q, first, 1))
        edges.append((first, p, 1))
        prev = first
        nxt += 1
        for _ in range(length - 1):
            edges.append((prev, nxt, 1))
            prev = nxt
            nxt += 1
    return Diagram(nxt - 1, edges)


_DATA: Optional[Dict] = None
_KEY_TO_TAG: Optional[Dict[str, str]] = None


def _load() -> Dict:
    global _DATA, _KEY_TO_TAG
    if _DATA is None:
        text = (
            resources.files("mutafold.data")
            .joinpath("named_classes.json")
            .read_text(encoding="utf-8")
        )
        _DATA = json.loads(text)
        _KEY_TO_TAG = {}
        for tag, entry in _DATA["classes"].items():
            for key in entry["keys"]:
                _KEY_TO_TAG[key] = tag
    return _DATA


def named_class_size(tag: str) -> int:
    return _load()["classes"][tag]["size"]


def named_class_keys(tag: str) -> frozenset:
    return frozenset(_load()["classes"][tag]["keys"])


def named_class_tag(S: Diagram) -> Optional[str]:
    """Tag of the named class containing S, by shipped-key lookup."""
    _load()
    assert _KEY_TO_TAG is not None
    return _KEY_TO_TAG.get(key_digest(S))
