"""Enumerate the eighteen named mutation classes and write the shipped
key-set data file, cross-checking every count and membership we know.

Run from the repository root:

    python tools/gen_named_classes.py
"""

from __future__ import annotations

import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from mutafold.classes import enumerate_class_diagrams
from mutafold.diagram import diagram_of, key_digest
from mutafold.matrix import ExchangeMatrix
from mutafold.named import NAMED_TAGS, doubled_affine_standard, named_representative
from mutafold.sdecomp import is_s_decomposable
from mutafold.tables import EXCEPTIONAL_UNFOLDINGS

EXPECTED_SIZES = {
    # only counts the source states in print: the doubled-affine order-10
    # class and the X-family
    "E8(1,1)": 5739,
    "X6": 5,
    "X7": 2,
}


def main() -> None:
    out = {"classes": {}}
    for tag in NAMED_TAGS:
        rep = named_representative(tag)
        t0 = time.time()
        enum = enumerate_class_diagrams(rep, max_nodes=500_000)
        assert enum.complete, f"{tag}: enumeration incomplete"
        keys = sorted(key_digest(w) for w in enum.witnesses)
        assert len(set(keys)) == enum.size
        if tag in EXPECTED_SIZES:
            assert enum.size == EXPECTED_SIZES[tag], (tag, enum.size)
        assert is_s_decomposable(rep) is None, f"{tag}: representative decomposable"
        out["classes"][tag] = {
            "size": enum.size,
            "representative": {"n": rep.n, "edges": [list(e) for e in rep.edges]},
            "keys": keys,
        }
        print(f"{tag:10s} size {enum.size:6d}  ({time.time() - t0:.1f}s)")

    # classes are pairwise disjoint
    seen = {}
    for tag, entry in out["classes"].items():
        for k in entry["keys"]:
            assert k not in seen, (tag, seen.get(k))
            seen[k] = tag

    # the drawn doubled-affine forms are members of the classes pinned by the
    # exceptional-unfolding covers
    for tag in ("E6(1,1)", "E7(1,1)", "E8(1,1)"):
        digest = key_digest(doubled_affine_standard(tag))
        assert digest in out["classes"][tag]["keys"], f"{tag}: drawn form missing"
        print(f"{tag}: drawn doubled-affine form confirmed in class")

    # every exceptional-unfolding cover lands in its tagged class
    for _, variant, base, cover, tag in EXCEPTIONAL_UNFOLDINGS:
        if tag == "block-decomposable":
            S = diagram_of(ExchangeMatrix(cover))
            assert is_s_decomposable(S) is not None, variant
            continue
        digest = key_digest(diagram_of(ExchangeMatrix(cover)))
        assert digest in out["classes"][tag]["keys"], (variant, tag)
    print("all exceptional-unfolding cover tags confirmed")

    dest = Path(__file__).resolve().parents[1] / "src" / "mutafold" / "data"
    dest.mkdir(parents=True, exist_ok=True)
    path = dest / "named_classes.json"
    path.write_text(json.dumps(out, indent=None, sort_keys=True), encoding="utf-8")
    print(f"wrote {path} ({path.stat().st_size} bytes)")


if __name__ == "__main__":
    main()
