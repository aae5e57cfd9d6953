"""Shared generators for randomized property tests.

Random exchange matrices are built through a random symmetrizer d and random
skew-symmetric integer "symmetrized parts", which yields every
skew-symmetrizable matrix shape; random s-decomposable diagrams are built by
actually gluing random catalog blocks, so they are decomposable by
construction.
"""

from __future__ import annotations

import random
from math import lcm

import pytest

from mutafold.blocks import block_catalog
from mutafold.diagram import Diagram
from mutafold.matrix import ExchangeMatrix


def rand_exchange_matrix(
    rng: random.Random, n: int, max_d: int = 3, max_mult: int = 2, density: float = 0.6
) -> ExchangeMatrix:
    d = [rng.randint(1, max_d) for _ in range(n)]
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() > density:
                continue
            step = lcm(d[i], d[j])
            m = step * rng.randint(1, max_mult) * rng.choice((1, -1))
            rows[i][j] = m // d[j]
            rows[j][i] = -m // d[i]
    return ExchangeMatrix(rows)


def random_gluing(
    rng: random.Random, max_blocks: int = 4, max_order: int = 12
) -> Diagram:
    cat = block_catalog()
    while True:
        k = rng.randint(1, max_blocks)
        tpls = [rng.choice(cat) for _ in range(k)]
        next_v = 0
        images = []
        outlet_pool = []  # (ambient vertex, block index)
        for bi, tpl in enumerate(tpls):
            img = {t: None for t in range(1, tpl.n + 1)}
            for t in sorted(tpl.outlets):
                if outlet_pool and rng.random() < 0.5:
                    choices = [p for p in outlet_pool if p[1] != bi]
                    if choices:
                        v, _ = rng.choice(choices)
                        if v not in img.values():
                            img[t] = v
                            outlet_pool = [p for p in outlet_pool if p[0] != v]
                            continue
            for t in range(1, tpl.n + 1):
                if img[t] is None:
                    next_v += 1
                    img[t] = next_v
                    if t in tpl.outlets:
                        outlet_pool.append((next_v, bi))
            images.append(img)
        if next_v > max_order:
            continue
        contribs = {}
        for tpl, img in zip(tpls, images):
            for t, h, w in tpl.diagram().edges:
                a, b = img[t], img[h]
                p, s = ((a, b), w) if a < b else ((b, a), -w)
                contribs.setdefault(p, []).append(s)
        edges = []
        bad = False
        for (a, b), L in contribs.items():
            if len(L) == 1:
                s = L[0]
            elif len(L) == 2 and abs(L[0]) == 1 and abs(L[1]) == 1:
                s = 4 * L[0] if L[0] == L[1] else 0
            else:
                bad = True
                break
            if s > 0:
                edges.append((a, b, s))
            elif s < 0:
                edges.append((b, a, -s))
        if bad:
            continue
        return Diagram(next_v, edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260809)
