import pytest

from conftest import random_gluing
from mutafold.blocks import block_catalog, template_by_tag
from mutafold.diagram import Diagram, diagram_of, mutate_diagram, subdiagram
from mutafold.errors import UnknownBlockMatrix
from mutafold.matrix import validate
from mutafold.sdecomp import (
    BlockPlacement,
    SDecomposition,
    all_decompositions,
    assign_matrix_options,
    decomposition_weight,
    is_s_decomposable,
    regular_irregular_split,
    validate_decomposition,
)
from mutafold.classes import is_mutation_finite_diagram
from mutafold.named import named_representative
from mutafold.tables import NONLOCAL_EXAMPLE_BASE


class TestCatalog:
    def test_twelve_families(self):
        assert len({t.family for t in block_catalog()}) == 12

    def test_thirteen_templates(self):
        assert len(block_catalog()) == 13

    def test_vi_has_no_outlets(self):
        assert template_by_tag("VI~").outlets == frozenset()

    def test_iiia_regular_option(self):
        opts = template_by_tag("IIIa~").matrix_options
        assert opts[0].base.rows == ((0, -1), (2, 0))
        assert opts[0].kind == "regular"
        assert opts[1].base.rows == ((0, -2), (1, 0))
        assert opts[1].kind == "irregular"

    def test_outlet_outlet_edges_are_simple(self):
        for tpl in block_catalog():
            for t, h, w in tpl.diagram().edges:
                if t in tpl.outlets and h in tpl.outlets:
                    assert w == 1, tpl.tag

    def test_options_share_the_template_diagram(self):
        from mutafold.diagram import canonical_key

        for tpl in block_catalog():
            want = tpl.diagram().edges
            for opt in tpl.matrix_options:
                assert diagram_of(opt.base).edges == want, tpl.tag


class TestGluingSelfTest:
    def test_two_type_i_same_direction_gives_weight_4(self):
        dec = SDecomposition(
            blocks=[BlockPlacement("I", (1, 2)), BlockPlacement("I", (1, 2))]
        )
        S = Diagram(2, [(1, 2, 4)])
        assert validate_decomposition(S, dec)

    def test_two_type_i_opposite_directions_cancel(self):
        dec = SDecomposition(
            blocks=[BlockPlacement("I", (1, 2)), BlockPlacement("I", (2, 1))]
        )
        assert validate_decomposition(Diagram(2, []), dec)
        assert not validate_decomposition(Diagram(2, [(1, 2, 4)]), dec)


class TestDecide:
    def test_single_vertex(self):
        dec = is_s_decomposable(Diagram(1, []))
        assert dec is not None and dec.blocks[0].tag == "vertex"

    def test_exceptional_path_uses_two_iii_blocks(self):
        # the weight-2 directed path: its preferred decomposition avoids the
        # cancelling IV~+I gluing
        S = Diagram(3, [(1, 2, 2), (2, 3, 2)])
        dec = is_s_decomposable(S)
        assert dec is not None
        assert sorted(b.tag for b in dec.blocks) == ["IIIa~", "IIIb~"]
        assert len(all_decompositions(S, limit=10)) == 3

    def test_fig7_types_non_decomposable(self):
        for tag in ("G2~", "F4", "F4~", "G2(*,+)", "G2(*,*)", "F4(*,+)", "F4(*,*)"):
            assert is_s_decomposable(named_representative(tag)) is None, tag

    def test_weight3_immediately_fails(self):
        assert is_s_decomposable(Diagram(2, [(1, 2, 3)])) is None

    def test_round_trip_random(self, rng):
        for _ in range(40):
            S = random_gluing(rng, max_blocks=3, max_order=10)
            dec = is_s_decomposable(S)
            assert dec is not None
            assert validate_decomposition(S, dec)

    def test_brute_force_small_orders(self, rng):
        # cross-check the decision on all realizable diagrams of order <= 3
        # with weights in {1,2,3,4} against first principles: a diagram is
        # decomposable iff the search finds a cover, and every cover found
        # validates.  Exhaustiveness of the search is exercised by validating
        # every returned cover and by the weight-3 rule.
        from itertools import product

        from mutafold.diagram import check_realizable

        shapes3 = [
            [(1, 2), (2, 3)],
            [(1, 2), (2, 3), (3, 1)],
        ]
        count = 0
        for shape in shapes3:
            for ws in product((1, 2, 3, 4), repeat=len(shape)):
                for dirs in product((0, 1), repeat=len(shape)):
                    edges = [
                        (t, h, w) if not flip else (h, t, w)
                        for (t, h), w, flip in zip(shape, ws, dirs)
                    ]
                    S = Diagram(3, edges)
                    if not check_realizable(S):
                        continue
                    count += 1
                    dec = is_s_decomposable(S)
                    if dec is not None:
                        assert validate_decomposition(S, dec)
                    if any(w == 3 for w in ws):
                        assert dec is None
        assert count > 50


class TestValidate:
    def test_identified_outlets_of_same_block_rejected(self):
        dec = SDecomposition(blocks=[BlockPlacement("I", (1, 1))])
        assert not validate_decomposition(Diagram(1, []), dec)

    def test_missing_edge_rejected(self):
        S = Diagram(3, [(1, 2, 1), (2, 3, 1)])
        dec = SDecomposition(blocks=[BlockPlacement("I", (1, 2))])
        assert not validate_decomposition(S, dec)

    def test_triple_cover_rejected(self):
        dec = SDecomposition(
            blocks=[
                BlockPlacement("I", (1, 2)),
                BlockPlacement("I", (1, 3)),
                BlockPlacement("I", (1, 4)),
            ]
        )
        S = Diagram(4, [(1, 2, 1), (1, 3, 1), (1, 4, 1)])
        assert not validate_decomposition(S, dec)


class TestWeightAndSplit:
    def test_nonlocal_example_weights(self):
        B = validate(NONLOCAL_EXAMPLE_BASE)
        S = diagram_of(B)
        dec = is_s_decomposable(S)
        assert decomposition_weight(S, dec, B).w == 2
        regular, irregular = regular_irregular_split(dec, B)
        assert sorted(b.tag for b in irregular) == ["IIIa~", "IIIa~"]
        assert [b.tag for b in regular] == ["I"]

    def test_local_recipe_weight_one(self, rng):
        from mutafold.unfolding import local_unfolding

        S = random_gluing(rng, max_blocks=3, max_order=9)
        dec = is_s_decomposable(S)
        spec = local_unfolding(S, dec)
        assert decomposition_weight(S, dec, spec.base).w == 1

    def test_skew_symmetric_weight_one(self):
        S = Diagram(2, [(1, 2, 1)])
        dec = is_s_decomposable(S)
        B = validate([[0, 1], [-1, 0]])
        assert decomposition_weight(S, dec, B).w == 1

    def test_iiia_option_kinds(self):
        S = Diagram(2, [(2, 1, 2)])
        dec = SDecomposition(blocks=[BlockPlacement("IIIa~", (1, 2))])
        reg, irr = regular_irregular_split(dec, validate([[0, -1], [2, 0]]))
        assert len(reg) == 1 and not irr
        reg, irr = regular_irregular_split(dec, validate([[0, -2], [1, 0]]))
        assert len(irr) == 1 and not reg

    def test_unknown_matrix_raises(self):
        S = Diagram(2, [(1, 2, 1)])
        dec = is_s_decomposable(S)
        stray = validate([[0, 2], [-2, 0]])
        with pytest.raises(UnknownBlockMatrix):
            assign_matrix_options(dec, stray)


def _connected_diagrams_up_to_order_4(max_weight=4):
    """All connected realizable diagrams on 2..4 vertices with weights in
    {1..max_weight}, one per isomorphism class."""
    from itertools import combinations, product

    from mutafold.diagram import canonical_key, check_realizable

    shapes = {2: [[(1, 2)]], 3: [], 4: []}
    for n in (3, 4):
        pairs = list(combinations(range(1, n + 1), 2))
        for mask in range(1, 2 ** len(pairs)):
            chosen = [p for i, p in enumerate(pairs) if mask >> i & 1]
            verts = {v for p in chosen for v in p}
            if verts != set(range(1, n + 1)):
                continue
            parent = list(range(n + 1))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for a, b in chosen:
                parent[find(a)] = find(b)
            if len({find(v) for v in range(1, n + 1)}) == 1:
                shapes[n].append(chosen)
    out = {}
    for n, shape_list in shapes.items():
        for shape in shape_list:
            for ws in product(range(1, max_weight + 1), repeat=len(shape)):
                for dirs in product((0, 1), repeat=len(shape)):
                    edges = [
                        (t, h, w) if not flip else (h, t, w)
                        for (t, h), w, flip in zip(shape, ws, dirs)
                    ]
                    S = Diagram(n, edges)
                    if not check_realizable(S):
                        continue
                    out.setdefault(canonical_key(S).bytes, S)
    return list(out.values())


@pytest.mark.slow
def test_completeness_against_classification_order_4():
    """Completeness spot-check: on every connected realizable diagram of
    order <= 4 with weights in {1..4}, the search's verdict matches the
    classification theorem (mutation-finite and not in a named class iff
    s-decomposable; order-2 diagrams decompose iff the weight is 1, 2 or 4).
    """
    from mutafold.classes import classify_named_type, is_mutation_finite_diagram

    diagrams = _connected_diagrams_up_to_order_4()
    assert len(diagrams) > 400
    for S in diagrams:
        got = is_s_decomposable(S) is not None
        if S.n == 2:
            expected = S.edges[0][2] in (1, 2, 4)
        else:
            summary = is_mutation_finite_diagram(S)
            if not summary.finite:
                expected = False
            else:
                expected = classify_named_type(S, check_finite=False) is None
        assert got == expected, S


class TestClosureProperties:
    def test_mutation_closure_sample(self, rng):
        for _ in range(15):
            S = random_gluing(rng, max_blocks=3, max_order=9)
            cur = S
            for _ in range(6):
                cur = mutate_diagram(cur, rng.randint(1, cur.n))
                assert is_s_decomposable(cur) is not None

    def test_subdiagram_closure_sample(self, rng):
        for _ in range(10):
            S = random_gluing(rng, max_blocks=3, max_order=9)
            for drop in range(1, S.n + 1):
                keep = [v for v in range(1, S.n + 1) if v != drop]
                assert is_s_decomposable(subdiagram(S, keep)) is not None

    def test_decomposable_implies_finite_sample(self, rng):
        for _ in range(8):
            S = random_gluing(rng, max_blocks=2, max_order=8)
            assert is_mutation_finite_diagram(S).finite
