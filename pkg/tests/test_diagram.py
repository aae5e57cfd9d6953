import pytest

from conftest import rand_exchange_matrix
from mutafold.diagram import (
    Diagram,
    canonical_key,
    check_realizable,
    chordless_cycles,
    diagram_of,
    matrices_of,
    mutate_diagram,
    subdiagram,
)
from mutafold.errors import NotRealizable, ValidationError
from mutafold.matrix import matrix_canonical_key, mutate_matrix, validate


class TestDiagramOf:
    def test_zero_matrix(self):
        S = diagram_of(validate([[0, 0], [0, 0]]))
        assert S.edges == ()

    def test_single_edge(self):
        S = diagram_of(validate([[0, 2], [-1, 0]]))
        assert S.edges == ((1, 2, 2),)

    def test_example_2_7_triangle(self):
        S = diagram_of(validate([[0, 2, -4], [-1, 0, 2], [1, -1, 0]]))
        assert set(S.edges) == {(1, 2, 2), (2, 3, 2), (3, 1, 4)}

    def test_no_parallel_edges_or_loops(self):
        with pytest.raises(ValidationError):
            Diagram(2, [(1, 2, 1), (2, 1, 1)])
        with pytest.raises(ValidationError):
            Diagram(2, [(1, 1, 1)])


class TestRealizable:
    def test_forest(self):
        assert check_realizable(Diagram(4, [(1, 2, 2), (2, 3, 3), (2, 4, 5)]))

    def test_non_square_triangle(self):
        assert not check_realizable(Diagram(3, [(1, 2, 1), (2, 3, 1), (3, 1, 2)]))

    def test_example_2_7_triangle(self):
        assert check_realizable(Diagram(3, [(1, 2, 2), (2, 3, 2), (3, 1, 4)]))


class TestChordlessCycles:
    def test_tree(self):
        assert chordless_cycles(Diagram(3, [(1, 2, 1), (2, 3, 1)])) == []

    def test_triangle(self):
        assert chordless_cycles(Diagram(3, [(1, 2, 1), (2, 3, 1), (3, 1, 1)])) == [
            [1, 2, 3]
        ]

    def test_square_with_chord(self):
        cycles = chordless_cycles(
            Diagram(4, [(1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 1, 1), (1, 3, 1)])
        )
        assert sorted(map(sorted, cycles)) == [[1, 2, 3], [1, 3, 4]]

    def test_square_without_chord(self):
        cycles = chordless_cycles(
            Diagram(4, [(1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 1, 1)])
        )
        assert sorted(map(sorted, cycles)) == [[1, 2, 3, 4]]


class TestMutateDiagram:
    def test_path_to_triangle(self):
        S = Diagram(3, [(1, 2, 1), (2, 3, 1)])
        out = mutate_diagram(S, 2)
        assert set(out.edges) == {(1, 3, 1), (2, 1, 1), (3, 2, 1)}

    def test_triangle_444_fixed_point(self):
        S = Diagram(3, [(1, 2, 4), (2, 3, 4), (3, 1, 4)])
        out = mutate_diagram(S, 2)
        assert sorted(w for _, _, w in out.edges) == [4, 4, 4]

    def test_involution_random(self, rng):
        for _ in range(200):
            B = rand_exchange_matrix(rng, rng.randint(2, 7))
            S = diagram_of(B)
            k = rng.randint(1, S.n)
            assert mutate_diagram(mutate_diagram(S, k), k) == S

    def test_unrealizable_raises(self):
        S = Diagram(3, [(1, 2, 1), (2, 3, 2), (3, 1, 1)])
        with pytest.raises(NotRealizable):
            mutate_diagram(S, 2)

    def test_commuting_square(self, rng):
        for _ in range(500):
            B = rand_exchange_matrix(rng, rng.randint(2, 8))
            S = diagram_of(B)
            k = rng.randint(1, S.n)
            left = canonical_key(diagram_of(mutate_matrix(B, k)))
            right = canonical_key(mutate_diagram(S, k))
            assert left == right

    def test_realizability_preserved(self, rng):
        for _ in range(100):
            B = rand_exchange_matrix(rng, rng.randint(2, 6))
            S = diagram_of(B)
            for _ in range(3):
                S = mutate_diagram(S, rng.randint(1, S.n))
            assert check_realizable(S)


class TestMatricesOf:
    def test_simple_edge(self):
        mats = matrices_of(Diagram(2, [(1, 2, 1)]))
        assert [m.rows for m in mats] == [((0, 1), (-1, 0))]

    def test_nonunique_example(self):
        # the 3-vertex diagram corresponding to exactly two matrices
        S = Diagram(3, [(1, 2, 1), (2, 3, 2)])
        mats = matrices_of(S)
        assert len(mats) == 2
        rows = {m.rows for m in mats}
        assert ((0, 1, 0), (-1, 0, 1), (0, -2, 0)) in rows
        assert ((0, 1, 0), (-1, 0, 2), (0, -1, 0)) in rows

    def test_weight4_edge(self):
        mats = matrices_of(Diagram(2, [(1, 2, 4)]))
        assert len(mats) == 3

    def test_contains_source_matrix(self, rng):
        for _ in range(50):
            B = rand_exchange_matrix(rng, rng.randint(2, 5), max_d=2)
            key = matrix_canonical_key(B)
            assert any(
                matrix_canonical_key(M) == key for M in matrices_of(diagram_of(B))
            )

    def test_square_weights_iff_skew_symmetric_realization(self, rng):
        from math import isqrt

        for _ in range(60):
            B = rand_exchange_matrix(rng, rng.randint(2, 5), max_d=2)
            S = diagram_of(B)
            squares = all(isqrt(w) ** 2 == w for _, _, w in S.edges)
            has_skew = any(M.is_skew_symmetric() for M in matrices_of(S))
            assert squares == has_skew


class TestCanonicalKeyAndSubdiagram:
    def test_relabeling_invariance(self, rng):
        for _ in range(100):
            B = rand_exchange_matrix(rng, rng.randint(2, 6))
            S = diagram_of(B)
            perm = list(range(1, S.n + 1))
            rng.shuffle(perm)
            relabeled = Diagram(
                S.n, [(perm[t - 1], perm[h - 1], w) for t, h, w in S.edges]
            )
            assert canonical_key(S) == canonical_key(relabeled)

    def test_reversed_single_edge(self):
        assert canonical_key(Diagram(2, [(1, 2, 1)])) == canonical_key(
            Diagram(2, [(2, 1, 1)])
        )

    def test_cyclic_vs_acyclic_triangle(self):
        cyc = Diagram(3, [(1, 2, 1), (2, 3, 1), (3, 1, 1)])
        acyc = Diagram(3, [(1, 2, 1), (2, 3, 1), (1, 3, 1)])
        assert canonical_key(cyc) != canonical_key(acyc)

    def test_subdiagram(self):
        S = Diagram(3, [(1, 2, 2), (2, 3, 2), (3, 1, 4)])
        sub = subdiagram(S, [1, 2])
        assert sub.edges == ((1, 2, 2),)
        assert sub.source_labels == (1, 2)
        assert subdiagram(S, [1, 2, 3]) == S
        assert subdiagram(S, []).n == 0
