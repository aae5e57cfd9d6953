"""Exact representation and mutation of skew-symmetrizable integer matrices.

Entries are held as Python ints but are confined to the signed 64-bit range:
any operation that would leave it raises EntryOverflow instead of silently
producing huge numbers (runaway growth is how infinite mutation classes
manifest, and it should be loud).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, Sequence, Tuple

from .canon import canonical_certificate
from .errors import (
    EntryOverflow,
    IndexOutOfRange,
    NotSignSkewSymmetric,
    NotSkewSymmetrizable,
)

INT64_MAX = 2**63 - 1


class ExchangeMatrix:
    """Immutable sign-skew-symmetric integer matrix with a skew-symmetrizer.

    Skew-symmetrizability is checked at construction; instances are safe to
    share between threads and hashable.
    """

    __slots__ = ("n", "rows", "_key")

    def __init__(self, entries: Sequence[Sequence[int]], _trusted: bool = False):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(rows)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_key", None)
        if not _trusted:
            self._validate()

    def __setattr__(self, name, value):  # immutability
        raise AttributeError("ExchangeMatrix is immutable")

    def _validate(self) -> None:
        n = self.n
        for row in self.rows:
            if len(row) != n:
                raise NotSignSkewSymmetric("matrix is not square")
            for x in row:
                if abs(x) > INT64_MAX:
                    raise EntryOverflow(f"entry {x} outside 64-bit range")
        for i in range(n):
            if self.rows[i][i] != 0:
                raise NotSignSkewSymmetric(f"nonzero diagonal entry at index {i + 1}")
            for j in range(i + 1, n):
                a, b = self.rows[i][j], self.rows[j][i]
                if (a == 0) != (b == 0) or a * b > 0:
                    raise NotSignSkewSymmetric(
                        f"entries ({i + 1},{j + 1})=({a},{b}) have incompatible signs"
                    )
        find_skew_symmetrizer(self)

    # -- container plumbing -------------------------------------------------

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExchangeMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"ExchangeMatrix({[list(r) for r in self.rows]})"

    def is_skew_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == -self.rows[j][i]
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def transpose_negate(self) -> "ExchangeMatrix":
        n = self.n
        return ExchangeMatrix(
            [[-self.rows[j][i] for j in range(n)] for i in range(n)], _trusted=True
        )


class SkewSymmetrizer:
    """Positive integer diagonal D with BD skew-symmetric, componentwise coprime."""

    __slots__ = ("d",)

    def __init__(self, d: Iterable[int]):
        object.__setattr__(self, "d", tuple(int(x) for x in d))

    def __setattr__(self, name, value):
        raise AttributeError("SkewSymmetrizer is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewSymmetrizer) and self.d == other.d

    def __iter__(self):
        return iter(self.d)

    def __getitem__(self, i: int) -> int:
        return self.d[i - 1]

    def __repr__(self) -> str:
        return f"SkewSymmetrizer({list(self.d)})"


class CartanCompanion:
    """Integer matrix with 2 on the diagonal and -|b_ij| off it."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("CartanCompanion is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, CartanCompanion) and self.rows == other.rows

    def is_positive_definite(self) -> bool:
        """Exact test via leading principal minors (fraction-free Bareiss)."""
        n = len(self.rows)
        a = [list(row) for row in self.rows]
        prev = 1
        for k in range(n):
            if a[k][k] <= 0:
                return False
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return True


def validate(entries: Sequence[Sequence[int]]) -> ExchangeMatrix:
    """Validate raw entries into an ExchangeMatrix.

    Raises NotSignSkewSymmetric or NotSkewSymmetrizable on bad input.
    """
    return ExchangeMatrix(entries)


def find_skew_symmetrizer(B: ExchangeMatrix) -> SkewSymmetrizer:
    """Minimal positive integer d with b_ij d_j = -b_ji d_i.

    Ratios are propagated along a spanning forest of the support graph with
    exact rational arithmetic; every non-tree edge is then verified, and the
    result is scaled to componentwise-coprime integers.  Deterministic.
    """
    n = B.n
    rows = B.rows
    ratio: List[Fraction | None] = [None] * n
    comps: List[List[int]] = []
    for start in range(n):
        if ratio[start] is not None:
            continue
        ratio[start] = Fraction(1)
        comp = [start]
        stack = [start]
        while stack:
            v = stack.pop()
            rv = ratio[v]
            for u in range(n):
                x = rows[v][u]
                if x == 0:
                    continue
                y = rows[u][v]
                # b_vu * d_u = -b_uv(=y) * d_v  =>  d_u/d_v = |y| / |x|
                want = rv * Fraction(abs(y), abs(x))
                if ratio[u] is None:
                    ratio[u] = want
                    comp.append(u)
                    stack.append(u)
                elif ratio[u] != want:
                    raise NotSkewSymmetrizable(
                        f"inconsistent symmetrizer ratio around a cycle through "
                        f"vertices {v + 1} and {u + 1}"
                    )
        comps.append(comp)
    d = [0] * n
    for comp in comps:
        scale = lcm(*(ratio[v].denominator for v in comp))
        vals = [int(ratio[v] * scale) for v in comp]
        g = gcd(*vals)
        for v, val in zip(comp, vals):
            d[v] = val // g
    return SkewSymmetrizer(d)


def mutate_matrix(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation at direction k (1-based)."""
    n = B.n
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"mutation index {k} outside 1..{n}")
    k -= 1
    rows = B.rows
    out = []
    for i in range(n):
        bik = rows[i][k]
        old = rows[i]
        new_row = []
        for j in range(n):
            if i == k or j == k:
                new_row.append(-old[j])
            else:
                bkj = rows[k][j]
                v = old[j] + (abs(bik) * bkj + bik * abs(bkj)) // 2
                if abs(v) > INT64_MAX:
                    raise EntryOverflow(
                        f"entry ({i + 1},{j + 1}) overflows 64 bits after mutation"
                    )
                new_row.append(v)
        out.append(new_row)
    return ExchangeMatrix(out, _trusted=True)


def cartan_companion(B: ExchangeMatrix) -> CartanCompanion:
    n = B.n
    return CartanCompanion(
        [[2 if i == j else -abs(B.rows[i][j]) for j in range(n)] for i in range(n)]
    )


def matrix_canonical_key(B: ExchangeMatrix, sign_quotient: bool = False) -> bytes:
    """Canonical byte string, equal iff matrices differ by a simultaneous
    row/column permutation (optionally also a global sign flip)."""
    cert = canonical_certificate(B.rows)
    if sign_quotient:
        neg = canonical_certificate([[-x for x in row] for row in B.rows])
        cert = min(cert, neg)
    return repr(cert).encode()


def is_finite_type(B: ExchangeMatrix, max_nodes: int = 200_000) -> bool:
    """Whether the cluster algebra of B is of finite type.

    True iff some matrix in the mutation class of B has a positive definite
    Cartan companion.  The class is enumerated through the class engine;
    finite-type inputs always terminate, and BudgetExhausted signals that the
    budget ran out with no witness found.
    """
    from .classes import enumerate_class_matrices

    if cartan_companion(B).is_positive_definite():
        return True
    enum = enumerate_class_matrices(B, max_nodes=max_nodes)
    for witness in enum.witnesses:
        if cartan_companion(witness).is_positive_definite():
            return True
    if not enum.complete:
        from .errors import BudgetExhausted

        raise BudgetExhausted(
            "mutation class not exhausted and no finite-type witness found",
            explored=enum.explored,
        )
    return False
