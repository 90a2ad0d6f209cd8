"""0/1 matrices, 2x2 pattern submatrices and permutation searches.

A submatrix here is an order-preserving choice of two rows ``i1 < i2`` and
two columns ``j1 < j2``.  Indices are 0-based.
"""
from __future__ import annotations

from itertools import permutations
from math import factorial
from typing import Iterable, Optional, Sequence

from .exceptions import BudgetExceededError, GraphInputError
from .graph import Digraph
from .ordering import find_min_ordering

#: Largest size for brute-force simultaneous permutation searches.
MAX_SIMULTANEOUS_N = 8
#: Largest ``k! * l!`` for brute-force independent permutation searches.
MAX_INDEPENDENT_WORK = 10**6


class BinaryMatrix:
    """Immutable rectangular 0/1 matrix."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(e) for e in row) for row in rows)
        width = len(rows[0]) if rows else 0
        for i, row in enumerate(rows):
            if len(row) != width:
                raise GraphInputError(f"matrix row {i} has length {len(row)}, expected {width}")
            if any(e not in (0, 1) for e in row):
                raise GraphInputError(f"matrix row {i} has a non-binary entry")
        self.rows = rows

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]) -> "BinaryMatrix":
        """Matrix whose row ``i`` is row ``row_order[i]`` of this one (likewise columns)."""
        return BinaryMatrix([[self.rows[r][c] for c in col_order] for r in row_order])

    def to_digraph(self) -> Digraph:
        return Digraph.from_matrix(self.rows)

    @classmethod
    def from_digraph(cls, h: Digraph) -> "BinaryMatrix":
        return cls(h.adjacency_matrix())

    def __eq__(self, other):
        if isinstance(other, BinaryMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"BinaryMatrix({[list(r) for r in self.rows]})"

    def __str__(self):
        return "\n".join("".join(map(str, row)) for row in self.rows)


def as_matrix(m) -> BinaryMatrix:
    return m if isinstance(m, BinaryMatrix) else BinaryMatrix(m)


K = BinaryMatrix([[0, 1], [1, 0]])
L = BinaryMatrix([[0, 1], [1, 1]])
GAMMA = BinaryMatrix([[1, 1], [1, 0]])
ID = BinaryMatrix([[1, 0], [0, 1]])

PATTERNS = {"K": K, "L": L, "Gamma": GAMMA, "ID": ID}


def pattern(name_or_matrix) -> BinaryMatrix:
    if isinstance(name_or_matrix, str):
        try:
            return PATTERNS[name_or_matrix]
        except KeyError:
            raise GraphInputError(f"unknown pattern {name_or_matrix!r}; choose from {sorted(PATTERNS)}")
    return as_matrix(name_or_matrix)


def find_pattern(m, p) -> Optional[tuple[int, int, int, int]]:
    """First ``(i1, i2, j1, j2)`` in lexicographic order where ``m`` contains ``p``."""
    m, p = as_matrix(m), pattern(p)
    rows = m.rows
    k, l = m.shape
    (p00, p01), (p10, p11) = p.rows
    for i1 in range(k):
        r1 = rows[i1]
        for i2 in range(i1 + 1, k):
            r2 = rows[i2]
            for j1 in range(l):
                if r1[j1] != p00 or r2[j1] != p10:
                    continue
                for j2 in range(j1 + 1, l):
                    if r1[j2] == p01 and r2[j2] == p11:
                        return (i1, i2, j1, j2)
    return None


def is_free_of(m, patterns: Iterable) -> bool:
    return all(find_pattern(m, p) is None for p in patterns)


def is_KL_free(m) -> bool:
    return is_free_of(m, (K, L))


def min_orderable(m) -> Optional[list[int]]:
    """Simultaneous row/column order making a square matrix K,L-free, or ``None``.

    The returned list gives the original indices in their new order.
    """
    m = as_matrix(m)
    k, l = m.shape
    if k != l:
        raise GraphInputError(f"min-orderability needs a square matrix, got {k}x{l}")
    ordering = find_min_ordering(m.to_digraph())
    return None if ordering is None else list(ordering.order)


def augment(m) -> BinaryMatrix:
    """Square ``(k+l)``-matrix with ``m`` in the first ``k`` rows and last ``l`` columns."""
    m = as_matrix(m)
    k, l = m.shape
    size = k + l
    out = [[0] * size for _ in range(size)]
    for i in range(k):
        for j in range(l):
            out[i][k + j] = m.rows[i][j]
    return BinaryMatrix(out)


def _independent_bound(k: int, l: int) -> None:
    if factorial(k) * factorial(l) > MAX_INDEPENDENT_WORK:
        raise BudgetExceededError(
            f"independent search over {k}! * {l}! permutations exceeds {MAX_INDEPENDENT_WORK}"
        )


def free_independent(m, patterns: Iterable) -> Optional[tuple[list[int], list[int]]]:
    """Brute force over row and column permutations separately."""
    m = as_matrix(m)
    patterns = [pattern(p) for p in patterns]
    k, l = m.shape
    _independent_bound(k, l)
    for rows in permutations(range(k)):
        for cols in permutations(range(l)):
            if is_free_of(m.permuted(rows, cols), patterns):
                return list(rows), list(cols)
    return None


def free_simultaneous(m, patterns: Iterable) -> Optional[list[int]]:
    """Brute force over simultaneous row/column permutations of a square matrix."""
    m = as_matrix(m)
    patterns = [pattern(p) for p in patterns]
    k, l = m.shape
    if k != l:
        raise GraphInputError(f"simultaneous permutation needs a square matrix, got {k}x{l}")
    if k > MAX_SIMULTANEOUS_N:
        raise BudgetExceededError(f"simultaneous search refused for n={k}; bound is {MAX_SIMULTANEOUS_N}")
    for perm in permutations(range(k)):
        if is_free_of(m.permuted(perm, perm), patterns):
            return list(perm)
    return None


def independent_KL_free(m, method: str = "augment") -> Optional[tuple[list[int], list[int]]]:
    """Independent row and column orders making ``m`` K,L-free, or ``None``.

    ``method="augment"`` orders the square augmentation simultaneously and
    splits the result; ``method="brute"`` searches all ``k! * l!`` pairs.
    """
    m = as_matrix(m)
    if method == "brute":
        return free_independent(m, (K, L))
    if method != "augment":
        raise GraphInputError(f"unknown method {method!r}")
    k, _ = m.shape
    perm = min_orderable(augment(m))
    if perm is None:
        return None
    rows = [i for i in perm if i < k]
    cols = [i - k for i in perm if i >= k]
    if not is_KL_free(m.permuted(rows, cols)):
        raise AssertionError("augmented ordering does not project to a K,L-free matrix")
    return rows, cols


def gamma_free_simultaneous(m) -> Optional[list[int]]:
    return free_simultaneous(m, (GAMMA,))


def gamma_free_independent(m) -> Optional[tuple[list[int], list[int]]]:
    return free_independent(m, (GAMMA,))


TRANSFORMS = ("rotate180", "transpose", "reverse-rows", "reverse-cols")


def transform(m, op: str) -> BinaryMatrix:
    m = as_matrix(m)
    rows = [list(r) for r in m.rows]
    if op == "rotate180":
        return BinaryMatrix([r[::-1] for r in rows[::-1]])
    if op == "transpose":
        return BinaryMatrix(zip(*rows)) if rows else BinaryMatrix([])
    if op == "reverse-rows":
        return BinaryMatrix(rows[::-1])
    if op == "reverse-cols":
        return BinaryMatrix([r[::-1] for r in rows])
    raise GraphInputError(f"unknown transform {op!r}; choose from {TRANSFORMS}")


def rotate180_indices(shape: tuple[int, int], where: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    """Where a submatrix at ``where`` lands after :func:`transform` with ``rotate180``."""
    k, l = shape
    i1, i2, j1, j2 = where
    return (k - 1 - i2, k - 1 - i1, l - 1 - j2, l - 1 - j1)


def submatrix(m, where: tuple[int, int, int, int]) -> BinaryMatrix:
    m = as_matrix(m)
    i1, i2, j1, j2 = where
    return BinaryMatrix([[m[i1, j1], m[i1, j2]], [m[i2, j1], m[i2, j2]]])
