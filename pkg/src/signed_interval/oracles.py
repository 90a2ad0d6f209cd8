"""Exhaustive realizability oracles that never consult a min ordering.

A digraph on ``n`` vertices is encoded as the integer
``sum(rows[u] << (u * n))``; a ``k x l`` bi-adjacency matrix as
``sum(M[i][j] << (i * l + j))``.

Signed-interval models: the arc relation only compares ``x`` values with
``y`` and ``z`` values, so every model can be compressed to ``x`` in
``1..n`` and ``y, z`` in ``0..n`` (replace each ``y`` by the largest ``x``
rank not exceeding it).  Bi-arc models: only the clockwise ends of the ``I``
arcs against the counterclockwise ends of the ``J`` arcs matter, and vice
versa, so every consistent model is equivalent to one on a grid with the
clockwise ends at ranks ``1..n`` (a permutation) and each counterclockwise
end in one of the ``n + 1`` gaps.  Ray models compress the same way.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

import numpy as np

from .biarc import BiArcModel, realize_biarc
from .graph import Digraph
from .interval_models import SignedIntervalModel, realize_signed
from .rays import RayModel, realize_rays

#: Largest ``n`` the vectorized digraph oracles accept.
MAX_ORACLE_N = 4


def encode(h: Digraph) -> int:
    return sum(r << (u * h.n) for u, r in enumerate(h.rows))


def encode_biadjacency(matrix) -> int:
    l = len(matrix[0]) if matrix else 0
    return sum(e << (i * l + j) for i, row in enumerate(matrix) for j, e in enumerate(row))


def _threshold_codes(ranks, n_rows, n_cols, bit):
    """Codes of all matrices ``[i, j] = (rank_c[j] <= s_i) and (rank_r[i] <= t_j)``.

    ``ranks`` is ``(rank_r, rank_c)``; thresholds ``s_i`` and ``t_j`` range
    over ``0..max rank``.  ``bit(i, j)`` gives the bit of entry ``(i, j)``.
    """
    rank_r, rank_c = ranks
    top = max(list(rank_r) + list(rank_c) + [0])
    levels = range(top + 1)
    row_opts = []
    for i in range(n_rows):
        row_opts.append([sum(1 << bit(i, j) for j in range(n_cols) if rank_c[j] <= s) for s in levels])
    col_opts = []
    for j in range(n_cols):
        col_opts.append([sum(1 << bit(i, j) for i in range(n_rows) if rank_r[i] <= t) for t in levels])
    rows = np.zeros(1, dtype=np.int64)
    for opts in row_opts:
        rows = (rows[:, None] | np.array(opts, dtype=np.int64)[None, :]).ravel()
    cols = np.zeros(1, dtype=np.int64)
    for opts in col_opts:
        cols = (cols[:, None] | np.array(opts, dtype=np.int64)[None, :]).ravel()
    return np.unique(np.bitwise_and.outer(rows, cols))


def _mark(n_bits: int, x_family, n_rows, n_cols, bit, ranks_of) -> np.ndarray:
    seen = np.zeros(1 << n_bits, dtype=bool)
    for xs in x_family:
        seen[_threshold_codes(ranks_of(xs), n_rows, n_cols, bit)] = True
    return seen


@lru_cache(maxsize=None)
def signed_realizable(n: int) -> frozenset:
    """Codes of all digraphs on ``n`` vertices with a signed-interval model."""
    _check_n(n)
    if n == 0:
        return frozenset({0})
    # arc u->v iff x_v <= y_u (row threshold) and x_u <= z_v (column threshold)
    seen = _mark(n * n, product(range(1, n + 1), repeat=n), n, n,
                 lambda u, v: u * n + v, lambda xs: (xs, xs))
    return frozenset(np.flatnonzero(seen).tolist())


@lru_cache(maxsize=None)
def biarc_realizable(n: int) -> frozenset:
    """Codes of all digraphs on ``n`` vertices with a bi-arc model."""
    _check_n(n)
    if n == 0:
        return frozenset({0})
    # rank = clockwise position of both arcs; a->b iff rank(a) < gap of J_b's ccw end
    # and rank(b) < gap of I_a's ccw end
    seen = _mark(n * n, permutations(range(1, n + 1)), n, n,
                 lambda u, v: u * n + v, lambda xs: (xs, xs))
    return frozenset(np.flatnonzero(seen).tolist())


@lru_cache(maxsize=None)
def ray_realizable(k: int, l: int) -> frozenset:
    """Codes of all ``k x l`` bi-adjacency matrices with a two-directional ray model.

    ``a b`` is an arc iff ``r_b <= u_a`` and ``v_a <= s_b``; only the order of
    the ``r`` values among ``B`` and of the ``v`` values among ``A`` matters
    once each ``u_a`` and ``s_b`` is replaced by a threshold.
    """
    if k * l == 0:
        return frozenset({0})
    if k > 4 or l > 4:
        raise ValueError("ray oracle is limited to 4 x 4")
    seen = np.zeros(1 << (k * l), dtype=bool)
    for v_rank in permutations(range(1, k + 1)):
        for r_rank in permutations(range(1, l + 1)):
            codes = _threshold_codes((v_rank, r_rank), k, l, lambda i, j: i * l + j)
            seen[codes] = True
    return frozenset(np.flatnonzero(seen).tolist())


def _check_n(n):
    if not 0 <= n <= MAX_ORACLE_N:
        raise ValueError(f"oracle is limited to n <= {MAX_ORACLE_N}")


# -- explicit-model versions for cross-checking the vectorized ones --------------------------


def signed_realizable_explicit(n: int) -> frozenset:
    """Same set as :func:`signed_realizable`, by calling :func:`realize_signed` on every grid model."""
    out = set()
    for xs in product(range(1, n + 1), repeat=n):
        for ys in product(range(n + 1), repeat=n):
            for zs in product(range(n + 1), repeat=n):
                out.add(encode(realize_signed(SignedIntervalModel(xs, ys, zs))))
    return frozenset(out)


def biarc_realizable_explicit(n: int) -> frozenset:
    """Same set as :func:`biarc_realizable`, by realizing every grid bi-arc model."""
    step = Fraction(1, 4 * (n + 1))
    half = Fraction(1, 2)
    out = set()
    for ranks in permutations(range(1, n + 1)):
        for i_gaps in product(range(n + 1), repeat=n):
            for j_gaps in product(range(n + 1), repeat=n):
                I = [(half + (i_gaps[v] + half) * step, ranks[v] * step) for v in range(n)]
                J = [((j_gaps[v] + half) * step, half + ranks[v] * step) for v in range(n)]
                out.add(encode(realize_biarc(BiArcModel(I, J))))
    return frozenset(out)


def ray_realizable_explicit(k: int, l: int) -> frozenset:
    """Same set as :func:`ray_realizable`, by realizing every grid ray model."""
    out = set()
    for v_rank in permutations(range(1, k + 1)):
        for r_rank in permutations(range(1, l + 1)):
            for us in product(range(l + 1), repeat=k):
                for ss in product(range(k + 1), repeat=l):
                    # u threshold between r ranks; s threshold between v ranks (ties resolved by +1/2)
                    P = {a: (Fraction(2 * us[a] + 1, 2), v_rank[a]) for a in range(k)}
                    Q = {k + b: (r_rank[b], Fraction(2 * ss[b] + 1, 2)) for b in range(l)}
                    bip = realize_rays(RayModel(P, Q))
                    out.add(encode_biadjacency(bip.biadjacency()))
    return frozenset(out)
