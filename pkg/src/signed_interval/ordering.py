"""Min orderings: verification, neighbour extrema and exhaustive search.

An ordering lists the vertices from first to last.  Positions are 1-based;
the placeholder ``ALPHA`` sits at position 0 before every vertex and stands
for "no neighbour" in :class:`NeighborExtrema`.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Optional

from .exceptions import GraphInputError, InvalidOrderingError
from .graph import Digraph, _bits

#: Placeholder preceding every vertex; it is never a vertex itself.
ALPHA = None


class VertexOrdering:
    """A linear order of the vertices ``0..n-1``."""

    __slots__ = ("order", "_pos")

    def __init__(self, order: Iterable[int]):
        order = tuple(int(v) for v in order)
        if sorted(order) != list(range(len(order))):
            raise GraphInputError(f"ordering {list(order)} is not a permutation of 0..{len(order) - 1}")
        self.order = order
        pos = [0] * len(order)
        for i, v in enumerate(order):
            pos[v] = i + 1
        self._pos = tuple(pos)

    def pos(self, v: Optional[int]) -> int:
        """1-based position of ``v``; ``ALPHA`` is at position 0."""
        return 0 if v is ALPHA else self._pos[v]

    @property
    def positions(self) -> tuple[int, ...]:
        return self._pos

    def precedes(self, u, v) -> bool:
        return self.pos(u) < self.pos(v)

    def restrict(self, vertices: Iterable[int]) -> "VertexOrdering":
        """Order induced on ``vertices`` after relabelling them ``0..k-1`` in sorted order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return VertexOrdering(index[v] for v in self.order if v in index)

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __eq__(self, other):
        if isinstance(other, VertexOrdering):
            return self.order == other.order
        if isinstance(other, (list, tuple)):
            return list(self.order) == list(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.order)

    def __repr__(self):
        return f"VertexOrdering({list(self.order)})"


def as_ordering(ordering, n: Optional[int] = None) -> VertexOrdering:
    if not isinstance(ordering, VertexOrdering):
        ordering = VertexOrdering(ordering)
    if n is not None and len(ordering) != n:
        raise GraphInputError(f"ordering covers {len(ordering)} vertices, graph has {n}")
    return ordering


@dataclass(frozen=True)
class MinOrderViolation:
    """Arcs ``a->b`` and ``a2->b2`` with ``a < a2`` and ``b2 < b`` but no arc ``a->b2``."""

    a: int
    a2: int
    b: int
    b2: int

    def holds_in(self, h: Digraph, ordering: VertexOrdering) -> bool:
        return (
            h.has_arc(self.a, self.b)
            and h.has_arc(self.a2, self.b2)
            and not h.has_arc(self.a, self.b2)
            and ordering.precedes(self.a, self.a2)
            and ordering.precedes(self.b2, self.b)
        )

    def to_dict(self) -> dict:
        return {"a": self.a, "a2": self.a2, "b": self.b, "b2": self.b2,
                "arcs": [[self.a, self.b], [self.a2, self.b2]], "missing": [self.a, self.b2]}


@dataclass(frozen=True)
class NeighborExtrema:
    """``out_last[v]`` is the last out-neighbour of ``v`` (``O``), ``in_last[v]`` the last in-neighbour (``I``)."""

    out_last: tuple
    in_last: tuple

    def O(self, v):
        return ALPHA if v is ALPHA else self.out_last[v]

    def I(self, v):
        return ALPHA if v is ALPHA else self.in_last[v]


def _permuted_rows(h: Digraph, ordering: VertexOrdering) -> list[int]:
    # rows in order position, with bit k meaning "arc to the vertex at position k+1"
    order = ordering.order
    out = []
    for u in order:
        row = h.rows[u]
        mask = 0
        for k, v in enumerate(order):
            if row >> v & 1:
                mask |= 1 << k
        out.append(mask)
    return out


def verify_min_ordering(h: Digraph, ordering) -> Optional[MinOrderViolation]:
    """Check the min-ordering property directly.

    Returns ``None`` when ``ordering`` is a min ordering of ``h``, otherwise the
    violation that is first in lexicographic order of the positions
    ``(a, a2, b2, b)``.
    """
    ordering = as_ordering(ordering, h.n)
    rows = _permuted_rows(h, ordering)
    order = ordering.order
    n = h.n
    for i in range(n):
        ra = rows[i]
        if not ra:
            continue
        top = ra.bit_length() - 1
        for j in range(i + 1, n):
            # columns b2 with a2->b2 but not a->b2; need some b after b2 with a->b
            cand = rows[j] & ~ra
            if not cand:
                continue
            low = (cand & -cand).bit_length() - 1
            if low < top:
                above = ra >> (low + 1) << (low + 1)
                k = (above & -above).bit_length() - 1
                return MinOrderViolation(a=order[i], a2=order[j], b=order[k], b2=order[low])
    return None


def is_min_ordering(h: Digraph, ordering) -> bool:
    return verify_min_ordering(h, ordering) is None


def extrema(h: Digraph, ordering) -> NeighborExtrema:
    ordering = as_ordering(ordering, h.n)
    pos = ordering.positions

    def last(mask):
        best = ALPHA
        for v in _bits(mask):
            if best is ALPHA or pos[v] > pos[best]:
                best = v
        return best

    return NeighborExtrema(
        out_last=tuple(last(r) for r in h.rows),
        in_last=tuple(last(c) for c in h.cols),
    )


def verify_via_extrema(h: Digraph, ordering) -> Optional[tuple[int, int]]:
    """Check that ``ab`` is an arc exactly when ``a <= I(b)`` and ``b <= O(a)``.

    Returns ``None`` if the biconditional holds for every ordered pair, else the
    first failing pair ``(a, b)`` in position order.
    """
    ordering = as_ordering(ordering, h.n)
    ext = extrema(h, ordering)
    pos = ordering.pos
    for a in ordering.order:
        for b in ordering.order:
            predicted = pos(a) <= pos(ext.in_last[b]) and pos(b) <= pos(ext.out_last[a])
            if predicted != h.has_arc(a, b):
                return (a, b)
    return None


def require_min_ordering(h: Digraph, ordering) -> VertexOrdering:
    """Return ``ordering`` as a :class:`VertexOrdering` or raise with the violation."""
    ordering = as_ordering(ordering, h.n)
    violation = verify_min_ordering(h, ordering)
    if violation is not None:
        raise InvalidOrderingError(f"not a min ordering: {violation}", violation)
    return ordering


def _twin_predecessors(h: Digraph) -> list:
    """``prev[v]`` is the largest ``u < v`` whose transposition with ``v`` is an automorphism.

    Such transpositions generate an equivalence relation, so each class is
    chained in index order; ``None`` marks the first vertex of a class.
    """
    n = h.n
    rows, cols = h.rows, h.cols
    rep = list(range(n))
    prev: list = [None] * n
    last = {}
    for v in range(n):
        for u in range(v):
            if rep[u] != u:
                continue
            others = ~((1 << u) | (1 << v))
            if ((rows[u] ^ rows[v]) & others or (cols[u] ^ cols[v]) & others
                    or (rows[u] >> u & 1) != (rows[v] >> v & 1)
                    or (rows[u] >> v & 1) != (rows[v] >> u & 1)):
                continue
            rep[v] = u
            break
        prev[v] = last.get(rep[v])
        last[rep[v]] = v
    return prev


def _search(h: Digraph, prune_twins: bool) -> Iterator[VertexOrdering]:
    """Depth-first search over prefixes in lexicographic order.

    ``pm[i]`` is the row of the ``i``-th placed vertex restricted to the
    prefix, as a bitmask over positions.  A new vertex ``w`` at position
    ``k`` can only complete violations in which it is the later row (``a2``)
    or the later column (``b``); those are the only ones checked.  With
    ``prune_twins`` interchangeable vertices are placed in index order only,
    which keeps the lexicographically least solution.
    """
    n = h.n
    rows = h.rows
    prev = _twin_predecessors(h) if prune_twins else [None] * n
    placed: list[int] = []
    used = [False] * n
    pm: list[int] = []

    def fits(w: int) -> bool:
        k = len(placed)
        below = (1 << k) - 1
        row_w = rows[w]
        rw = 0
        for i, u in enumerate(placed):
            if row_w >> u & 1:
                rw |= 1 << i
        if row_w >> w & 1:
            rw |= 1 << k
        new_pm = [m | ((rows[u] >> w & 1) << k) for u, m in zip(placed, pm)]
        for i, ra in enumerate(new_pm):
            if not ra:
                continue
            cand = rw & ~ra
            if cand and (cand & -cand).bit_length() - 1 < ra.bit_length() - 1:
                return False
            if ra >> k & 1:
                rest = ~ra & below
                if rw & rest:
                    return False
                for m in new_pm[i + 1:]:
                    if m & rest:
                        return False
        pm[:] = new_pm
        pm.append(rw)
        return True

    def rec():
        if len(placed) == n:
            yield VertexOrdering(placed)
            return
        for w in range(n):
            if used[w] or (prev[w] is not None and not used[prev[w]]):
                continue
            saved = list(pm)
            if not fits(w):
                continue
            used[w] = True
            placed.append(w)
            yield from rec()
            placed.pop()
            used[w] = False
            pm[:] = saved

    yield from rec()


def find_min_ordering(h: Digraph) -> Optional[VertexOrdering]:
    """Lexicographically least min ordering of ``h``, or ``None`` if there is none.

    Backtracking over prefixes; a prefix is abandoned as soon as the vertices
    placed so far already contain a violation, which no extension can repair.
    Vertices whose transposition is an automorphism are only tried in index
    order.
    """
    for ordering in _search(h, prune_twins=True):
        if verify_min_ordering(h, ordering) is not None:
            raise AssertionError("search produced an uncertified ordering")
        return ordering
    return None


def enumerate_min_orderings(h: Digraph) -> Iterator[VertexOrdering]:
    """Every min ordering of ``h`` in lexicographic order, each certified."""
    for ordering in _search(h, prune_twins=False):
        if verify_min_ordering(h, ordering) is not None:
            raise AssertionError("search produced an uncertified ordering")
        yield ordering


def brute_force_min_orderings(h: Digraph) -> Iterator[VertexOrdering]:
    """All ``n!`` orderings filtered by :func:`verify_min_ordering` (test oracle)."""
    for perm in permutations(range(h.n)):
        if verify_min_ordering(h, perm) is None:
            yield VertexOrdering(perm)
