"""Digraph and bipartite digraph value types.

Vertices are the dense integers ``0 .. n-1``.  Adjacency is kept as one
out-neighbour bitmask per vertex, so ``rows[u] >> v & 1`` is the entry
``(u, v)`` of the adjacency matrix.  Loops are ordinary arcs ``(v, v)``.
"""
from __future__ import annotations

from collections import deque
from itertools import product
from typing import Iterable, Iterator, Sequence

from .exceptions import GraphInputError, NotBipartiteError, NotOneDirectionalError

#: Largest vertex count accepted by :func:`enumerate_digraphs`.
MAX_ENUMERATION_N = 4


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Digraph:
    """Immutable digraph on vertices ``0 .. n-1`` with loops allowed."""

    __slots__ = ("n", "rows", "_cols")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        rows = [0] * n
        for pair in arcs:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"arc {tuple(pair)} has an endpoint outside 0..{n - 1}")
            rows[u] |= 1 << v
        self.n = n
        self.rows = tuple(rows)
        self._cols = None

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Digraph":
        """Build from out-neighbour bitmasks (no copy of arcs needed)."""
        n = len(rows)
        full = (1 << n) - 1
        if any(r & ~full for r in rows):
            raise GraphInputError("row bitmask references a vertex outside the graph")
        g = cls.__new__(cls)
        g.n = n
        g.rows = tuple(rows)
        g._cols = None
        return g

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "Digraph":
        n = len(matrix)
        rows = []
        for i, row in enumerate(matrix):
            if len(row) != n:
                raise GraphInputError(f"adjacency matrix row {i} has length {len(row)}, expected {n}")
            mask = 0
            for j, entry in enumerate(row):
                if entry not in (0, 1):
                    raise GraphInputError(f"adjacency entry ({i}, {j}) is {entry!r}, expected 0 or 1")
                if entry:
                    mask |= 1 << j
            rows.append(mask)
        return cls.from_rows(rows)

    # -- queries ---------------------------------------------------------

    @property
    def cols(self) -> tuple[int, ...]:
        """In-neighbour bitmasks, computed lazily."""
        if self._cols is None:
            cols = [0] * self.n
            for u, row in enumerate(self.rows):
                for v in _bits(row):
                    cols[v] |= 1 << u
            self._cols = tuple(cols)
        return self._cols

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def out_neighbors(self, u: int) -> list[int]:
        return list(_bits(self.rows[u]))

    def in_neighbors(self, v: int) -> list[int]:
        return list(_bits(self.cols[v]))

    @property
    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u])]

    def __len__(self) -> int:
        return self.n

    @property
    def num_arcs(self) -> int:
        return sum(bin(r).count("1") for r in self.rows)

    def is_reflexive(self) -> bool:
        return all(self.rows[v] >> v & 1 for v in range(self.n))

    def is_irreflexive(self) -> bool:
        return not any(self.rows[v] >> v & 1 for v in range(self.n))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols

    def loops(self) -> list[int]:
        return [v for v in range(self.n) if self.rows[v] >> v & 1]

    def adjacency_matrix(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.n)] for row in self.rows]

    # -- derived digraphs ------------------------------------------------

    def symmetric_closure(self) -> "Digraph":
        return Digraph.from_rows([r | c for r, c in zip(self.rows, self.cols)])

    def complement(self, loops: bool = False) -> "Digraph":
        """Complement over ordered pairs.

        With ``loops=False`` only distinct pairs are complemented and the
        diagonal is copied unchanged; with ``loops=True`` loops are
        complemented as well.
        """
        full = (1 << self.n) - 1
        rows = []
        for v, row in enumerate(self.rows):
            new = ~row & full
            if not loops:
                diag = 1 << v
                new = (new & ~diag) | (row & diag)
            rows.append(new)
        return Digraph.from_rows(rows)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Digraph":
        """Subdigraph induced by ``vertices``, relabelled ``0..k-1`` in sorted order."""
        keep = sorted(set(vertices))
        for v in keep:
            if not 0 <= v < self.n:
                raise GraphInputError(f"vertex {v} is not in the graph")
        rows = []
        for u in keep:
            mask = 0
            for i, v in enumerate(keep):
                if self.rows[u] >> v & 1:
                    mask |= 1 << i
            rows.append(mask)
        return Digraph.from_rows(rows)

    def relabel(self, order: Sequence[int]) -> "Digraph":
        """Digraph whose vertex ``i`` is ``order[i]`` of this one."""
        pos = {v: i for i, v in enumerate(order)}
        return Digraph(self.n, ((pos[u], pos[v]) for u, v in self.arcs))

    def with_loops(self, vertices: Iterable[int]) -> "Digraph":
        rows = list(self.rows)
        for v in vertices:
            rows[v] |= 1 << v
        return Digraph.from_rows(rows)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Digraph({self.n}, {self.arcs})"


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Digraph:
    """Digraph with exactly the given arcs; duplicates collapse."""
    return Digraph(n, pairs)


def symmetric_closure(h: Digraph) -> Digraph:
    return h.symmetric_closure()


def complement(h: Digraph, loops: bool = False) -> Digraph:
    return h.complement(loops=loops)


def induced_subgraph(h: Digraph, vertices: Iterable[int]) -> Digraph:
    return h.induced_subgraph(vertices)


def enumerate_digraphs(n: int) -> Iterator[Digraph]:
    """Yield all ``2**(n*n)`` labelled digraphs on ``n`` vertices.

    The order is lexicographic in the row-major adjacency matrix, i.e. the
    first digraph is empty and the last is complete with all loops.
    """
    if n < 0:
        raise GraphInputError("vertex count must be non-negative")
    if n > MAX_ENUMERATION_N:
        raise GraphInputError(
            f"exhaustive enumeration refused for n={n}; bound is n <= {MAX_ENUMERATION_N}"
        )
    # Row 0 is the most significant part of the matrix word.  Inside a row,
    # column 0 is the most significant bit, which is bit position 0 of the
    # mask after reversal below.
    row_values = range(1 << n)
    reversed_masks = [int(format(m, f"0{n}b")[::-1], 2) if n else 0 for m in row_values]
    for combo in product(reversed_masks, repeat=n):
        yield Digraph.from_rows(combo)


class BipartiteDigraph:
    """Bipartite digraph with every arc oriented from part ``A`` to part ``B``.

    The vertex set is ``0 .. n-1`` and equals ``A`` union ``B``.
    """

    __slots__ = ("n", "A", "B", "arcs")

    def __init__(self, A: Iterable[int], B: Iterable[int], arcs: Iterable[tuple[int, int]] = ()):
        self.A = tuple(sorted(A))
        self.B = tuple(sorted(B))
        sa, sb = set(self.A), set(self.B)
        if sa & sb:
            raise GraphInputError(f"parts overlap in {sorted(sa & sb)}")
        self.n = len(sa) + len(sb)
        if sa | sb != set(range(self.n)):
            raise GraphInputError("parts must cover the vertices 0..n-1 exactly")
        arcset = set()
        for a, b in arcs:
            if a not in sa or b not in sb:
                raise NotOneDirectionalError(f"arc {(a, b)} does not go from A to B")
            arcset.add((a, b))
        self.arcs = frozenset(arcset)

    @classmethod
    def from_biadjacency(cls, matrix: Sequence[Sequence[int]]) -> "BipartiteDigraph":
        """Rows become ``A = 0..k-1``, columns become ``B = k..k+l-1``."""
        k = len(matrix)
        l = len(matrix[0]) if k else 0
        arcs = []
        for i, row in enumerate(matrix):
            if len(row) != l:
                raise GraphInputError("bi-adjacency matrix is not rectangular")
            arcs.extend((i, k + j) for j, e in enumerate(row) if e)
        return cls(range(k), range(k, k + l), arcs)

    def has_arc(self, a: int, b: int) -> bool:
        return (a, b) in self.arcs

    def biadjacency(self) -> list[list[int]]:
        return [[int((a, b) in self.arcs) for b in self.B] for a in self.A]

    def as_digraph(self) -> Digraph:
        return Digraph(self.n, self.arcs)

    def __eq__(self, other):
        if not isinstance(other, BipartiteDigraph):
            return NotImplemented
        return (self.A, self.B, self.arcs) == (other.A, other.B, other.arcs)

    def __hash__(self):
        return hash((self.A, self.B, self.arcs))

    def __repr__(self):
        return f"BipartiteDigraph(A={list(self.A)}, B={list(self.B)}, arcs={sorted(self.arcs)})"


def _odd_cycle(parent: dict, depth: dict, u: int, v: int) -> list[int]:
    # u and v are joined by an edge and sit at the same parity in the BFS tree.
    left, right = [u], [v]
    while left[-1] != right[-1]:
        if depth[left[-1]] >= depth[right[-1]]:
            left.append(parent[left[-1]])
        else:
            right.append(parent[right[-1]])
    return left + right[-2::-1]


def as_bipartite_digraph(h: Digraph, strict: bool = False) -> BipartiteDigraph:
    """Two-colour the underlying graph of ``h`` and orient every edge A -> B.

    Each connected component is coloured by breadth-first search from its
    lowest-index vertex, which goes to ``A``.  With ``strict=True`` the
    original arc directions must already be consistent with a single
    orientation per component; the part assignment of a component is then
    flipped if all of its arcs run the other way, and
    :class:`NotOneDirectionalError` is raised when neither orientation works.

    Raises
    ------
    NotBipartiteError
        If the underlying graph contains a loop or an odd cycle; the
        exception carries the cycle.
    """
    if not h.is_irreflexive():
        v = h.loops()[0]
        raise NotBipartiteError([v])
    sym = h.symmetric_closure()
    colour: dict[int, int] = {}
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    components = []
    for root in range(h.n):
        if root in colour:
            continue
        colour[root], depth[root] = 0, 0
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in _bits(sym.rows[u]):
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    comp.append(w)
                    queue.append(w)
                elif colour[w] == colour[u]:
                    raise NotBipartiteError(_odd_cycle(parent, depth, u, w))
        components.append(comp)

    if strict:
        for comp in components:
            forward = backward = False
            for u in comp:
                for w in _bits(h.rows[u]):
                    if colour[u] == 0:
                        forward = True
                    else:
                        backward = True
            if forward and backward:
                raise NotOneDirectionalError(
                    f"component containing vertex {comp[0]} has arcs in both directions"
                )
            if backward:
                for u in comp:
                    colour[u] = 1 - colour[u]

    A = [v for v in range(h.n) if colour[v] == 0]
    B = [v for v in range(h.n) if colour[v] == 1]
    arcs = []
    for u, w in sym.arcs:
        if colour[u] == 0:
            arcs.append((u, w))
    return BipartiteDigraph(A, B, arcs)
