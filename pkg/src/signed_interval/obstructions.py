"""Obstructions to interval-ness of reflexive graphs.

Every function here takes a reflexive symmetric digraph.  Adjacency in such a
graph includes the loop, so a vertex is adjacent to itself.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Union

from .exceptions import GraphInputError
from .graph import Digraph, _bits


def _require_reflexive_graph(h: Digraph) -> None:
    if not h.is_symmetric():
        raise GraphInputError("expected a symmetric digraph (a graph)")
    if not h.is_reflexive():
        raise GraphInputError("expected a reflexive graph (a loop on every vertex)")


def _path_avoiding(h: Digraph, source: int, target: int, forbidden: int) -> Optional[list[int]]:
    """Shortest path from ``source`` to ``target`` through vertices outside ``forbidden``."""
    if forbidden >> source & 1 or forbidden >> target & 1:
        return None
    parent = {source: None}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            path = []
            while u is not None:
                path.append(u)
                u = parent[u]
            return path[::-1]
        for w in _bits(h.rows[u] & ~forbidden):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    return None


@dataclass(frozen=True)
class AsteroidalTriple:
    """Three pairwise non-adjacent vertices and, for each, a path joining the
    other two that avoids its closed neighbourhood."""

    triple: tuple
    paths: dict

    def is_valid(self, h: Digraph) -> bool:
        x, y, z = self.triple
        if any(h.has_arc(p, q) for p, q in ((x, y), (y, z), (x, z))):
            return False
        for third, (s, t) in ((z, (x, y)), (x, (y, z)), (y, (x, z))):
            path = self.paths.get(third)
            if not path or path[0] != s or path[-1] != t:
                return False
            if any(not h.has_arc(p, q) for p, q in zip(path, path[1:])):
                return False
            if any(h.has_arc(third, w) for w in path):
                return False
        return True

    def to_dict(self) -> dict:
        return {"type": "asteroidal_triple", "triple": list(self.triple),
                "paths": {str(k): v for k, v in self.paths.items()}}


def find_asteroidal_triple(h: Digraph) -> Optional[AsteroidalTriple]:
    """Lexicographically first asteroidal triple, or ``None``."""
    _require_reflexive_graph(h)
    n = h.n
    for x, y, z in combinations(range(n), 3):
        if h.has_arc(x, y) or h.has_arc(y, z) or h.has_arc(x, z):
            continue
        paths = {}
        for third, (s, t) in ((z, (x, y)), (x, (y, z)), (y, (x, z))):
            path = _path_avoiding(h, s, t, h.rows[third])
            if path is None:
                break
            paths[third] = path
        else:
            return AsteroidalTriple((x, y, z), paths)
    return None


@dataclass(frozen=True)
class InducedCycle:
    cycle: tuple

    def is_valid(self, h: Digraph) -> bool:
        k = len(self.cycle)
        if k < 4 or len(set(self.cycle)) != k:
            return False
        for i, u in enumerate(self.cycle):
            for j, v in enumerate(self.cycle):
                if i == j:
                    continue
                if h.has_arc(u, v) != ((i - j) % k in (1, k - 1)):
                    return False
        return True

    def to_dict(self) -> dict:
        return {"type": "induced_cycle", "length": len(self.cycle), "cycle": list(self.cycle)}


def find_induced_cycle(h: Digraph, lengths: Iterable[int] = (4, 5)) -> Optional[InducedCycle]:
    """An induced cycle whose length is in ``lengths``, or ``None``.

    Cycles are grown as induced paths from their smallest vertex, with the
    second vertex smaller than the last to visit each cycle once.
    """
    if not h.is_symmetric():
        raise GraphInputError("expected a symmetric digraph (a graph)")
    wanted = set(lengths)
    if not wanted:
        return None
    longest = max(wanted)
    n = h.n
    adj = [h.rows[v] & ~(1 << v) for v in range(n)]

    def extend(path, inner_nbrs):
        # inner_nbrs: union of neighbourhoods of path[1:-1], which new vertices must avoid
        last = path[-1]
        start = path[0]
        for w in _bits(adj[last]):
            if w <= start or w in path:
                continue
            if inner_nbrs >> w & 1:
                continue
            closes = adj[w] >> start & 1
            length = len(path) + 1
            if closes:
                if length >= 4 and length in wanted and path[1] < w:
                    return path + [w]
                continue
            if length < longest:
                found = extend(path + [w], inner_nbrs | adj[last] if len(path) > 1 else inner_nbrs)
                if found:
                    return found
        return None

    for start in range(n):
        for second in _bits(adj[start]):
            if second <= start:
                continue
            found = extend([start, second], 0)
            if found:
                return InducedCycle(tuple(found))
    return None


Obstruction = Union[AsteroidalTriple, InducedCycle]


def lekkerkerker_boland(h: Digraph) -> Optional[Obstruction]:
    """``None`` if ``h`` is an interval graph, else an induced 4- or 5-cycle or an asteroidal triple."""
    _require_reflexive_graph(h)
    cycle = find_induced_cycle(h, (4, 5))
    if cycle is not None:
        return cycle
    return find_asteroidal_triple(h)


# -- invertible pairs ------------------------------------------------------------------


@dataclass(frozen=True)
class InvertiblePairWitness:
    u: int
    v: int
    P: tuple
    Q: tuple
    R: tuple
    S: tuple

    def is_valid(self, h: Digraph) -> bool:
        def walk(w, start, end):
            return w[0] == start and w[-1] == end and all(h.has_arc(p, q) for p, q in zip(w, w[1:]))

        def synced(first, second):
            return len(first) == len(second) and all(
                not h.has_arc(first[i], second[i + 1]) for i in range(len(first) - 1)
            )

        u, v = self.u, self.v
        return (u != v and walk(self.P, u, v) and walk(self.Q, v, u) and synced(self.P, self.Q)
                and walk(self.R, v, u) and walk(self.S, u, v) and synced(self.R, self.S))

    def to_dict(self) -> dict:
        return {"type": "invertible_pair", "pair": [self.u, self.v],
                "P": list(self.P), "Q": list(self.Q), "R": list(self.R), "S": list(self.S)}


def _pair_successors(h: Digraph) -> list[int]:
    # pair (p, q) is bit p*n + q; successors are N[p] x (N[q] minus N[p])
    n = h.n
    succ = [0] * (n * n)
    for p in range(n):
        for q in range(n):
            qmask = h.rows[q] & ~h.rows[p]
            mask = 0
            for p2 in _bits(h.rows[p]):
                mask |= qmask << (p2 * n)
            succ[p * n + q] = mask
    return succ


def _reach(succ: list[int], start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for node in _bits(frontier):
            nxt |= succ[node]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def _pair_walk(succ: list[int], n: int, start: int, goal: int) -> list[tuple[int, int]]:
    parent = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if node == goal:
            break
        for w in _bits(succ[node]):
            if w not in parent:
                parent[w] = node
                queue.append(w)
    seq = []
    node = goal
    while node is not None:
        seq.append(divmod(node, n))
        node = parent[node]
    return seq[::-1]


def _witness(succ: list[int], n: int, u: int, v: int, reach: dict) -> Optional[InvertiblePairWitness]:
    uv, vu = u * n + v, v * n + u
    for src, dst in ((uv, vu), (vu, uv)):
        if src not in reach:
            reach[src] = _reach(succ, src)
        if not reach[src] >> dst & 1:
            return None
    forward = _pair_walk(succ, n, uv, vu)
    backward = _pair_walk(succ, n, vu, uv)
    return InvertiblePairWitness(
        u, v,
        P=tuple(p for p, _ in forward), Q=tuple(q for _, q in forward),
        R=tuple(p for p, _ in backward), S=tuple(q for _, q in backward),
    )


def invertible_pair_witness(h: Digraph, u: int, v: int) -> Optional[InvertiblePairWitness]:
    """Walks showing that ``(u, v)`` is an invertible pair, or ``None`` if it is not."""
    _require_reflexive_graph(h)
    if u == v or not (0 <= u < h.n and 0 <= v < h.n):
        raise GraphInputError(f"({u}, {v}) is not a pair of distinct vertices")
    return _witness(_pair_successors(h), h.n, u, v, {})


def find_invertible_pair(h: Digraph) -> Optional[InvertiblePairWitness]:
    """First invertible pair ``(u, v)`` with ``u < v``, with its four walks.

    The walks are read off the pair digraph on ordered pairs ``(p, q)`` with a
    step to ``(p', q')`` when ``pp'`` and ``qq'`` are edges and ``p`` is not
    adjacent to ``q'``.  ``(u, v)`` is invertible iff ``(u, v)`` reaches
    ``(v, u)`` and ``(v, u)`` reaches ``(u, v)``.
    """
    _require_reflexive_graph(h)
    n = h.n
    succ = _pair_successors(h)
    reach: dict = {}
    for u in range(n):
        for v in range(u + 1, n):
            found = _witness(succ, n, u, v, reach)
            if found is not None:
                return found
    return None
