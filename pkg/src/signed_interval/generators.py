"""Named small graphs and random samplers used by the tests and the sweep."""
from __future__ import annotations

import random
from typing import Optional

from .graph import Digraph


def undirected(n: int, edges, loops: bool = True) -> Digraph:
    """Symmetric digraph from undirected ``edges``; reflexive unless ``loops=False``."""
    arcs = [(u, v) for u, v in edges] + [(v, u) for u, v in edges]
    if loops:
        arcs += [(v, v) for v in range(n)]
    return Digraph(n, arcs)


def path(n: int, loops: bool = True) -> Digraph:
    return undirected(n, [(i, i + 1) for i in range(n - 1)], loops)


def cycle(n: int, loops: bool = True) -> Digraph:
    return undirected(n, [(i, (i + 1) % n) for i in range(n)], loops)


def complete(n: int, loops: bool = True) -> Digraph:
    return undirected(n, [(i, j) for i in range(n) for j in range(i + 1, n)], loops)


def claw(loops: bool = True) -> Digraph:
    """``K_{1,3}`` with centre 0."""
    return undirected(4, [(0, 1), (0, 2), (0, 3)], loops)


def spider(loops: bool = True) -> Digraph:
    """Claw with every edge subdivided: centre 0, legs 0-1-2, 0-3-4, 0-5-6."""
    return undirected(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)], loops)


def sun(k: int = 3, loops: bool = True) -> Digraph:
    """Trampoline: clique on ``0..k-1`` plus ``k+i`` adjacent to ``i`` and ``i+1 mod k``."""
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    edges += [(k + i, i) for i in range(k)] + [(k + i, (i + 1) % k) for i in range(k)]
    return undirected(2 * k, edges, loops)


NAMED_REFLEXIVE = {
    "claw": claw,
    "P1": lambda: path(1),
    "P2": lambda: path(2),
    "P3": lambda: path(3),
    "P4": lambda: path(4),
    "P5": lambda: path(5),
    "C4": lambda: cycle(4),
    "C5": lambda: cycle(5),
    "C6": lambda: cycle(6),
    "3-sun": lambda: sun(3),
    "S(2,2,2)": spider,
}


def random_digraph(rng: random.Random, n: int, p: float = 0.5, loop_p: Optional[float] = None) -> Digraph:
    loop_p = p if loop_p is None else loop_p
    return Digraph(n, (
        (u, v) for u in range(n) for v in range(n)
        if rng.random() < (loop_p if u == v else p)
    ))


def random_graph(rng: random.Random, n: int, p: float = 0.5, loops: str = "all") -> Digraph:
    """Random symmetric digraph; ``loops`` is ``"all"``, ``"none"`` or ``"random"``."""
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    g = undirected(n, edges, loops=False)
    if loops == "all":
        return g.with_loops(range(n))
    if loops == "random":
        return g.with_loops(v for v in range(n) if rng.random() < 0.5)
    return g


def random_matrix(rng: random.Random, k: int, l: int, p: float = 0.5) -> list[list[int]]:
    return [[int(rng.random() < p) for _ in range(l)] for _ in range(k)]
