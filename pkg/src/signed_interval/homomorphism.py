"""List homomorphisms to a template digraph with a min ordering.

Lists are sequences indexed by the vertices of the input digraph ``G``; each
entry is a set of allowed images in the template ``H``.
"""
from __future__ import annotations

from collections import deque
from itertools import product
from typing import Iterator, Optional, Sequence

from .exceptions import BudgetExceededError, ConstructionError, GraphInputError
from .graph import Digraph, _bits
from .ordering import require_min_ordering

#: Largest ``|V(H)| ** |V(G)|`` accepted by :func:`brute_force_hom`.
BRUTE_FORCE_BUDGET = 10**6


def _lists(g: Digraph, h: Digraph, lists) -> list[int]:
    # lists as bitmasks over V(H); a list of None, or a None entry, allows everything
    full = (1 << h.n) - 1
    if lists is None:
        return [full] * g.n
    if len(lists) != g.n:
        raise GraphInputError(f"expected {g.n} lists, got {len(lists)}")
    out = []
    for u, allowed in enumerate(lists):
        if allowed is None:
            out.append(full)
            continue
        mask = 0
        for a in allowed:
            if not 0 <= a < h.n:
                raise GraphInputError(f"list of vertex {u} names {a}, not a template vertex")
            mask |= 1 << a
        out.append(mask)
    return out


def _as_sets(masks: Sequence[int]) -> list[frozenset]:
    return [frozenset(_bits(m)) for m in masks]


def arc_consistency(g: Digraph, h: Digraph, lists=None, order: Optional[Sequence[int]] = None) -> list[frozenset]:
    """Prune ``lists`` to the greatest arc-consistent sub-assignment.

    A value ``a`` leaves ``L(u)`` when some arc ``u -> v`` of ``g`` has no
    ``b`` in ``L(v)`` with ``a -> b`` in ``h``, or some arc ``v -> u`` has no
    ``b`` in ``L(v)`` with ``b -> a``.  A loop ``u -> u`` keeps only images
    carrying a loop.  ``order`` sets the initial worklist
    order; the fixpoint does not depend on it.
    """
    masks = _lists(g, h, lists)
    g_out = [[v for v in _bits(r) if v != u] for u, r in enumerate(g.rows)]
    g_in = [[v for v in _bits(c) if v != u] for u, c in enumerate(g.cols)]
    # a loop at u is a constraint on u alone: its image needs a loop
    h_loops = sum(1 << a for a in h.loops())
    for u in g.loops():
        masks[u] &= h_loops

    def supported(u):
        keep = 0
        for a in _bits(masks[u]):
            if all(h.rows[a] & masks[v] for v in g_out[u]) and all(h.cols[a] & masks[v] for v in g_in[u]):
                keep |= 1 << a
        return keep

    worklist = deque(range(g.n) if order is None else order)
    queued = set(worklist)
    while worklist:
        u = worklist.popleft()
        queued.discard(u)
        keep = supported(u)
        if keep != masks[u]:
            masks[u] = keep
            for w in g_out[u] + g_in[u]:
                if w not in queued:
                    queued.add(w)
                    worklist.append(w)
    return _as_sets(masks)


def is_homomorphism(g: Digraph, h: Digraph, f: Sequence[int], lists=None) -> bool:
    if len(f) != g.n or any(not 0 <= a < h.n for a in f):
        return False
    if lists is not None and any(lists[u] is not None and f[u] not in lists[u] for u in range(g.n)):
        return False
    return all(h.has_arc(f[u], f[v]) for u, v in g.arcs)


def solve_list_hom(g: Digraph, h: Digraph, ordering, lists=None) -> Optional[list[int]]:
    """Arc consistency followed by picking the earliest surviving image of each vertex.

    ``ordering`` must be a min ordering of ``h``.  Returns ``None`` when some
    list empties.  The chosen map is always re-verified; a failure raises
    :class:`ConstructionError` rather than returning a wrong answer.
    """
    ordering = require_min_ordering(h, ordering)
    reduced = arc_consistency(g, h, lists)
    if any(not allowed for allowed in reduced):
        return None
    f = [min(allowed, key=ordering.pos) for allowed in reduced]
    if not is_homomorphism(g, h, f, lists):
        raise ConstructionError(f"minimum selection {f} is not a list homomorphism")
    return f


def all_homomorphisms(g: Digraph, h: Digraph, lists=None, budget: int = BRUTE_FORCE_BUDGET) -> Iterator[list[int]]:
    """Every list homomorphism in lexicographic order (exhaustive)."""
    if h.n ** g.n > budget:
        raise BudgetExceededError(f"{h.n}^{g.n} candidate maps exceed the budget {budget}")
    choices = [sorted(s) for s in _as_sets(_lists(g, h, lists))]
    arcs = g.arcs
    for f in product(*choices):
        if all(h.rows[f[u]] >> f[v] & 1 for u, v in arcs):
            yield list(f)


def brute_force_hom(g: Digraph, h: Digraph, lists=None, budget: int = BRUTE_FORCE_BUDGET) -> Optional[list[int]]:
    return next(all_homomorphisms(g, h, lists, budget), None)
