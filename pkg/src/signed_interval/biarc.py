"""Bi-arc models: pairs of circular arcs around two poles.

The circle is the parameter range ``[0, 1)`` read clockwise, with pole ``N``
at 0 and pole ``S`` at 1/2.  An arc is stored as ``(ccw_end, cw_end)`` and
covers the closed stretch swept clockwise from ``ccw_end`` to ``cw_end``,
wrapping through ``N`` when ``ccw_end > cw_end``.  Every ``I`` arc contains
``N`` and not ``S``; every ``J`` arc contains ``S`` and not ``N``.  There is an
arc ``a -> b`` in the realized digraph iff ``I[a]`` and ``J[b]`` are disjoint.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exceptions import ConstructionError, ModelError
from .graph import Digraph
from .ordering import VertexOrdering, extrema, require_min_ordering, verify_min_ordering

NORTH = Fraction(0)
SOUTH = Fraction(1, 2)


def _arc(pair) -> tuple[Fraction, Fraction]:
    ccw, cw = (Fraction(p) for p in pair)
    if not (0 <= ccw < 1 and 0 <= cw < 1):
        raise ModelError(f"arc endpoints {pair} must lie in [0, 1)")
    return ccw, cw


def arc_contains(arc, point) -> bool:
    ccw, cw = arc
    if ccw <= cw:
        return ccw <= point <= cw
    return point >= ccw or point <= cw


def arcs_intersect(first, second) -> bool:
    # two closed arcs meet iff one of them contains the other's starting point
    return arc_contains(first, second[0]) or arc_contains(second, first[0])


@dataclass(frozen=True)
class BiArcModel:
    I: tuple
    J: tuple

    def __post_init__(self):
        object.__setattr__(self, "I", tuple(_arc(a) for a in self.I))
        object.__setattr__(self, "J", tuple(_arc(a) for a in self.J))
        if len(self.I) != len(self.J):
            raise ModelError("I and J must have one arc per vertex")

    @property
    def n(self) -> int:
        return len(self.I)

    def validate(self) -> None:
        """Raise :class:`ModelError` naming the first arc that misses or covers the wrong pole."""
        for v, arc in enumerate(self.I):
            if not arc_contains(arc, NORTH) or arc_contains(arc, SOUTH):
                raise ModelError(f"I[{v}] = {arc} must contain N and avoid S")
        for v, arc in enumerate(self.J):
            if not arc_contains(arc, SOUTH) or arc_contains(arc, NORTH):
                raise ModelError(f"J[{v}] = {arc} must contain S and avoid N")


def _cw_offset(point, pole) -> Fraction:
    # clockwise distance from the pole, used to order clockwise ends
    return (point - pole) % 1


def inconsistent_pair(model: BiArcModel) -> Optional[tuple[int, int]]:
    """First pair ``(a, b)`` whose ``I`` and ``J`` clockwise ends are ordered differently.

    Coinciding clockwise ends within one family also count as a witness.
    Returns ``None`` for a consistent model.
    """
    model.validate()
    i_key = [_cw_offset(cw, NORTH) for _, cw in model.I]
    j_key = [_cw_offset(cw, SOUTH) for _, cw in model.J]
    n = model.n
    for a in range(n):
        for b in range(a + 1, n):
            if i_key[a] == i_key[b] or j_key[a] == j_key[b]:
                return (a, b)
            if (i_key[a] < i_key[b]) != (j_key[a] < j_key[b]):
                return (a, b)
    return None


def is_consistent(model: BiArcModel) -> bool:
    return inconsistent_pair(model) is None


def ordering_generated(model: BiArcModel) -> VertexOrdering:
    """Vertices in clockwise order of the clockwise ends of their ``I`` arcs."""
    pair = inconsistent_pair(model)
    if pair is not None:
        raise ModelError(f"bi-arc families are not consistent; witness pair {pair}")
    return VertexOrdering(sorted(range(model.n), key=lambda v: _cw_offset(model.I[v][1], NORTH)))


def realize_biarc(model: BiArcModel) -> Digraph:
    n = model.n
    return Digraph(n, (
        (a, b) for a in range(n) for b in range(n) if not arcs_intersect(model.I[a], model.J[b])
    ))


def biarc_from_min_ordering(h: Digraph, ordering) -> BiArcModel:
    """Bi-arc model of ``h`` built from a min ordering.

    With step ``s = 1 / (4 (n + 1))`` the clockwise end of ``I[v]`` is
    ``pos(v) s`` and that of ``J[v]`` is ``1/2 + pos(v) s``.  ``I[v]`` then
    reaches counterclockwise to ``1/2 + (pos(O(v)) + 1/2) s``, stopping just
    short of ``J[O(v)]``; ``J[v]`` reaches to ``(pos(I(v)) + 1/2) s``.  With
    ``pos(ALPHA) = 0`` a vertex without out-neighbours gets an ``I`` arc that
    meets every ``J`` arc, and symmetrically for in-neighbours.
    """
    ordering = require_min_ordering(h, ordering)
    ext = extrema(h, ordering)
    pos = ordering.pos
    step = Fraction(1, 4 * (h.n + 1))
    half = Fraction(1, 2)
    I = []
    J = []
    for v in range(h.n):
        I.append((SOUTH + (pos(ext.out_last[v]) + half) * step, pos(v) * step))
        J.append(((pos(ext.in_last[v]) + half) * step, SOUTH + pos(v) * step))
    model = BiArcModel(I, J)
    if not is_consistent(model):
        raise ConstructionError("constructed bi-arc families are inconsistent")
    if realize_biarc(model) != h:
        raise ConstructionError("bi-arc model does not realize its digraph")
    if ordering_generated(model) != ordering:
        raise ConstructionError("bi-arc model generates a different ordering")
    return model


def check_generated_ordering(model: BiArcModel) -> bool:
    """Whether the generated ordering is a min ordering of the realized digraph."""
    return verify_min_ordering(realize_biarc(model), ordering_generated(model)) is None
