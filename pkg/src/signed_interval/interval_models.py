"""Signed-interval models and their interval, co-TT and threshold-tolerance relatives.

A signed-interval model gives each vertex ``v`` a triple ``(x, y, z)``; the
source interval is ``[x, y]`` and the sink interval ``[x, z]``.  Either may be
negative (right end before left end).  ``u -> v`` is an arc exactly when
``x_u <= z_v`` and ``x_v <= y_u``.  All coordinates are exact ``Fraction``s.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exceptions import ConstructionError, GraphInputError, ModelError
from .graph import Digraph, _bits
from .ordering import (
    VertexOrdering,
    extrema,
    require_min_ordering,
    verify_min_ordering,
)


def _fractions(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class SignedIntervalModel:
    x: tuple
    y: tuple
    z: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", _fractions(self.x))
        object.__setattr__(self, "y", _fractions(self.y))
        object.__setattr__(self, "z", _fractions(self.z))
        if not len(self.x) == len(self.y) == len(self.z):
            raise ModelError("x, y and z must have one entry per vertex")

    @property
    def n(self) -> int:
        return len(self.x)

    def triple(self, v: int) -> tuple[Fraction, Fraction, Fraction]:
        return self.x[v], self.y[v], self.z[v]

    def restrict(self, vertices: Sequence[int]) -> "SignedIntervalModel":
        keep = sorted(vertices)
        return SignedIntervalModel([self.x[v] for v in keep], [self.y[v] for v in keep],
                                   [self.z[v] for v in keep])


@dataclass(frozen=True)
class CoTTModel:
    x: tuple
    y: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", _fractions(self.x))
        object.__setattr__(self, "y", _fractions(self.y))
        if len(self.x) != len(self.y):
            raise ModelError("x and y must have one entry per vertex")

    @property
    def n(self) -> int:
        return len(self.x)


@dataclass(frozen=True)
class ThresholdToleranceModel:
    """Weights ``w`` and tolerances ``t``; ``ab`` is an edge iff ``w_a + w_b`` exceeds ``t_a`` or ``t_b``."""

    w: tuple
    t: tuple

    def __post_init__(self):
        object.__setattr__(self, "w", _fractions(self.w))
        object.__setattr__(self, "t", _fractions(self.t))
        if len(self.w) != len(self.t):
            raise ModelError("w and t must have one entry per vertex")

    @property
    def n(self) -> int:
        return len(self.w)


# -- realization ---------------------------------------------------------------


def realize_signed(model: SignedIntervalModel) -> Digraph:
    x, y, z = model.x, model.y, model.z
    n = model.n
    return Digraph(n, ((u, v) for u in range(n) for v in range(n) if x[u] <= z[v] and x[v] <= y[u]))


def realize_cott(model: CoTTModel, standard: bool = False) -> Digraph:
    """Symmetric digraph of a co-TT model.

    Loops appear at positive vertices (``x <= y``).  ``standard=True`` applies
    the condition to distinct pairs only, giving a loopless graph.
    """
    x, y = model.x, model.y
    n = model.n
    return Digraph(n, (
        (a, b) for a in range(n) for b in range(n)
        if x[a] <= y[b] and x[b] <= y[a] and not (standard and a == b)
    ))


def realize_tt(model: ThresholdToleranceModel) -> Digraph:
    """Threshold-tolerance graph on distinct pairs (never has loops)."""
    w, t = model.w, model.t
    n = model.n
    return Digraph(n, (
        (a, b) for a in range(n) for b in range(n)
        if a != b and (w[a] + w[b] > t[a] or w[a] + w[b] > t[b])
    ))


def realize_intervals(left: Sequence, right: Sequence) -> Digraph:
    """Intersection graph of the closed intervals ``[left[v], right[v]]`` (empty when reversed)."""
    n = len(left)
    return Digraph(n, (
        (u, v) for u in range(n) for v in range(n)
        if left[u] <= right[u] and left[v] <= right[v]
        and max(left[u], left[v]) <= min(right[u], right[v])
    ))


# -- constructions through a min ordering -------------------------------------------


def signed_from_min_ordering(h: Digraph, ordering) -> SignedIntervalModel:
    """Model ``x_v = pos(v)``, ``y_v = pos(O(v))``, ``z_v = pos(I(v))`` with ``pos(ALPHA) = 0``.

    Raises :class:`InvalidOrderingError` if ``ordering`` is not a min ordering.
    """
    ordering = require_min_ordering(h, ordering)
    ext = extrema(h, ordering)
    pos = ordering.pos
    model = SignedIntervalModel(
        [pos(v) for v in range(h.n)],
        [pos(ext.out_last[v]) for v in range(h.n)],
        [pos(ext.in_last[v]) for v in range(h.n)],
    )
    if realize_signed(model) != h:
        raise ConstructionError("signed-interval model does not realize its digraph")
    return model


def min_ordering_from_signed(model: SignedIntervalModel) -> VertexOrdering:
    """Vertices sorted by ``x`` (ties by index); certified against the realized digraph."""
    ordering = VertexOrdering(sorted(range(model.n), key=lambda v: (model.x[v], v)))
    if verify_min_ordering(realize_signed(model), ordering) is not None:
        raise ConstructionError("x-order of a signed-interval model is not a min ordering")
    return ordering


def cott_to_signed(model: CoTTModel) -> SignedIntervalModel:
    return SignedIntervalModel(model.x, model.y, model.y)


def signed_to_cott(model: SignedIntervalModel) -> CoTTModel:
    if model.y != model.z:
        raise ModelError("signed-interval model is not of co-TT shape (y != z)")
    return CoTTModel(model.x, model.y)


def cott_from_min_ordering(h: Digraph, ordering) -> CoTTModel:
    """Co-TT model ``x_v = pos(v)``, ``y_v = pos(O(v))`` of a symmetric digraph."""
    if not h.is_symmetric():
        raise GraphInputError("co-TT construction needs a symmetric digraph")
    ordering = require_min_ordering(h, ordering)
    ext = extrema(h, ordering)
    if ext.out_last != ext.in_last:
        raise ConstructionError("O and I differ on a symmetric digraph")
    pos = ordering.pos
    model = CoTTModel([pos(v) for v in range(h.n)], [pos(ext.out_last[v]) for v in range(h.n)])
    if realize_cott(model) != h:
        raise ConstructionError("co-TT model does not realize its graph")
    return model


def interval_model_from_min_ordering(h: Digraph, ordering) -> SignedIntervalModel:
    """Interval model (``x <= y == z``) of a reflexive graph from its min ordering."""
    if not h.is_reflexive():
        raise GraphInputError("interval model needs a reflexive graph")
    cott = cott_from_min_ordering(h, ordering)
    model = cott_to_signed(cott)
    if not is_interval_model(model):
        raise ConstructionError("reflexive graph produced a negative interval")
    if realize_intervals(model.x, model.y) != h:
        raise ConstructionError("interval model does not realize its graph")
    return model


# -- shape predicates ------------------------------------------------------------


def is_adjusted_interval_model(model: SignedIntervalModel) -> bool:
    return all(x <= y and x <= z for x, y, z in zip(model.x, model.y, model.z))


def is_cott_shape(model: SignedIntervalModel) -> bool:
    return model.y == model.z


def is_interval_model(model: SignedIntervalModel) -> bool:
    return is_adjusted_interval_model(model) and is_cott_shape(model)


# -- vertex types -------------------------------------------------------------------


@dataclass(frozen=True)
class DecompositionReport:
    types: tuple
    minus_minus_independent: bool
    plus_plus_reflexive: bool
    plus_plus_realized: bool

    def vertices_of(self, kind: str) -> list[int]:
        return [v for v, t in enumerate(self.types) if t == kind]

    @property
    def ok(self) -> bool:
        return self.minus_minus_independent and self.plus_plus_reflexive and self.plus_plus_realized


def _sign(left, right) -> str:
    return "+" if left <= right else "-"


def vertex_types(model: SignedIntervalModel) -> DecompositionReport:
    """Tag each vertex ``"++"``, ``"+-"``, ``"-+"`` or ``"--"`` (source sign, sink sign).

    The report also checks, on the realized digraph, that ``--`` vertices
    are pairwise non-adjacent and that ``++`` vertices induce a reflexive
    digraph realized by the restricted (all-positive) model.
    """
    types = tuple(_sign(x, y) + _sign(x, z) for x, y, z in zip(model.x, model.y, model.z))
    h = realize_signed(model)
    minus = [v for v, t in enumerate(types) if t == "--"]
    plus = [v for v, t in enumerate(types) if t == "++"]
    mm_mask = sum(1 << v for v in minus)
    independent = all(not (h.rows[v] & mm_mask) for v in minus)
    sub = h.induced_subgraph(plus)
    restricted = model.restrict(plus)
    return DecompositionReport(
        types=types,
        minus_minus_independent=independent,
        plus_plus_reflexive=sub.is_reflexive(),
        plus_plus_realized=is_adjusted_interval_model(restricted) and realize_signed(restricted) == sub,
    )


# -- threshold tolerance and standard co-TT -------------------------------------------------


def cott_to_threshold_tolerance(model: CoTTModel) -> ThresholdToleranceModel:
    """``w = x`` and ``t = x + y``; the TT graph is the complement on distinct pairs."""
    return ThresholdToleranceModel(model.x, [x + y for x, y in zip(model.x, model.y)])


def _closed_neighborhood(h: Digraph, v: int) -> int:
    return h.rows[v] | (1 << v)


def is_simplicial(h: Digraph, v: int) -> bool:
    nbrs = [u for u in _bits(h.rows[v]) if u != v]
    return all(h.has_arc(a, b) for a in nbrs for b in nbrs if a != b)


def has_true_twin(h: Digraph, v: int) -> bool:
    nv = _closed_neighborhood(h, v)
    return any(u != v and _closed_neighborhood(h, u) == nv for u in range(h.n))


def standard_cott_lift(g: Digraph) -> Digraph:
    """Add loops to a loopless graph on every vertex except simplicial ones without a true twin.

    True twins are read as vertices with equal closed neighbourhoods.
    """
    if not g.is_irreflexive() or not g.is_symmetric():
        raise GraphInputError("standard co-TT lift needs an irreflexive symmetric graph")
    return g.with_loops(v for v in range(g.n) if not (is_simplicial(g, v) and not has_true_twin(g, v)))

