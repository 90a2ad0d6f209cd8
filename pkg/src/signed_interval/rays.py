"""Two-directional orthogonal ray models of bipartite digraphs.

Each ``a`` in part ``A`` owns an upward ray starting at ``P[a] = (u, v)``;
each ``b`` in ``B`` owns a rightward ray starting at ``Q[b] = (r, s)``.  Rays
are closed, so they meet iff ``r_b <= u_a`` and ``v_a <= s_b``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .exceptions import ConstructionError, GraphInputError, ModelError
from .graph import BipartiteDigraph
from .interval_models import SignedIntervalModel
from .ordering import VertexOrdering, verify_min_ordering


def _point(p) -> tuple[Fraction, Fraction]:
    x, y = p
    return Fraction(x), Fraction(y)


@dataclass(frozen=True)
class RayModel:
    """Ray origins keyed by vertex: ``P`` for part ``A``, ``Q`` for part ``B``."""

    P: Mapping = field(default_factory=dict)
    Q: Mapping = field(default_factory=dict)

    def __post_init__(self):
        P = {int(a): _point(p) for a, p in dict(self.P).items()}
        Q = {int(b): _point(q) for b, q in dict(self.Q).items()}
        if set(P) & set(Q):
            raise ModelError(f"vertices {sorted(set(P) & set(Q))} carry both ray kinds")
        object.__setattr__(self, "P", dict(sorted(P.items())))
        object.__setattr__(self, "Q", dict(sorted(Q.items())))

    @property
    def A(self) -> tuple[int, ...]:
        return tuple(self.P)

    @property
    def B(self) -> tuple[int, ...]:
        return tuple(self.Q)

    def intersects(self, a: int, b: int) -> bool:
        u, v = self.P[a]
        r, s = self.Q[b]
        return r <= u and v <= s

    def normalization_error(self):
        """Description of the first coordinate tie, or ``None`` if the model is normalized."""
        xs = [p[0] for p in self.P.values()] + [q[0] for q in self.Q.values()]
        ys = [p[1] for p in self.P.values()] + [q[1] for q in self.Q.values()]
        if len(set(xs)) != len(xs):
            return "x-coordinates of ray origins are not pairwise distinct"
        if len(set(ys)) != len(ys):
            return "y-coordinates of ray origins are not pairwise distinct"
        return None

    def __hash__(self):
        return hash((tuple(self.P.items()), tuple(self.Q.items())))


def realize_rays(model: RayModel) -> BipartiteDigraph:
    arcs = [(a, b) for a in model.A for b in model.B if model.intersects(a, b)]
    return BipartiteDigraph(model.A, model.B, arcs)


def normalize_rays(model: RayModel) -> RayModel:
    """Re-index all coordinates onto distinct integers without changing any crossing.

    Only comparisons between an upward and a rightward ray matter.  On the
    x-axis a tie ``r_b == u_a`` must keep ``r_b`` first; on the y-axis a tie
    ``v_a == s_b`` must keep ``v_a`` first.  Remaining ties go by vertex index.
    """
    xs = [(u, 1, a) for a, (u, _) in model.P.items()] + [(r, 0, b) for b, (r, _) in model.Q.items()]
    ys = [(v, 0, a) for a, (_, v) in model.P.items()] + [(s, 1, b) for b, (_, s) in model.Q.items()]
    xrank = {(kind, w): i + 1 for i, (_, kind, w) in enumerate(sorted(xs))}
    yrank = {(kind, w): i + 1 for i, (_, kind, w) in enumerate(sorted(ys))}
    P = {a: (xrank[1, a], yrank[0, a]) for a in model.P}
    Q = {b: (xrank[0, b], yrank[1, b]) for b in model.Q}
    return RayModel(P, Q)


def rays_from_signed(h: BipartiteDigraph, model: SignedIntervalModel) -> RayModel:
    """Ray model from a signed-interval model of ``h``.

    ``P[a] = (y_a, x_a)`` and ``Q[b] = (x_b, z_b)``, then normalized.

    Raises
    ------
    GraphInputError
        If the signed-interval model disagrees with ``h`` on some pair in
        ``A x B``; the first such pair is named.
    """
    if model.n != h.n:
        raise GraphInputError(f"model has {model.n} vertices, digraph has {h.n}")
    for a in h.A:
        for b in h.B:
            realized = model.x[a] <= model.z[b] and model.x[b] <= model.y[a]
            if realized != h.has_arc(a, b):
                raise GraphInputError(f"model does not realize the digraph at pair {(a, b)}")
    raw = RayModel({a: (model.y[a], model.x[a]) for a in h.A},
                   {b: (model.x[b], model.z[b]) for b in h.B})
    rays = normalize_rays(raw)
    if rays.normalization_error() is not None or realize_rays(rays) != h:
        raise ConstructionError("normalized ray model does not realize the digraph")
    return rays


def min_ordering_from_rays(model: RayModel) -> VertexOrdering:
    """Part ``A`` by ray-origin height, followed by part ``B`` by ray-origin abscissa.

    The result is certified as a min ordering of the realized digraph.
    """
    problem = model.normalization_error()
    if problem is not None:
        raise ModelError(problem)
    order = sorted(model.A, key=lambda a: model.P[a][1]) + sorted(model.B, key=lambda b: model.Q[b][0])
    ordering = VertexOrdering(order)
    if verify_min_ordering(realize_rays(model).as_digraph(), ordering) is not None:
        raise ConstructionError("ray ordering is not a min ordering")
    return ordering
