from itertools import product

import pytest
from hypothesis import given, strategies as st

from signed_interval import (
    BipartiteDigraph,
    GraphInputError,
    ModelError,
    RayModel,
    SignedIntervalModel,
    find_min_ordering,
    min_ordering_from_rays,
    rays_from_signed,
    realize_rays,
    signed_from_min_ordering,
    verify_min_ordering,
)
from signed_interval.rays import normalize_rays


@st.composite
def ray_models(draw, max_side=4):
    k = draw(st.integers(0, max_side))
    l = draw(st.integers(0, max_side))
    coord = st.integers(0, 6)
    P = {a: (draw(coord), draw(coord)) for a in range(k)}
    Q = {k + b: (draw(coord), draw(coord)) for b in range(l)}
    return RayModel(P, Q)


@st.composite
def biadjacency(draw, max_side=4):
    k = draw(st.integers(1, max_side))
    l = draw(st.integers(1, max_side))
    return [[draw(st.integers(0, 1)) for _ in range(l)] for _ in range(k)]


def test_crossing_rays_give_an_arc():
    assert realize_rays(RayModel({0: (5, 0)}, {1: (1, 3)})).arcs == {(0, 1)}


def test_ray_starting_left_of_vertical_misses():
    assert realize_rays(RayModel({0: (0, 5)}, {1: (1, 3)})).arcs == frozenset()


def test_rays_are_closed():
    assert realize_rays(RayModel({0: (2, 1)}, {1: (2, 1)})).arcs == {(0, 1)}


def test_single_arc_from_signed_model():
    h = BipartiteDigraph([0], [1], [(0, 1)])
    m = SignedIntervalModel([1, 2], [2, 0], [0, 1])
    rays = rays_from_signed(h, m)
    assert rays.normalization_error() is None
    assert realize_rays(rays) == h


def test_empty_bipartite_from_signed_model():
    h = BipartiteDigraph([0], [1])
    m = SignedIntervalModel([3, 2], [1, 0], [0, 1])
    assert realize_rays(rays_from_signed(h, m)) == h


def test_empty_part_a():
    h = BipartiteDigraph([], [0, 1])
    rays = rays_from_signed(h, SignedIntervalModel([1, 2], [0, 0], [0, 0]))
    assert rays.P == {} and realize_rays(rays) == h


def test_rays_from_signed_names_mismatch():
    h = BipartiteDigraph([0], [1], [(0, 1)])
    with pytest.raises(GraphInputError, match=r"\(0, 1\)"):
        rays_from_signed(h, SignedIntervalModel([3, 2], [1, 0], [0, 1]))


def test_a_order_follows_v():
    rays = RayModel({0: (10, 3), 1: (11, 1)}, {})
    assert min_ordering_from_rays(rays) == [1, 0]


def test_ties_are_rejected():
    with pytest.raises(ModelError):
        min_ordering_from_rays(RayModel({0: (1, 1)}, {1: (1, 2)}))


def test_vertex_cannot_carry_both_rays():
    with pytest.raises(ModelError):
        RayModel({0: (1, 1)}, {0: (2, 2)})


@given(ray_models())
def test_normalization_keeps_every_crossing(m):
    norm = normalize_rays(m)
    assert norm.normalization_error() is None
    assert realize_rays(norm) == realize_rays(m)


@given(ray_models())
def test_ordering_from_rays_is_a_min_ordering(m):
    norm = normalize_rays(m)
    h = realize_rays(norm).as_digraph()
    assert verify_min_ordering(h, min_ordering_from_rays(norm)) is None


@given(ray_models())
def test_crossing_closure(m):
    # ab and a'b' with v_a < v_a' and r_b' < r_b force ab'
    m = normalize_rays(m)
    for a, a2 in product(m.A, repeat=2):
        for b, b2 in product(m.B, repeat=2):
            if m.P[a][1] < m.P[a2][1] and m.Q[b2][0] < m.Q[b][0]:
                if m.intersects(a, b) and m.intersects(a2, b2):
                    assert m.intersects(a, b2)


@given(biadjacency())
def test_min_ordering_iff_ray_model(matrix):
    h = BipartiteDigraph.from_biadjacency(matrix)
    ordering = find_min_ordering(h.as_digraph())
    if ordering is None:
        return
    rays = rays_from_signed(h, signed_from_min_ordering(h.as_digraph(), ordering))
    assert realize_rays(rays) == h
    assert verify_min_ordering(h.as_digraph(), min_ordering_from_rays(rays)) is None


def test_six_cycle_has_no_ray_model():
    h = BipartiteDigraph.from_biadjacency([[1, 0, 1], [1, 1, 0], [0, 1, 1]])
    assert find_min_ordering(h.as_digraph()) is None
