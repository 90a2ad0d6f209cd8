from itertools import combinations, permutations, product

import pytest
from hypothesis import given

from signed_interval import (
    GraphInputError,
    find_asteroidal_triple,
    find_induced_cycle,
    find_invertible_pair,
    find_min_ordering,
    from_edge_list,
    lekkerkerker_boland,
)
from signed_interval.generators import NAMED_REFLEXIVE, claw, complete, cycle, path, spider, sun, undirected
from signed_interval.obstructions import (
    AsteroidalTriple,
    InducedCycle,
    InvertiblePairWitness,
    invertible_pair_witness,
)

from conftest import symmetric_digraphs


def interval_graph_codes(n):
    """Edge sets of all interval graphs on ``n`` labelled vertices, by enumerating models.

    Left ends can be taken distinct in ``1..n`` and each right end compressed
    to the last left end it reaches, so ``r_v`` ranges over ``l_v..n``.
    """
    pairs = list(combinations(range(n), 2))
    codes = set()
    for lefts in permutations(range(1, n + 1)):
        for rights in product(*(range(l, n + 1) for l in lefts)):
            code = 0
            for bit, (u, v) in enumerate(pairs):
                if max(lefts[u], lefts[v]) <= min(rights[u], rights[v]):
                    code |= 1 << bit
            codes.add(code)
    return codes, pairs


def all_reflexive_graphs(n):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield bits, undirected(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


def test_claw_has_no_asteroidal_triple():
    assert find_asteroidal_triple(claw()) is None


def test_spider_leaves_form_the_triple():
    at = find_asteroidal_triple(spider())
    assert at.triple == (2, 4, 6)
    assert at.is_valid(spider())


def test_six_cycle_alternate_vertices():
    at = find_asteroidal_triple(cycle(6))
    assert at.triple == (0, 2, 4)
    assert at.is_valid(cycle(6))


def test_asteroidal_triple_rejects_non_reflexive_input():
    with pytest.raises(GraphInputError):
        find_asteroidal_triple(cycle(6, loops=False))
    with pytest.raises(GraphInputError):
        find_asteroidal_triple(from_edge_list(2, [(0, 0), (1, 1), (0, 1)]))


def test_forged_triple_fails_validation():
    bad = AsteroidalTriple((1, 2, 3), {3: [1, 0, 2], 1: [2, 0, 3], 2: [1, 0, 3]})
    assert not bad.is_valid(claw())


def test_induced_cycle_examples():
    assert find_induced_cycle(cycle(4)).cycle == (0, 1, 2, 3)
    assert find_induced_cycle(complete(3)) is None
    c5 = find_induced_cycle(cycle(5))
    assert len(c5.cycle) == 5 and c5.is_valid(cycle(5))


def test_induced_cycle_ignores_other_lengths():
    assert find_induced_cycle(cycle(6)) is None
    assert find_induced_cycle(cycle(6), lengths=(6,)).is_valid(cycle(6))


def test_chorded_cycle_is_not_induced():
    assert not InducedCycle((0, 1, 2, 3)).is_valid(complete(4))


def test_lekkerkerker_boland_examples():
    assert lekkerkerker_boland(claw()) is None
    assert isinstance(lekkerkerker_boland(cycle(4)), InducedCycle)
    assert isinstance(lekkerkerker_boland(spider()), AsteroidalTriple)


def test_invertible_pair_examples():
    c4 = cycle(4)
    w = find_invertible_pair(c4)
    # in C4 every pair is invertible, so the first one found is an edge
    assert (w.u, w.v) == (0, 1) and w.is_valid(c4)
    for u, v in ((0, 2), (1, 3)):
        assert invertible_pair_witness(c4, u, v).is_valid(c4)
    assert find_invertible_pair(claw()) is None
    assert find_invertible_pair(path(4)) is None


def test_forged_invertible_pair_fails_validation():
    assert invertible_pair_witness(path(3), 0, 2) is None
    with pytest.raises(GraphInputError):
        invertible_pair_witness(path(3), 1, 1)
    assert not InvertiblePairWitness(0, 2, (0, 1, 2), (2, 1, 0), (2, 1, 0), (0, 1, 2)).is_valid(path(3))


def test_witness_json_shapes():
    assert find_invertible_pair(cycle(4)).to_dict()["type"] == "invertible_pair"
    assert find_asteroidal_triple(spider()).to_dict()["triple"] == [2, 4, 6]
    assert find_induced_cycle(cycle(4)).to_dict() == {"type": "induced_cycle", "length": 4, "cycle": [0, 1, 2, 3]}


@pytest.mark.parametrize("name", sorted(NAMED_REFLEXIVE))
def test_named_corpus_agrees(name):
    h = NAMED_REFLEXIVE[name]()
    interval = find_min_ordering(h) is not None
    assert interval == (lekkerkerker_boland(h) is None) == (find_invertible_pair(h) is None)
    assert interval == (name in {"claw", "P1", "P2", "P3", "P4", "P5"})


def test_sun_outer_vertices_are_asteroidal():
    at = find_asteroidal_triple(sun(3))
    assert at is not None and set(at.triple) == {3, 4, 5}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_all_characterizations_match_interval_models(n):
    codes, _ = interval_graph_codes(n)
    for bits, h in all_reflexive_graphs(n):
        interval = bits in codes
        assert (find_min_ordering(h) is not None) == interval
        obstruction = lekkerkerker_boland(h)
        assert (obstruction is None) == interval
        witness = find_invertible_pair(h)
        assert (witness is None) == interval
        if obstruction is not None:
            assert obstruction.is_valid(h)
            assert witness.is_valid(h)


@given(symmetric_digraphs(max_n=7, loops="all"))
def test_witnesses_validate_and_asteroids_imply_invertible_pairs(h):
    at = find_asteroidal_triple(h)
    pair = find_invertible_pair(h)
    if at is not None:
        assert at.is_valid(h)
        assert pair is not None
    if pair is not None:
        assert pair.is_valid(h)
    assert (pair is None) == (find_min_ordering(h) is not None)
