import random

import pytest
from hypothesis import given, strategies as st

from signed_interval import BinaryMatrix, augment, find_pattern, independent_KL_free, is_KL_free, min_orderable
from signed_interval.exceptions import BudgetExceededError, GraphInputError
from signed_interval.generators import claw, complete, cycle, path, sun
from signed_interval.matrix import (
    GAMMA,
    ID,
    K,
    L,
    free_independent,
    free_simultaneous,
    gamma_free_independent,
    gamma_free_simultaneous,
    is_free_of,
    rotate180_indices,
    submatrix,
    transform,
)
from signed_interval.ordering import find_min_ordering

C6 = [[1, 0, 1], [1, 1, 0], [0, 1, 1]]


@st.composite
def matrices(draw, max_rows=5, max_cols=6):
    k = draw(st.integers(1, max_rows))
    l = draw(st.integers(1, max_cols))
    return BinaryMatrix([[draw(st.integers(0, 1)) for _ in range(l)] for _ in range(k)])


def all_square(n):
    for bits in range(1 << (n * n)):
        yield BinaryMatrix([[bits >> (i * n + j) & 1 for j in range(n)] for i in range(n)])


def adjacency(h):
    return BinaryMatrix.from_digraph(h)


def test_matrix_validates_entries():
    with pytest.raises(GraphInputError):
        BinaryMatrix([[0, 2]])
    with pytest.raises(GraphInputError):
        BinaryMatrix([[0, 1], [1]])


def test_pattern_constants():
    assert K.rows == ((0, 1), (1, 0))
    assert L.rows == ((0, 1), (1, 1))
    assert GAMMA.rows == ((1, 1), (1, 0))
    assert ID.rows == ((1, 0), (0, 1))


def test_find_pattern_on_l_itself():
    assert find_pattern([[0, 1], [1, 1]], "L") == (0, 1, 0, 1)


def test_find_pattern_misses_k_in_all_ones():
    assert find_pattern([[1] * 3] * 3, "K") is None


def test_find_pattern_k_in_digon_adjacency():
    assert find_pattern([[0, 1], [1, 0]], K) == (0, 1, 0, 1)


def test_find_pattern_is_lexicographically_first():
    m = BinaryMatrix([[0, 0, 1], [1, 1, 0], [1, 0, 0]])
    where = find_pattern(m, K)
    assert where == (0, 1, 0, 2)
    assert submatrix(m, where) == K


def test_kl_free_examples():
    assert is_KL_free([[1, 0], [0, 1]])
    assert not is_KL_free([[0, 1], [1, 1]])
    assert is_KL_free(adjacency(path(3)))


def test_min_orderable_examples():
    assert min_orderable(adjacency(cycle(4))) is None
    assert min_orderable([[0] * 3] * 3) == [0, 1, 2]
    perm = min_orderable(adjacency(claw()))
    assert perm is not None
    assert is_KL_free(adjacency(claw()).permuted(perm, perm))


def test_min_orderable_needs_square():
    with pytest.raises(GraphInputError):
        min_orderable([[0, 1, 0]])


def test_augment_examples():
    assert augment([[1]]).rows == ((0, 1), (0, 0))
    m = augment([[1, 0, 1], [0, 1, 1]])
    assert m.shape == (5, 5)
    assert [row[2:] for row in m.rows[:2]] == [(1, 0, 1), (0, 1, 1)]
    assert sum(map(sum, m.rows)) == 4


def test_independent_examples():
    assert independent_KL_free([[1]]) == ([0], [0])
    rows, cols = independent_KL_free([[0, 1], [1, 0]])
    assert is_KL_free(BinaryMatrix([[0, 1], [1, 0]]).permuted(rows, cols))
    assert independent_KL_free(C6) is None
    assert independent_KL_free(C6, method="brute") is None


def test_independent_rejects_unknown_method():
    with pytest.raises(GraphInputError):
        independent_KL_free([[1]], method="magic")


def test_transform_examples():
    assert transform(L, "rotate180") == GAMMA
    assert transform(K, "rotate180") == K
    assert transform(ID, "rotate180") == ID
    assert transform(GAMMA, "transpose") == GAMMA
    assert transform([[1, 0, 0]], "transpose").shape == (3, 1)
    assert transform([[1, 0], [0, 0]], "reverse-rows").rows == ((0, 0), (1, 0))
    assert transform([[1, 0], [0, 0]], "reverse-cols").rows == ((0, 1), (0, 0))


def test_transform_rejects_unknown_op():
    with pytest.raises(GraphInputError):
        transform(K, "spin")


def test_gamma_free_examples():
    assert gamma_free_simultaneous(adjacency(complete(3))) is not None
    assert gamma_free_simultaneous(adjacency(sun(3))) is None
    assert gamma_free_independent(C6) is None


def test_brute_force_bounds():
    with pytest.raises(BudgetExceededError):
        free_simultaneous([[0] * 9] * 9, (GAMMA,))
    with pytest.raises(BudgetExceededError):
        free_independent([[0] * 10] * 10, (K, L))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_min_orderable_iff_digraph_has_min_ordering(n):
    for m in all_square(n):
        perm = min_orderable(m)
        assert (perm is None) == (find_min_ordering(m.to_digraph()) is None)
        assert (perm is None) == (free_simultaneous(m, (K, L)) is None)


def test_min_orderable_on_random_4x4():
    rng = random.Random(5)
    for _ in range(300):
        m = BinaryMatrix([[rng.randint(0, 1) for _ in range(4)] for _ in range(4)])
        assert (min_orderable(m) is None) == (free_simultaneous(m, (K, L)) is None)


@pytest.mark.parametrize("shape", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_augmentation_matches_direct_search(shape):
    k, l = shape
    for bits in range(1 << (k * l)):
        m = BinaryMatrix([[bits >> (i * l + j) & 1 for j in range(l)] for i in range(k)])
        via_augment = independent_KL_free(m)
        assert (via_augment is None) == (free_independent(m, (K, L)) is None)
        assert (via_augment is None) == (min_orderable(augment(m)) is None)


@given(matrices())
def test_pattern_search_commutes_with_rotation(m):
    rot = transform(m, "rotate180")
    for p in (K, L, GAMMA, ID):
        where = find_pattern(m, p)
        assert (where is None) == (find_pattern(rot, transform(p, "rotate180")) is None)
        if where is not None:
            assert submatrix(rot, rotate180_indices(m.shape, where)) == transform(p, "rotate180")


@given(matrices())
def test_id_gamma_free_iff_rotation_id_l_free(m):
    assert is_free_of(m, (ID, GAMMA)) == is_free_of(transform(m, "rotate180"), (ID, L))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_simultaneous_id_gamma_and_id_l_are_equivalent(n):
    for m in all_square(n):
        a = free_simultaneous(m, (ID, GAMMA)) is not None
        assert a == (free_simultaneous(m, (ID, L)) is not None)


@pytest.mark.parametrize("n, mismatches", [(1, 0), (2, 2), (3, 172)])
def test_id_gamma_and_kl_orderability_differ(n, mismatches):
    # simultaneous permutations keep the diagonal, so ID cannot stand in for K
    count = sum(
        (free_simultaneous(m, (ID, GAMMA)) is None) != (min_orderable(m) is None) for m in all_square(n)
    )
    assert count == mismatches


def test_identity_is_kl_free_but_never_id_free():
    eye = BinaryMatrix([[1, 0], [0, 1]])
    assert min_orderable(eye) is not None
    assert free_simultaneous(eye, (ID, GAMMA)) is None
