import numpy as np
from hypothesis import given, settings, strategies as st

from negacyclic.linalg import batched_rank, in_row_space, left_kernel_vector, rank, rref, same_row_space

matrices = st.integers(1, 5).flatmap(
    lambda k: st.integers(1, 7).flatmap(
        lambda m: st.lists(st.lists(st.integers(0, 4), min_size=m, max_size=m), min_size=k, max_size=k)))


def test_rref_small():
    red, piv = rref([[2, 4, 1], [1, 2, 4]], 5)
    assert piv == [0, 2]
    assert red.tolist() == [[1, 2, 0], [0, 0, 1]]


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_rank_matches_batched(rows):
    a = np.array(rows)
    assert batched_rank(a[None], 5)[0] == rank(a, 5)


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_left_kernel(rows):
    a = np.array(rows)
    y = left_kernel_vector(a, 5)
    if rank(a, 5) == a.shape[0]:
        assert y is None
    else:
        assert y.any() and not (y @ a % 5).any()


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_row_space(rows):
    a = np.array(rows)
    red, piv = rref(a, 5)
    assert same_row_space(a, red, 5)
    for r in a:
        assert in_row_space(red, piv, r, 5)
