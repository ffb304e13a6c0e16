import pytest
from hypothesis import given, settings

from app.utils.snf_util import identity, integer_kernel, mat_mul, smith_normal_form

from .helpers import matrices, verify_snf


def test_identity_is_already_in_normal_form():
    snf = smith_normal_form(identity(3))
    assert [list(r) for r in snf.d] == identity(3)
    verify_snf(identity(3), snf)


def test_zero_matrix():
    a = [[0, 0], [0, 0]]
    snf = smith_normal_form(a)
    assert [list(r) for r in snf.d] == a
    assert snf.rank == 0


def test_small_example():
    a = [[2, 4], [4, 4]]
    snf = smith_normal_form(a)
    assert snf.diagonal == [2, 4]
    verify_snf(a, snf)


def test_empty_matrices():
    snf = smith_normal_form([], ncols=3)
    assert snf.u == ()
    assert [list(r) for r in snf.v] == identity(3)
    assert snf.diagonal == []

    snf = smith_normal_form([[], []])
    assert [list(r) for r in snf.u] == identity(2)
    assert snf.diagonal == []


@pytest.mark.parametrize('a, expected', [
    ([[6]], [6]),
    ([[-6]], [6]),
    ([[2, 0], [0, 3]], [1, 6]),
    ([[0, 0, 0], [0, 0, 5]], [5, 0]),
    ([[4, 6, 8]], [2]),
    ([[1], [2], [3]], [1]),
])
def test_diagonals(a, expected):
    snf = smith_normal_form(a)
    assert snf.diagonal == expected
    verify_snf(a, snf)


def test_deterministic():
    a = [[3, -7, 12], [9, 4, -2], [0, 6, 15]]
    assert smith_normal_form(a) == smith_normal_form(a)


def test_large_entries_do_not_overflow():
    big = 2 ** 80
    a = [[big, big + 1], [big - 1, big]]
    snf = smith_normal_form(a)
    verify_snf(a, snf)
    # det = big^2 - (big^2 - 1) = 1
    assert snf.diagonal == [1, 1]


@settings(max_examples=1000)
@given(matrices())
def test_random_matrices(case):
    a, ncols = case
    verify_snf(a, smith_normal_form(a, ncols=ncols), ncols=ncols)


@settings(max_examples=200)
@given(matrices(max_dim=5, bound=9))
def test_integer_kernel(case):
    a, ncols = case
    kernel = integer_kernel(a, ncols)
    snf = smith_normal_form(a, ncols=ncols)
    assert len(kernel) == ncols - snf.rank
    for vec in kernel:
        assert all(x == 0 for x in (sum(r * v for r, v in zip(row, vec)) for row in a))


def test_mat_mul_with_empty_inner_dimension():
    assert mat_mul([[], []], [], ncols=3) == [[0, 0, 0], [0, 0, 0]]
