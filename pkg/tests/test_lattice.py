from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rotkit import lattice as lat
from rotkit import oracles


def matrices(max_rows=4, max_cols=4, bound=5):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=m, max_size=m)))


def _box(points, b):
    return {p for p in points if all(abs(x) <= b for x in p)}


def test_hnf_example():
    H, U = lat.hnf([[2, 4], [1, 1]])
    assert H == [[1, 1], [0, 2]]
    assert lat.matmul(U, [[2, 4], [1, 1]]) == H
    assert abs(lat.det(U)) == 1


def test_hnf_example_matches_brute_force_span():
    A = [[2, 4], [1, 1]]
    H, _ = lat.hnf(A)
    # a point with entries in [-6, 6] has coefficients of size at most 18 in either basis
    assert _box(oracles.lattice_points(A, 18), 6) == _box(oracles.lattice_points(H, 18), 6)


def test_hnf_zero_matrix():
    H, U = lat.hnf([[0, 0], [0, 0]])
    assert H == [[0, 0], [0, 0]]
    assert U == lat.identity(2)


def test_hnf_reduces_above_pivots():
    H, _ = lat.hnf([[3, 7, 1], [0, 2, 5]])
    assert H[1][1] == 2
    assert 0 <= H[0][1] < 2


@settings(max_examples=60)
@given(matrices(3, 3, 3))
def test_hnf_properties(A):
    H, U = lat.hnf(A)
    assert lat.matmul(U, A) == H
    assert abs(lat.det(U)) == 1
    for row in H:
        if any(row):
            assert lat.in_row_lattice(A, row)
    basis = [row for row in H if any(row)]
    for row in A:
        assert lat.in_row_lattice(basis, row) if basis else not any(row)


def test_snf_examples():
    assert lat.snf([[2, 0], [0, 3]]).nonzero == [1, 6]
    assert lat.snf(lat.identity(3)).nonzero == [1, 1, 1]
    assert lat.snf([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).nonzero == [2, 6, 12]
    assert lat.snf([[0, 0]]).nonzero == []


@settings(max_examples=80)
@given(matrices())
def test_snf_against_minor_gcds(A):
    res = lat.snf(A)
    m, n = len(A), len(A[0])
    diag = [[res.d[i] if i == j else 0 for j in range(n)] for i in range(m)]
    assert lat.matmul(lat.matmul(res.left, A), res.right) == diag
    assert abs(lat.det(res.left)) == 1 and abs(lat.det(res.right)) == 1
    nz = res.nonzero
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert nz == oracles.expected_invariant_factors(A)


@settings(max_examples=60)
@given(matrices(4, 4, 6).filter(lambda A: len(A) == len(A[0])))
def test_det_against_fraction_elimination(A):
    assert lat.det(A) == oracles.fraction_det(A)


def test_rank():
    assert lat.rank([[1, 2], [2, 4]]) == 1
    assert lat.rational_rank([[Fraction(1, 2), 1], [1, 2]]) == 1


def test_kernel_basis_examples():
    assert lat.kernel_basis(lat.identity(3)) == []
    assert lat.kernel_basis([[1, 0], [1, 0], [0, 1]]) == [[1, -1, 0]]
    assert lat.kernel_basis([[2], [4]]) == [[2, -1]]


@settings(max_examples=60)
@given(matrices())
def test_kernel_rank_nullity(A):
    K = lat.kernel_basis(A)
    assert len(K) + lat.rank(A) == len(A)
    for k in K:
        assert not any(lat.vecmat(k, A))
    assert lat.is_direct_summand(K) if K else True


def test_solve_integral():
    assert lat.solve_integral([[1, 0], [1, 2]], [3, 4]) == [1, 2]


def test_solve_integral_errors_are_distinct():
    with pytest.raises(lat.NoRationalSolution):
        lat.solve_integral([[1, 0]], [0, 1])
    with pytest.raises(lat.RationalButNotIntegral) as info:
        lat.solve_integral([[2, 0]], [1, 0])
    assert info.value.solution == [Fraction(1, 2)]
    assert not issubclass(lat.NoRationalSolution, lat.RationalButNotIntegral)


def test_solve_rational_dependent_rows():
    with pytest.raises(lat.LatticeError):
        lat.solve_rational([[1, 1], [2, 2]], [1, 1])


@pytest.mark.parametrize("M, expected", [
    ([[1, 0, 0]], True),
    ([[2, 0, 0]], False),
    ([[1, 1], [1, -1]], False),
    ([[1, 2, 3], [0, 1, 4]], True),
    ([[2, 4]], False),
    ([[0, 0]], True),
])
def test_is_direct_summand_examples(M, expected):
    assert lat.is_direct_summand(M) is expected
    assert oracles.boxed_summand_oracle(M, box=6) is expected


@settings(max_examples=40, deadline=None)
@given(matrices(3, 3, 3).filter(lambda A: len(A[0]) == 3))
def test_is_direct_summand_against_boxed_oracle(M):
    assert lat.is_direct_summand(M) == oracles.boxed_summand_oracle(M, box=4)


def test_complete_to_basis():
    M = [[1, 2, 3], [0, 1, 4]]
    extra = lat.complete_to_basis(M)
    assert len(extra) == 1
    assert abs(lat.det(M + extra)) == 1
    assert lat.complete_to_basis([], ncols=2) == lat.identity(2)
    with pytest.raises(lat.NotASummand):
        lat.complete_to_basis([[2, 0]])


@settings(max_examples=60)
@given(matrices(3, 4, 4))
def test_completion_witness_is_unimodular(M):
    if not lat.is_direct_summand(M):
        return
    basis = lat.row_basis(M)
    extra = lat.complete_to_basis(M)
    assert len(basis) + len(extra) == len(M[0])
    assert abs(lat.det(basis + extra)) == 1


def test_unimodular_inverse():
    A = [[2, 1], [1, 1]]
    assert lat.matmul(A, lat.unimodular_inverse(A)) == lat.identity(2)
    with pytest.raises(lat.LatticeError):
        lat.unimodular_inverse([[2, 0], [0, 1]])
