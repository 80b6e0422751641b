import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from taitcount import (
    SymF3Matrix,
    alpha_from_mask,
    edge_weights_from_alpha,
    f3,
    laplacian,
    legendre,
    oriented_incidence,
    principal_minor_det,
    spanning_tree_sum,
    sym_rank_certificate,
)
from taitcount.oracles import iter_symmetric_matrices, random_symmetric


def row_reduce_rank(entries):
    """Independent rank oracle: plain (non-symmetric) row reduction mod 3."""
    a = [[v % 3 for v in row] for row in entries]
    rank = 0
    cols = len(a[0]) if a else 0
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, len(a)) if a[r][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = a[row][col]  # self-inverse mod 3
        for r in range(len(a)):
            if r != row and a[r][col]:
                factor = a[r][col] * inv % 3
                for c in range(cols):
                    a[r][c] = (a[r][c] - factor * a[row][c]) % 3
        rank += 1
        row += 1
    return rank


def test_f3_normalization():
    assert [f3(v) for v in range(-4, 5)] == [-1, 0, 1, -1, 0, 1, -1, 0, 1]


def test_legendre_values():
    assert legendre(1) == 1
    assert legendre(-1) == -1
    assert legendre(0) == 0
    assert legendre(2) == -1  # 2 = -1 mod 3


def test_legendre_multiplicative():
    for a, b in itertools.product((-1, 0, 1), repeat=2):
        assert legendre(f3(a * b)) == legendre(a) * legendre(b)


def test_symf3matrix_validation():
    with pytest.raises(ValueError, match="not in"):
        SymF3Matrix(((2,),))
    with pytest.raises(ValueError, match="symmetric"):
        SymF3Matrix(((0, 1), (0, 0)))
    with pytest.raises(ValueError, match="length"):
        SymF3Matrix(((0, 1),))
    assert SymF3Matrix.from_rows([[5, -4], [-4, 3]]).entries == ((-1, -1), (-1, 0))


def test_laplacian_k4_all_minus_one(k4):
    x = edge_weights_from_alpha(k4, alpha_from_mask(4, 0))
    assert set(x) == {-1}
    lap = laplacian(k4, x)
    for i in range(4):
        assert lap.entries[i][i] == 0  # 3 * (-1) = 0 mod 3
        for j in range(4):
            if i != j:
                assert lap.entries[i][j] == 1
        assert f3(sum(lap.entries[i])) == 0


def test_laplacian_zero_weights(octahedron):
    x = [0] * len(octahedron.edges)
    assert laplacian(octahedron, x) == SymF3Matrix.zero(6)


@settings(deadline=None, max_examples=40)
@given(data=st.data())
def test_laplacian_equals_incidence_product(data, bipyramid3):
    x = data.draw(
        st.lists(
            st.sampled_from((-1, 0, 1)),
            min_size=len(bipyramid3.edges),
            max_size=len(bipyramid3.edges),
        )
    )
    assert laplacian(bipyramid3, x) == oriented_incidence(bipyramid3, x).matrix_product()


def test_laplacian_row_sums_always_zero(k4):
    for mask in range(16):
        lap = laplacian(k4, edge_weights_from_alpha(k4, alpha_from_mask(4, mask)))
        assert all(f3(sum(row)) == 0 for row in lap.entries)


def test_certificate_zero_matrix():
    cert = sym_rank_certificate(SymF3Matrix.zero(4))
    assert (cert.rank, cert.pivot_set, cert.det) == (0, (), 1)


@pytest.mark.parametrize("c", [-1, 1])
def test_certificate_1x1(c):
    cert = sym_rank_certificate(SymF3Matrix(((c,),)))
    assert (cert.rank, cert.pivot_set, cert.det) == (1, (0,), c)


def test_certificate_hyperbolic_block():
    cert = sym_rank_certificate(SymF3Matrix(((0, 1), (1, 0))))
    assert (cert.rank, cert.pivot_set, cert.det) == (2, (0, 1), -1)


@settings(deadline=None, max_examples=150)
@given(order=st.integers(0, 6), seed=st.integers(0, 10**9))
def test_certificate_against_row_reduction(order, seed):
    c = random_symmetric(order, random.Random(seed))
    cert = sym_rank_certificate(c)
    assert cert.rank == row_reduce_rank(c.entries)
    # the reported determinant really is the minor on the pivot set
    assert cert.det == principal_minor_det(c, cert.pivot_set)
    assert cert.det in (-1, 1)


def test_certificate_exhaustive_order_3():
    for c in iter_symmetric_matrices(3):
        cert = sym_rank_certificate(c)
        assert cert.rank == row_reduce_rank(c.entries)
        assert principal_minor_det(c, cert.pivot_set) == cert.det
        if cert.rank < 3:
            for s in itertools.combinations(range(3), cert.rank + 1):
                assert principal_minor_det(c, s) == 0  # pivot set is maximal


def test_principal_minor_conventions():
    c = SymF3Matrix.identity(3)
    assert principal_minor_det(c, ()) == 1
    assert principal_minor_det(c, (0, 1)) == 1
    with pytest.raises(ValueError, match="out of range"):
        principal_minor_det(c, (5,))


def test_k4_case1_minors_match_tree_sum(k4):
    # all edge weights -1: the tree sum is 16 * (-1)**3 = -1 mod 3, and every
    # 3x3 principal minor of the Laplacian must equal it
    x = edge_weights_from_alpha(k4, alpha_from_mask(4, 0))
    assert spanning_tree_sum(k4, x) == -1
    lap = laplacian(k4, x)
    for s in itertools.combinations(range(4), 3):
        assert principal_minor_det(lap, s) == -1


def test_k4_case2_minors(k4):
    # one face flipped: rank 3, and all 3x3 minors carry the tree-sum value
    mask = 1
    x = edge_weights_from_alpha(k4, alpha_from_mask(4, mask))
    lap = laplacian(k4, x)
    assert sym_rank_certificate(lap).rank == 3
    s_val = spanning_tree_sum(k4, x)
    assert s_val != 0
    minors = [principal_minor_det(lap, s) for s in itertools.combinations(range(4), 3)]
    assert set(minors) == {s_val}
    assert {legendre(m) for m in minors} <= {-1, 1}


def test_oriented_incidence_validation(k4):
    inc = oriented_incidence(k4, [1] * 6)
    assert inc.num_vertices == 4
    assert all(u != v for u, v in inc.columns)
    with pytest.raises(ValueError, match="loop"):
        type(inc)(4, ((1, 1),), (1,))
