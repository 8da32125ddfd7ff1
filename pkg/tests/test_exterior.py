from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from malcev.exterior import (basis_index, derivation_matrix, embed_pairs,
                             exterior_power_matrix, merge_sign, restrict_pairs,
                             unit_kvector, wedge, wedge_basis)
from malcev.linalg import Matrix, vec


def test_wedge_basis_is_lexicographic():
    assert wedge_basis(3, 2) == ((0, 1), (0, 2), (1, 2))
    assert wedge_basis(4, 0) == ((),)
    assert wedge_basis(4, 4) == ((0, 1, 2, 3),)
    with pytest.raises(ValueError, match="out of range"):
        wedge_basis(3, 4)
    with pytest.raises(ValueError, match="out of range"):
        wedge_basis(3, -1)


def test_basis_index_inverts_wedge_basis():
    for k in range(5):
        for pos, mi in enumerate(wedge_basis(4, k)):
            assert basis_index(4, k)[mi] == pos


def test_merge_sign_counts_inversions():
    assert merge_sign((0, 2), (1,)) == ((0, 1, 2), -1)
    assert merge_sign((0,), (1, 2)) == ((0, 1, 2), 1)
    assert merge_sign((1,), (1,)) == (None, 0)


def test_wedge_sign_convention():
    # the anchors that nail the orientation once and for all
    e0 = unit_kvector(3, 1, (0,))
    e1 = unit_kvector(3, 1, (1,))
    assert wedge(e0, 1, e1, 1, 3) == unit_kvector(3, 2, (0, 1))
    assert wedge(e1, 1, e0, 1, 3) == tuple(-x for x in
                                           unit_kvector(3, 2, (0, 1)))
    assert not any(wedge(e0, 1, e0, 1, 3))


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 5), st.data())
def test_wedge_graded_commutativity(n, data):
    p = data.draw(st.integers(0, n))
    q = data.draw(st.integers(0, n - p))
    coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    from math import comb
    a = tuple(data.draw(st.lists(coeffs, min_size=comb(n, p),
                                 max_size=comb(n, p))))
    b = tuple(data.draw(st.lists(coeffs, min_size=comb(n, q),
                                 max_size=comb(n, q))))
    ab = wedge(a, p, b, q, n)
    ba = wedge(b, q, a, p, n)
    sign = (-1) ** (p * q)
    assert ab == tuple(sign * x for x in ba)


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 5), st.data())
def test_wedge_associativity_on_one_vectors(n, data):
    coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    a, b, c = (tuple(data.draw(st.lists(coeffs, min_size=n, max_size=n)))
               for _ in range(3))
    left = wedge(wedge(a, 1, b, 1, n), 2, c, 1, n)
    right = wedge(a, 1, wedge(b, 1, c, 1, n), 2, n)
    assert left == right


def test_derivation_matrix_heisenberg_shape():
    # d(g2) = -g0^g1, other generators closed
    images = [vec([0, 0, 0]), vec([0, 0, 0]), vec([-1, 0, 0])]
    d1 = derivation_matrix(images, 3, 1)
    assert (d1.rows, d1.cols) == (3, 3)
    assert d1.column(2) == vec([-1, 0, 0])
    assert d1.column(0) == d1.column(1) == vec([0, 0, 0])
    d2 = derivation_matrix(images, 3, 2)
    assert d2.is_zero()


def test_derivation_is_leibniz_on_products():
    images = [vec([0, 0, 0]), vec([0, 0, 0]), vec([-1, 0, 0])]
    d1 = derivation_matrix(images, 3, 1)
    d2 = derivation_matrix(images, 3, 2)
    a = vec([2, 0, 1])
    b = vec([0, 3, -1])
    lhs = d2.apply(wedge(a, 1, b, 1, 3))
    # d(a^b) = da^b - a^db for a of degree 1
    rhs = tuple(x - y for x, y in zip(wedge(d1.apply(a), 2, b, 1, 3),
                                      wedge(a, 1, d1.apply(b), 2, 3)))
    assert lhs == rhs


def test_exterior_power_of_diagonal():
    m = Matrix.from_rows([[2, 0, 0], [0, 3, 0], [0, 0, 5]])
    square = exterior_power_matrix(m, 2)
    assert square == Matrix.from_rows([[6, 0, 0], [0, 10, 0], [0, 0, 15]])
    assert exterior_power_matrix(m, 1) == m
    top = exterior_power_matrix(m, 3)
    assert top == Matrix.from_rows([[30]])


def test_exterior_power_of_swap_is_determinant():
    swap = Matrix.from_rows([[0, 1], [1, 0]])
    assert exterior_power_matrix(swap, 2) == Matrix.from_rows([[-1]])


def test_pair_embedding_round_trip():
    v = vec([1, 2, 3])  # pairs (0,1),(0,2),(1,2) on 3 generators
    big = embed_pairs(v, 3, 5)
    assert len(big) == 10
    assert restrict_pairs(big, 5, 3) == v
    idx = basis_index(5, 2)
    assert big[idx[(0, 1)]] == 1 and big[idx[(1, 2)]] == 3
    assert big[idx[(0, 4)]] == 0
