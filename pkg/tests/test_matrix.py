from __future__ import annotations

from fractions import Fraction

import pytest

from vbk.laurent import q
from vbk.matrix import (
    DimensionError,
    ExactMatrix,
    SingularMatrixError,
    embed_adjacent,
    embed_pair,
    kron,
    perm_operator,
    swap_matrix,
)
from vbk.rings import RingError
from vbk.words import Permutation, compose


def test_det_and_rational_inverse():
    m = ExactMatrix.from_rows([[1, 2], [3, 4]], "rat")
    assert m.det() == -2
    assert m.inverse() == ExactMatrix.from_rows([[-2, 1], [Fraction(3, 2), Fraction(-1, 2)]], "rat")


def test_integer_inverse_needs_unit_determinant():
    m = ExactMatrix.from_rows([[2, 1], [1, 1]])
    assert m.inverse() == ExactMatrix.from_rows([[1, -1], [-1, 2]])
    with pytest.raises(SingularMatrixError):
        ExactMatrix.from_rows([[2, 0], [0, 1]]).inverse()


def test_laurent_inverse():
    m = ExactMatrix.from_rows([[q, 1], [0, q ** -1]], "laurent")
    inv = m.inverse()
    assert inv == ExactMatrix.from_rows([[q ** -1, -1], [0, q]], "laurent")
    assert (m @ inv).is_identity()


def test_kron_small():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]])
    b = ExactMatrix.from_rows([[0, 1], [1, 0]])
    assert kron(a, b) == ExactMatrix.from_rows(
        [[0, 1, 0, 2], [1, 0, 2, 0], [0, 3, 0, 4], [3, 0, 4, 0]])


def test_ring_mismatch_and_shape_errors():
    with pytest.raises(RingError):
        ExactMatrix.identity(2, "int") @ ExactMatrix.identity(2, "rat")
    with pytest.raises(DimensionError):
        ExactMatrix.identity(2) @ ExactMatrix.identity(3)


def test_swap_is_transposition_operator():
    assert perm_operator(Permutation.transposition(2, 1, 2), 2) == swap_matrix(2)
    assert swap_matrix(3) @ swap_matrix(3) == ExactMatrix.identity(9)


def test_perm_operator_is_homomorphism():
    p = Permutation((2, 3, 1))
    r = Permutation((1, 3, 2))
    assert perm_operator(compose(p, r), 2) == perm_operator(p, 2) @ perm_operator(r, 2)


def test_embed_pair_reversed_is_swap_conjugate():
    rho = ExactMatrix.from_rows([[1, 2, 0, 0], [0, 1, 3, 0], [0, 0, 1, 0], [4, 0, 0, 1]])
    p = swap_matrix(2)
    assert embed_pair(rho, 2, 1, 2, 2) == p @ rho @ p
    assert embed_pair(rho, 1, 2, 2, 2) == rho


def test_embed_pair_equivariance():
    rho = ExactMatrix.from_rows([[1, 2, 0, 5], [0, 1, 3, 0], [0, 7, 1, 0], [4, 0, 0, 1]])
    p = Permutation((3, 1, 2))
    op = perm_operator(p, 2)
    lhs = op @ embed_pair(rho, 1, 2, 3, 2) @ op.inverse()
    assert lhs == embed_pair(rho, p(1), p(2), 3, 2)


def test_embed_adjacent_matches_embed_pair():
    rho = ExactMatrix.from_rows([[1, 2, 0, 0], [0, 1, 3, 0], [0, 0, 1, 0], [4, 0, 0, 1]])
    assert embed_adjacent(rho, 2, 3, 2) == embed_pair(rho, 2, 3, 3, 2)


def test_json_round_trip():
    m = ExactMatrix.from_rows([[q, 0], [1, q - q ** -1]], "laurent")
    assert ExactMatrix.from_json(m.to_json()) == m
    r = ExactMatrix.from_rows([[Fraction(1, 2), 3]], "rat")
    assert r.to_json()["entries"] == ["1/2", 3]
    assert ExactMatrix.from_json(r.to_json()) == r


def test_power_and_trace():
    m = ExactMatrix.from_rows([[1, 1], [0, 1]])
    assert m.power(5) == ExactMatrix.from_rows([[1, 5], [0, 1]])
    assert m.power(-1) == ExactMatrix.from_rows([[1, -1], [0, 1]])
    assert m.trace() == 2
