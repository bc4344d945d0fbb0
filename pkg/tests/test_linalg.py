from __future__ import annotations

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from conftest import cqs
from cqphys.linalg import (
    IDENTITY, ZERO_MATRIX, CQMatrix2, CQVector2, anticommutator, commutator, complex_dagger, dagger,
    dagger_vec, diag, hermitian_inner, mat_mul, mat_vec, trace,
)
from cqphys.quaternion import CQ, H, J, K, ONE, ZERO, conj_both
from oracles import embed4x4, embed_vec, rho

mats = st.builds(CQMatrix2, cqs, cqs, cqs, cqs)
vecs = st.builds(CQVector2, cqs, cqs)


def test_charge_conjugation_times_gamma0():
    C = CQMatrix2(0, -1, 1, 0)
    G0 = diag(1, -1)
    assert mat_mul(C, G0) == CQMatrix2(0, 1, 1, 0)


def test_hermitian_inner_example():
    v = CQVector2(1, K)
    assert hermitian_inner(v, v) == CQ(2)


def test_time_reversal_matrix_properties():
    T = CQMatrix2(0, -1j, 1j, 0)
    assert mat_mul(T, T) == IDENTITY
    assert complex_dagger(T) == T


def test_identity_and_zero():
    M = CQMatrix2(H, J, K, 2)
    assert mat_mul(IDENTITY, M) == M == mat_mul(M, IDENTITY)
    assert mat_mul(ZERO_MATRIX, M) == ZERO_MATRIX
    assert IDENTITY.is_scalar_multiple_of_identity()
    assert not M.is_scalar_multiple_of_identity()


@given(mats, mats)
def test_product_matches_block_embedding(A, B):
    assert np.allclose(embed4x4(mat_mul(A, B)), embed4x4(A) @ embed4x4(B), atol=1e-10)


@given(mats, vecs)
def test_mat_vec_matches_block_embedding(A, v):
    got = embed_vec(mat_vec(A, v))
    assert np.allclose(got, embed4x4(A) @ embed_vec(v), atol=1e-10)


@given(mats, mats, mats)
def test_matrix_product_associative(A, B, C):
    assert mat_mul(mat_mul(A, B), C).isclose(mat_mul(A, mat_mul(B, C)), 1e-9)


@given(mats, mats)
def test_dagger_reverses_products(A, B):
    assert dagger(mat_mul(A, B)).isclose(mat_mul(dagger(B), dagger(A)), 1e-10)
    assert dagger(dagger(A)) == A


@given(mats)
def test_dagger_is_block_conjugate_transpose(A):
    assert np.allclose(embed4x4(dagger(A)), embed4x4(A).conj().T)


@given(vecs, vecs)
def test_hermitian_inner_conjugate_symmetry(u, v):
    assert conj_both(hermitian_inner(u, v)).isclose(hermitian_inner(v, u), 1e-10)
    assert (dagger_vec(u) @ v).isclose(hermitian_inner(u, v), 1e-12)


@given(mats, mats)
def test_commutator_and_anticommutator(A, B):
    AB, BA = mat_mul(A, B), mat_mul(B, A)
    assert commutator(A, B).isclose(AB - BA, 1e-12)
    assert anticommutator(A, B).isclose(AB + BA, 1e-12)


def test_trace_and_scaling():
    M = CQMatrix2(H, J, K, ONE)
    assert trace(M) == CQ(1, 1)
    assert (M * 2) / 2 == M
    assert M.left(H)[(0, 0)] == -ONE
    assert M.right(J)[(0, 1)] == -ONE
    assert CQVector2(H, ZERO).left(J).v0 == -K
    assert CQVector2(H, ZERO).right(J).v0 == K


def test_row_vector_products():
    u = CQVector2(1, H)
    r = dagger_vec(u)
    assert (r @ IDENTITY) @ u == CQ(2)
    assert np.allclose(rho(np.array((r @ u).coeffs)), 2 * np.eye(2))
