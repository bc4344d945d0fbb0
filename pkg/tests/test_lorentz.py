from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import finite, real3
from cqphys.errors import NonUnitElementError
from cqphys.lorentz import (
    Chirality, FourVector, boost_matrix, conjugation_act, embed_four, embed_pauli, extract_four,
    interval, left_partner, lorentz_act, pauli_inner, rotation_matrix, spin_element, vector_transform,
)
from cqphys.quaternion import CQ, ONE, conj_quat, mul, quat_norm
from oracles import boost_oracle, rotation_oracle

small = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)
betas = st.tuples(st.builds(complex, finite, small), st.builds(complex, finite, small),
                  st.builds(complex, finite, small))
fours = st.tuples(finite, finite, finite, finite)
axes = real3.filter(lambda v: math.sqrt(sum(x * x for x in v)) > 0.1)


def test_embed_pauli_examples():
    assert embed_pauli((0, 0, 0)) == CQ(0)
    assert embed_pauli((1, 0, 0)) == CQ(0, 1j)
    X = embed_pauli((3, 4, 0))
    assert X == CQ(0, 3j, 4j)
    assert quat_norm(X) == CQ(-25)


def test_embed_four_examples():
    assert embed_four((1, 0, 0, 0)) == ONE
    assert embed_four((0, 0, 0, 1)) == CQ(0, 0, 0, -1j)
    for ch in Chirality:
        assert interval(embed_four((2, 0, 0, 1), ch)) == 3
    assert interval(embed_four((0, 1, 0, 0))) == -1
    assert interval(embed_four((5, 3, 0, 4))) == 0


def test_interval_of_non_embedded_element_is_complex():
    assert interval(CQ(1, 1, 0, 0)) == 2
    assert interval(CQ(0, 1 + 1j, 0, 0)) == 2j
    assert FourVector(2, 0, 0, 1).minkowski_square() == 3


@given(fours, st.sampled_from(list(Chirality)))
def test_extract_round_trip(x, ch):
    assert np.allclose(extract_four(embed_four(x, ch), ch), x)


def test_spin_element_identity():
    assert spin_element((0, 0, 0)) == ONE
    X = embed_four((1, 2, 3, 4))
    assert lorentz_act(ONE, X) == X


def test_quarter_turn_about_z():
    g = spin_element((0, 0, math.pi / 4))
    assert lorentz_act(g, embed_pauli((1, 0, 0))).isclose(embed_pauli((0, 1, 0)), 1e-15)


def test_boost_convention():
    phi, t, z = 0.8, 1.3, -0.4
    g = spin_element((0, 0, 0.5j * phi))
    out = extract_four(lorentz_act(g, embed_four((t, 0, 0, z))))
    ch, sh = math.cosh(phi), math.sinh(phi)
    assert np.allclose(out, (t * ch - z * sh, 0, 0, z * ch - t * sh), atol=1e-14)


@given(axes, finite)
def test_real_beta_is_rotation(axis, angle):
    n = np.array(axis) / np.linalg.norm(axis)
    L = vector_transform(tuple(n * angle / 2))
    R = rotation_oracle(axis, angle)
    assert np.allclose(L[1:, 1:], R, atol=1e-12)
    assert np.allclose(rotation_matrix(axis, angle), R, atol=1e-12)
    assert np.allclose(L[0], (1, 0, 0, 0)) and np.allclose(L[:, 0], (1, 0, 0, 0))


@given(axes, small)
def test_imaginary_beta_is_boost(direction, rapidity):
    n = np.array(direction) / np.linalg.norm(direction)
    L = vector_transform(tuple(1j * n * rapidity / 2))
    assert np.allclose(L, boost_oracle(direction, -rapidity), atol=1e-11)
    assert np.allclose(boost_matrix(direction, rapidity), boost_oracle(direction, rapidity), atol=1e-11)


@given(betas, fours, st.sampled_from(list(Chirality)))
def test_interval_preserved(beta, x, ch):
    g = spin_element(beta)
    if ch is Chirality.LEFT:
        g = left_partner(g)
    X = embed_four(x, ch)
    Y = lorentz_act(g, X)
    scale = 1 + sum(c * c for c in x)
    assert abs(interval(Y) - interval(X)) < 1e-10 * scale * max(1.0, g.abs2()) ** 2
    # the image is again a real embedded four-vector
    assert Y.isclose(embed_four(extract_four(Y, ch), ch), 1e-9 * scale * max(1.0, g.abs2()) ** 2)


@given(betas, fours)
def test_left_and_right_embeddings_transform_identically(beta, x):
    g = spin_element(beta)
    right = extract_four(lorentz_act(g, embed_four(x)))
    left = extract_four(lorentz_act(left_partner(g), embed_four(x, Chirality.LEFT), tol=1e-8),
                        Chirality.LEFT)
    assert np.allclose(right, left, atol=1e-9 * (1 + np.abs(x).max()) * max(1.0, g.abs2()) ** 2)


@given(betas, betas, fours)
def test_group_law(b1, b2, x):
    g1, g2 = spin_element(b1), spin_element(b2)
    X = embed_four(x)
    lhs = lorentz_act(g1, lorentz_act(g2, X, tol=1e-8), tol=1e-8)
    rhs = lorentz_act(mul(g1, g2), X, tol=1e-6)
    scale = (1 + max(abs(c) for c in x)) * max(1.0, g1.abs2() * g2.abs2()) ** 2
    assert lhs.isclose(rhs, 1e-9 * scale)


@given(betas, fours)
def test_conjugation_preserves_interval_but_not_time(beta, x):
    g = spin_element(beta)
    X = embed_four(x)
    Y = conjugation_act(g, X, tol=1e-8)
    assert Y.c0 == pytest.approx(X.c0, abs=1e-9 * max(1.0, g.abs2()) ** 2 * (1 + abs(x[0])))
    assert quat_norm(Y).isclose(quat_norm(X), 1e-9 * max(1.0, g.abs2()) ** 2 * (1 + sum(c * c for c in x)))


@given(real3, real3, real3)
def test_rotations_preserve_pauli_inner(beta, a, b):
    g = spin_element(beta)
    A, B = embed_pauli(a), embed_pauli(b)
    before = pauli_inner(A, B)
    after = pauli_inner(lorentz_act(g, A), lorentz_act(g, B))
    tol = 1e-10 * (1 + sum(x * x for x in a + b))
    assert abs(after.c0 - before.c0) < tol
    assert after.isclose(mul(mul(g, before), conj_quat(g)), tol)


def test_non_unit_element_rejected():
    with pytest.raises(NonUnitElementError):
        lorentz_act(CQ(2), embed_four((1, 0, 0, 0)))
