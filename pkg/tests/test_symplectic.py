"""Symplectic form, duals, hyperbolic decomposition, and the phi bijection."""

import itertools

import numpy as np
import pytest

from eaqecne.errors import DimensionMismatch, NotQuadraticExtension
from eaqecne.gf import field, quadratic_field
from eaqecne import linalg, symplectic as sp


def all_vectors(q, length):
    return itertools.product(range(q), repeat=length)


def test_inner_alternating_exhaustive():
    F = field(3)
    for u in all_vectors(3, 4):
        assert sp.symp_inner(F, np.array(u), np.array(u)) == 0


def test_inner_examples():
    F2 = field(2)
    assert sp.symp_inner(F2, np.array([1, 0]), np.array([0, 1])) == 1
    F3 = field(3)
    u = np.array([1, 0, 2, 0])
    v = np.array([0, 1, 1, 1])
    # (1,0).(1,1) - (2,0).(0,1) = 1 - 0
    assert sp.symp_inner(F3, u, v) == 1


def test_inner_bilinear_antisymmetric_gf3():
    F = field(3)
    rng = np.random.default_rng(0)
    for _ in range(100):
        u, v = rng.integers(0, 3, size=(2, 6))
        assert sp.symp_inner(F, u, v) == F.neg(sp.symp_inner(F, v, u))


def test_inner_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        sp.symp_inner(field(2), np.array([1, 0]), np.array([1, 0, 0, 0]))


def test_dual_trivial_and_full():
    F = field(3)
    zero = linalg.empty_matrix(4)
    assert sp.symp_dual(F, zero).shape == (4, 4)
    full = linalg.identity_matrix(4)
    assert sp.symp_dual(F, full).shape == (0, 4)


def test_dual_self_dual_example():
    F = field(2)
    S = linalg.row_basis(F, [[1, 0, 0, 0], [0, 1, 0, 0]])
    D = sp.symp_dual(F, S)
    assert D.shape[0] == 2
    assert linalg.subspace_eq(F, D, S)
    # oracle over all 16 vectors
    expect = {v for v in all_vectors(2, 4)
              if all(sp.symp_inner(F, np.array(v), s) == 0 for s in S)}
    got = {tuple(int(x) for x in r) for r in D}
    spanned = set()
    for c1, c2 in itertools.product(range(2), repeat=2):
        w = (c1 * D[0] + c2 * D[1]) % 2
        spanned.add(tuple(int(x) for x in w))
    assert spanned == expect


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_dual_dimension_and_involution(q):
    F = field(q)
    rng = np.random.default_rng(q)
    for _ in range(60):
        n = int(rng.integers(1, 7))
        dim = int(rng.integers(0, 2 * n + 1))
        S = linalg.row_basis(F, linalg.random_matrix(F, dim, 2 * n, rng))
        D = sp.symp_dual(F, S)
        assert S.shape[0] + D.shape[0] == 2 * n
        assert linalg.subspace_eq(F, sp.symp_dual(F, D), S)


def test_weight():
    assert sp.symp_weight(np.zeros(6, dtype=int)) == 0
    assert sp.symp_weight(np.array([1, 1, 0, 0])) == 2
    assert sp.symp_weight(np.array([1, 0, 1, 0])) == 1


def test_decompose_isotropic_input():
    F = field(2)
    S = linalg.row_basis(F, [[1, 0, 0, 0], [0, 1, 0, 0]])
    dec = sp.decompose(F, S)
    assert dec.c == 0 and dec.l == 2
    assert linalg.subspace_eq(F, dec.radical, S)


def test_decompose_single_pair():
    F = field(2)
    dec = sp.decompose(F, [[1, 0], [0, 1]])
    assert dec.l == 0 and dec.c == 1
    e, f = dec.pairs[0]
    assert sp.symp_inner(F, e, f) == 1


def check_gram(F, dec):
    for i, (e, f) in enumerate(dec.pairs):
        assert sp.symp_inner(F, e, f) == 1
        for j, (e2, f2) in enumerate(dec.pairs):
            if i != j:
                for u in (e, f):
                    for v in (e2, f2):
                        assert sp.symp_inner(F, u, v) == 0
        for r in dec.radical:
            assert sp.symp_inner(F, r, e) == 0
            assert sp.symp_inner(F, r, f) == 0


@pytest.mark.parametrize("q", [2, 3])
def test_decompose_random_properties(q):
    F = field(q)
    rng = np.random.default_rng(23 + q)
    for _ in range(60):
        n = int(rng.integers(1, 6))
        m = int(rng.integers(0, 2 * n + 1))
        S = linalg.row_basis(F, linalg.random_matrix(F, m, 2 * n, rng))
        dec = sp.decompose(F, S)
        assert dec.l + 2 * dec.c == S.shape[0]
        check_gram(F, dec)
        # radical spans S intersect S-perp
        expect = linalg.subspace_intersect(F, S, sp.symp_dual(F, S))
        assert linalg.subspace_eq(F, dec.radical, expect)
        # internal direct sum reassembles S
        both = np.vstack([dec.radical, dec.pair_matrix()])
        assert linalg.rank(F, both) == S.shape[0]
        assert linalg.subspace_eq(F, both, S)
        # c = 0 exactly when totally isotropic
        assert (dec.c == 0) == sp.is_totally_isotropic(F, S)


def test_phi_examples_gf4():
    Q = field(4)
    assert sp.phi(Q, np.array([0, 0])).tolist() == [0]
    assert sp.phi(Q, np.array([1, 0])).tolist() == [2]   # beta = omega
    assert sp.phi(Q, np.array([0, 1])).tolist() == [3]   # omega^2
    assert sp.phi(Q, np.array([1, 1])).tolist() == [1]   # omega + omega^2 = 1
    with pytest.raises(NotQuadraticExtension):
        sp.phi(field(2), np.array([1, 0]))


@pytest.mark.parametrize("q", [2, 3])
def test_phi_round_trip_exhaustive(q):
    Q = quadratic_field(field(q))
    for n in (1, 2, 3):
        for v in itertools.islice(all_vectors(q, 2 * n), 0, None):
            arr = np.array(v)
            assert np.array_equal(sp.phi_inv(Q, sp.phi(Q, arr)), arr)


@pytest.mark.parametrize("q", [2, 3])
def test_phi_weight_preserving(q):
    Q = quadratic_field(field(q))
    rng = np.random.default_rng(5)
    for _ in range(100):
        v = rng.integers(0, q, size=8)
        assert int((sp.phi(Q, v) != 0).sum()) == sp.symp_weight(v)


def hermitian_dot(Q, u, v):
    acc = 0
    for a, b in zip(u, v):
        acc = Q.add(acc, Q.mul(int(a), Q.conjugate(int(b))))
    return acc


@pytest.mark.parametrize("q", [2, 3])
def test_phi_pullback_identity_exhaustive(q):
    # h(phi u, phi v) - h(phi v, phi u) = (beta^2 - beta^2q) * <u, v>
    F = field(q)
    Q = quadratic_field(F)
    for n in (1, 2):
        vecs = list(all_vectors(q, 2 * n)) if q ** (2 * n) <= 81 else []
        for u in vecs:
            for v in vecs:
                pu, pv = sp.phi(Q, np.array(u)), sp.phi(Q, np.array(v))
                lhs = Q.sub(hermitian_dot(Q, pu, pv), hermitian_dot(Q, pv, pu))
                rhs = Q.mul(Q.alt_normalizer, sp.symp_inner(F, np.array(u), np.array(v)))
                assert lhs == rhs


@pytest.mark.parametrize("q", [4, 5])
def test_phi_pullback_identity_random(q):
    F = field(q)
    Q = quadratic_field(F)
    rng = np.random.default_rng(31)
    for _ in range(200):
        u, v = rng.integers(0, q, size=(2, 6))
        pu, pv = sp.phi(Q, u), sp.phi(Q, v)
        lhs = Q.sub(hermitian_dot(Q, pu, pv), hermitian_dot(Q, pv, pu))
        rhs = Q.mul(Q.alt_normalizer, sp.symp_inner(F, u, v))
        assert lhs == rhs


@pytest.mark.parametrize("q", [2, 3, 5])
def test_random_isotropic_basis(q):
    F = field(q)
    rng = np.random.default_rng(77)
    for _ in range(20):
        n = int(rng.integers(1, 5))
        m = int(rng.integers(0, n + 1))
        B = sp.random_isotropic_basis(F, n, m, rng)
        assert B.shape == (m, 2 * n)
        assert sp.is_totally_isotropic(F, B)
