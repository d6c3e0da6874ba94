"""Additive codes: forms, duals, decomposition, min weight, puncturing."""

import itertools

import numpy as np
import pytest

from eaqecne.errors import (BudgetExceeded, FormatError, IndexOutOfRange,
                            PreconditionFailed)
from eaqecne.gf import field, quadratic_field
from eaqecne import addcodes as ac
from eaqecne import linalg, symplectic as sp


def enumerate_codewords(code):
    """Oracle: all words via scalar arithmetic on coefficient tuples."""
    Q = code.field
    q = Q.base.order
    out = set()
    G = code.generators
    for coeffs in itertools.product(range(q), repeat=G.shape[0]):
        w = [0] * code.n
        for c, row in zip(coeffs, G):
            for j in range(code.n):
                w[j] = Q.add(w[j], Q.mul(c, int(row[j])))
        out.add(tuple(w))
    return out


def oracle_min_weight(code, excluded=None):
    skip = enumerate_codewords(excluded) if excluded else {tuple([0] * code.n)}
    weights = [sum(1 for x in w if x) for w in enumerate_codewords(code) - skip]
    return min(weights) if weights else code.n + 1


def test_inner_examples():
    Q = field(4)
    assert ac.inner(Q, [1, 0], [1, 0], "hermitian") == 1
    assert ac.inner(Q, [2], [2], "hermitian") == 1  # w * w^2 = w^3 = 1
    for u in itertools.product(range(4), repeat=2):
        assert ac.inner(Q, u, u, "alternating") == 0


def test_inner_trace_is_rel_trace_of_hermitian():
    Q = field(9)
    rng = np.random.default_rng(1)
    for _ in range(50):
        u, v = rng.integers(0, 9, size=(2, 3))
        h = ac.inner(Q, u, v, "hermitian")
        assert ac.inner(Q, u, v, "trace") == Q.rel_trace(h)


def test_alternating_form_antisymmetric_base_valued():
    Q = field(9)
    rng = np.random.default_rng(2)
    for _ in range(50):
        u, v = rng.integers(0, 9, size=(2, 3))
        a = ac.inner(Q, u, v, "alternating")
        b = ac.inner(Q, v, u, "alternating")
        assert a < 3 and b < 3
        assert a == field(3).neg(b)


def test_dual_of_zero_is_full():
    Q = field(4)
    D = ac.dual(ac.AdditiveCode.zero(Q, 2), "alternating")
    assert D.m == 4  # exponent 2n


def test_dual_gf4_span_one():
    # alternating-orthogonal to 1 means x = conj(x), i.e. the base subfield
    Q = field(4)
    C = ac.AdditiveCode.from_generators(Q, [[1]])
    D = ac.dual(C, "alternating")
    assert D.m == 1
    expect = {x for x in range(4)
              if ac.inner(Q, [x], [1], "alternating") == 0}
    assert {w[0] for w in enumerate_codewords(D)} == expect == {0, 1}


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("form", ["trace", "alternating"])
def test_dual_size_law(q, form):
    Q = quadratic_field(field(q))
    rng = np.random.default_rng(q * 7)
    for _ in range(50):
        n = int(rng.integers(1, 5))
        C = ac.random_additive_code(Q, n, int(rng.integers(0, 2 * n + 1)), rng)
        D = ac.dual(C, form)
        assert C.m + D.m == 2 * n
        assert ac.dual(D, form) == C


@pytest.mark.parametrize("q", [2, 3])
def test_duality_correspondence_with_symplectic(q):
    Q = quadratic_field(field(q))
    F = field(q)
    rng = np.random.default_rng(q * 13)
    for _ in range(40):
        n = int(rng.integers(1, 5))
        C = ac.random_additive_code(Q, n, int(rng.integers(0, 2 * n + 1)), rng)
        D = ac.dual(C, "alternating")
        assert linalg.subspace_eq(F, D.preimage, sp.symp_dual(F, C.preimage))


def test_char2_trace_equals_alternating_dual():
    Q = field(4)
    rng = np.random.default_rng(17)
    for _ in range(40):
        n = int(rng.integers(1, 5))
        C = ac.random_additive_code(Q, n, int(rng.integers(0, 2 * n + 1)), rng)
        assert ac.dual(C, "trace") == ac.dual(C, "alternating")


def test_radical_cases():
    Q = field(4)
    # self-orthogonal: one generator is always alternating-self-orthogonal
    C = ac.AdditiveCode.from_generators(Q, [[1, 1]])
    assert ac.radical(C) == C
    assert ac.is_self_orthogonal(C)
    # ACD: GF(4) itself at n=1
    A = ac.AdditiveCode.from_generators(Q, [[1], [2]])
    assert ac.radical(A).m == 0
    assert ac.is_acd(A)


def test_decompose_examples():
    Q = field(4)
    A = ac.AdditiveCode.from_generators(Q, [[1], [2]])
    dec = ac.radical_decompose(A)
    assert dec.l == 0 and dec.c == 1 and dec.complement == A
    S = ac.AdditiveCode.from_generators(Q, [[1, 1]])
    dec = ac.radical_decompose(S)
    assert dec.c == 0 and dec.radical == S and dec.complement.m == 0


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("form", ["alternating", "trace"])
def test_radical_complement_reconstruction(q, form):
    Q = quadratic_field(field(q))
    F = field(q)
    rng = np.random.default_rng(29 + q)
    for _ in range(50):
        n = int(rng.integers(1, 5))
        C = ac.random_additive_code(Q, n, int(rng.integers(0, 2 * n + 1)), rng)
        if form == "trace" and q == 3:
            # odd characteristic: the trace form is symmetric, so the
            # complement dimension may be odd; skip those instances
            l = ac.radical(C, "trace").m
            if (C.m - l) % 2:
                continue
        dec = ac.radical_decompose(C, form)
        assert dec.radical == ac.radical(C, form)
        joined = np.vstack([dec.radical.preimage, dec.complement.preimage])
        assert linalg.rank(F, joined) == C.m
        assert linalg.subspace_eq(F, joined, C.preimage)
        assert ac.radical(dec.complement, form).m == 0
        assert dec.l + 2 * dec.c == C.m


def test_dual_containing_predicate():
    Q = field(4)
    full = ac.AdditiveCode.full(Q, 2)
    assert ac.is_dual_containing(full)
    zero = ac.AdditiveCode.zero(Q, 2)
    assert ac.is_self_orthogonal(zero)


def test_min_weight_single_word():
    Q = field(4)
    C = ac.AdditiveCode.from_generators(Q, [[1, 1, 1]])
    assert ac.min_weight(C) == 3


def test_min_weight_excluding_sentinel():
    Q = field(4)
    C = ac.AdditiveCode.from_generators(Q, [[1, 1]])
    r = ac.min_weight_excluding_detail(C, C)
    assert r.weight == C.n + 1 and r.is_undefined(C.n) and r.examined == 0


def test_min_weight_budget():
    Q = field(4)
    C = ac.AdditiveCode.full(Q, 3)
    with pytest.raises(BudgetExceeded) as exc:
        ac.min_weight(C, budget=10)
    assert exc.value.required == 2 ** 6 - 1  # q^m - 1 with q = 2, m = 2n = 6


def test_min_weight_noncontained_exclusion():
    Q = field(4)
    A = ac.AdditiveCode.from_generators(Q, [[1, 0]])
    B = ac.AdditiveCode.from_generators(Q, [[0, 1]])
    with pytest.raises(PreconditionFailed):
        ac.min_weight_excluding(A, B)


@pytest.mark.parametrize("q", [2, 3])
def test_min_weight_matches_oracle(q):
    Q = quadratic_field(field(q))
    rng = np.random.default_rng(41 + q)
    for _ in range(25):
        n = int(rng.integers(1, 5))
        C = ac.random_additive_code(Q, n, int(rng.integers(0, min(2 * n, 6) + 1)), rng)
        expect = oracle_min_weight(C)
        assert ac.min_weight(C) == expect
        assert ac.min_weight(C, strategy="partitioned") == expect
        assert ac.min_weight(C, strategy="partitioned", threads=2) == expect
        # exclusion against a random subcode
        rows = C.preimage[: int(rng.integers(0, C.m + 1))]
        B = ac.AdditiveCode.from_preimage(Q, linalg.as_matrix(rows, cols=2 * n))
        assert ac.min_weight_excluding(C, B) == oracle_min_weight(C, B)


@pytest.mark.parametrize("q", [2, 3])
def test_min_weight_exclusion_monotone(q):
    # excluding a larger subcode cannot decrease the minimum
    Q = quadratic_field(field(q))
    rng = np.random.default_rng(61 + q)
    for _ in range(20):
        n = int(rng.integers(1, 5))
        A = ac.random_additive_code(Q, n, int(rng.integers(2, 2 * n + 1)), rng)
        cut1 = int(rng.integers(0, A.m))
        cut2 = int(rng.integers(cut1, A.m))
        small = ac.AdditiveCode.from_preimage(
            Q, linalg.as_matrix(A.preimage[:cut1], cols=2 * n))
        big = ac.AdditiveCode.from_preimage(
            Q, linalg.as_matrix(A.preimage[:cut2], cols=2 * n))
        assert (ac.min_weight_excluding(A, big)
                >= ac.min_weight_excluding(A, small))


@pytest.mark.parametrize("q", [2, 3])
def test_min_weight_chunked_scan_boundaries(q, monkeypatch):
    # force multi-block scans so skip offsets cross chunk boundaries
    Q = quadratic_field(field(q))
    rng = np.random.default_rng(71 + q)
    monkeypatch.setattr(ac, "_CHUNK", 4)
    for _ in range(15):
        n = int(rng.integers(1, 4))
        A = ac.random_additive_code(Q, n, int(rng.integers(1, 2 * n + 1)), rng)
        rows = A.preimage[: int(rng.integers(0, A.m + 1))]
        B = ac.AdditiveCode.from_preimage(Q, linalg.as_matrix(rows, cols=2 * n))
        expect = oracle_min_weight(A, B)
        assert ac.min_weight_excluding(A, B) == expect
        assert ac.min_weight_excluding(A, B, strategy="partitioned") == expect


def test_min_weight_generator_bound():
    Q = field(9)
    rng = np.random.default_rng(55)
    for _ in range(20):
        C = ac.random_additive_code(Q, 4, int(rng.integers(1, 5)), rng)
        bound = min(int((row != 0).sum()) for row in C.generators)
        assert ac.min_weight(C) <= bound


def test_puncture():
    Q = field(4)
    C = ac.AdditiveCode.from_generators(Q, [[1, 1]])
    assert ac.puncture(C, []) == C
    P = ac.puncture(C, [1])
    assert P.n == 1 and P.generators.tolist() == [[1]]
    drop = ac.AdditiveCode.from_generators(Q, [[1, 0], [1, 1]])
    assert ac.puncture(drop, [1]).m == 1
    with pytest.raises(IndexOutOfRange):
        ac.puncture(C, [5])


def test_linear_code_hermitian():
    Q = field(9)
    D = ac.LinearCode(Q, [[1]])
    assert D.dim == 1
    assert ac.is_hermitian_lcd(D)
    dual = D.hermitian_dual()
    assert dual.dim == 0
    add = D.to_additive()
    assert add.m == 2
    # closure under GF(9)-scalars
    for lam in range(9):
        assert add.contains_word(np.array([Q.mul(lam, 1)]))


def test_linear_hermitian_self_orthogonal():
    Q = field(4)
    D = ac.LinearCode(Q, [[1, 0, 1, 0], [0, 1, 0, 1]])
    assert ac.is_hermitian_self_orthogonal(D)
    assert not ac.is_hermitian_lcd(D)
    assert D.hermitian_radical().dim == 2
    assert D.hermitian_dual().dim == 2


def test_code_file_round_trip(tmp_path):
    Q = field(9)
    rng = np.random.default_rng(3)
    C = ac.random_additive_code(Q, 3, 4, rng)
    text = ac.dump_code(C)
    assert text.startswith("#code q2=9 n=3 m=4")
    assert ac.parse_code(text) == C
    p = tmp_path / "c.code"
    p.write_text(text)
    assert ac.load_code(p) == C


def test_code_file_requires_quadratic_order():
    with pytest.raises(FormatError):
        ac.parse_code("2 1 2\n1 1\n")
