"""Additive codes over GF(q^2): forms, duals, radicals, weights, puncturing.

An additive code of length n and size q^m is the F_q-span of m generators in
GF(q^2)^n.  Codes are canonicalized through the reduced row echelon form of
their 2n-column preimage under the basis map from :mod:`eaqecne.symplectic`,
so two codes are equal exactly when their canonical preimages match.

Form conventions.  The Hermitian product is sum_j u_j * conj(v_j).  The
trace form is the relative trace of the Hermitian value and is symmetric;
the alternating form divides the antisymmetrized Hermitian value by
beta^2 - beta^(2q) and pulls back to the symplectic form exactly, which the
trace form does only in characteristic 2.  Structural computations
(radicals, decompositions, code parameters) therefore default to the
alternating form throughout.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import (BudgetExceeded, DimensionMismatch, FormatError,
                     IndexOutOfRange, ParityViolation, PreconditionFailed)
from .gf import FieldSpec
from . import linalg, symplectic as sp

FORMS = ("hermitian", "trace", "alternating")
DUAL_FORMS = ("trace", "alternating")

DEFAULT_BUDGET = 1 << 30
_CHUNK = 1 << 16


def inner(Q: FieldSpec, u, v, form: str = "hermitian") -> int:
    """Inner product of two GF(q^2) vectors; trace/alternating values are
    returned as base-field indices."""
    Q._require_quadratic()
    u = np.atleast_1d(np.asarray(u))
    v = np.atleast_1d(np.asarray(v))
    if u.shape != v.shape:
        raise DimensionMismatch(f"{u.shape} vs {v.shape}")
    h = 0
    for a, b in zip(u, v):
        h = Q.add(h, Q.mul(int(a), Q.conjugate(int(b))))
    if form == "hermitian":
        return h
    if form == "trace":
        return Q.rel_trace(h)
    if form == "alternating":
        alt = Q.div(Q.sub(h, Q.conjugate(h)), Q.alt_normalizer)
        assert alt < Q.base.order
        return alt
    raise ValueError(f"unknown form {form!r}")


class AdditiveCode:
    """F_q-linear subgroup of GF(q^2)^n, canonicalized via its preimage."""

    __slots__ = ("field", "n", "preimage", "generators")

    def __init__(self, field: FieldSpec, n: int, preimage: np.ndarray):
        field._require_quadratic()
        if preimage.shape[1] != 2 * n:
            raise DimensionMismatch(
                f"preimage has {preimage.shape[1]} columns, expected {2 * n}")
        self.field = field
        self.n = n
        self.preimage = preimage
        self.generators = (sp.phi(field, preimage) if preimage.shape[0]
                           else linalg.empty_matrix(n))

    @classmethod
    def from_preimage(cls, field: FieldSpec, preimage) -> "AdditiveCode":
        pre = linalg.as_matrix(preimage)
        return cls(field, pre.shape[1] // 2, linalg.row_basis(field.base, pre))

    @classmethod
    def from_generators(cls, field: FieldSpec, gens, n: int | None = None) -> "AdditiveCode":
        G = linalg.as_matrix(gens, cols=n)
        if (G >= field.order).any():
            raise FormatError(f"generator entry outside GF({field.order})")
        pre = (sp.phi_inv(field, G) if G.shape[0]
               else linalg.empty_matrix(2 * G.shape[1]))
        return cls.from_preimage(field, pre)

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> "AdditiveCode":
        return cls(field, n, linalg.empty_matrix(2 * n))

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> "AdditiveCode":
        return cls(field, n, linalg.identity_matrix(2 * n))

    @property
    def m(self) -> int:
        """Size exponent: |C| = q^m."""
        return self.preimage.shape[0]

    @property
    def base_field(self) -> FieldSpec:
        return self.field.base

    def contains(self, other: "AdditiveCode") -> bool:
        self._check_peer(other)
        return linalg.subspace_contains(self.base_field, self.preimage,
                                        other.preimage)

    def contains_word(self, w) -> bool:
        pre = sp.phi_inv(self.field, np.asarray(w))
        return linalg.subspace_contains(self.base_field, self.preimage,
                                        pre.reshape(1, -1))

    def _check_peer(self, other: "AdditiveCode"):
        if other.field is not self.field or other.n != self.n:
            raise DimensionMismatch("codes live in different ambient spaces")

    def __eq__(self, other):
        return (isinstance(other, AdditiveCode) and other.field is self.field
                and other.n == self.n
                and np.array_equal(other.preimage, self.preimage))

    def __hash__(self):
        return hash((id(self.field), self.n, self.preimage.tobytes()))

    def __repr__(self):
        return f"AdditiveCode(q2={self.field.order}, n={self.n}, m={self.m})"


def random_additive_code(Q: FieldSpec, n: int, m: int, rng) -> AdditiveCode:
    return AdditiveCode.from_preimage(
        Q, linalg.random_subspace(Q.base, m, 2 * n, rng))


# ---------------------------------------------------------------------------
# duals, radicals, decomposition
# ---------------------------------------------------------------------------


def dual(code: AdditiveCode, form: str = "alternating") -> AdditiveCode:
    """Dual under the trace or alternating form, via the generic
    bilinear-complement engine on the preimage space."""
    if form not in DUAL_FORMS:
        raise ValueError(f"dual is defined for forms {DUAL_FORMS}, got {form!r}")
    Q = code.field

    def gram(x, y):
        return inner(Q, sp.phi(Q, x), sp.phi(Q, y), form)

    pre = linalg.form_complement(Q.base, code.preimage, gram)
    return AdditiveCode(Q, code.n, pre)


def radical(code: AdditiveCode, form: str = "alternating") -> AdditiveCode:
    pre = linalg.subspace_intersect(code.base_field, code.preimage,
                                    dual(code, form).preimage)
    return AdditiveCode(code.field, code.n, pre)


@dataclass(frozen=True)
class CodeDecomposition:
    """Split C = radical ⊕ complement with the complement form-nondegenerate."""

    radical: AdditiveCode
    complement: AdditiveCode
    l: int
    c: int


def radical_decompose(code: AdditiveCode, form: str = "alternating") -> CodeDecomposition:
    """Split off the radical; the complement is always a complementary-dual code.

    The alternating form routes through the symplectic Gram-Schmidt of the
    preimage; the trace form extends a radical basis to a basis of the code.
    Either way the complement's dimension must be even for the ebit count c
    to make sense.
    """
    Q, F = code.field, code.base_field
    if form == "alternating":
        dec = sp.decompose(F, code.preimage)
        rad = AdditiveCode(Q, code.n, linalg.row_basis(F, dec.radical))
        comp = AdditiveCode.from_preimage(Q, dec.pair_matrix()) \
            if dec.c else AdditiveCode.zero(Q, code.n)
        l, c2 = dec.l, 2 * dec.c
    elif form == "trace":
        rad = radical(code, "trace")
        picked = rad.preimage
        comp_rows = []
        for row in code.preimage:
            cand = np.vstack([picked, row.reshape(1, -1)])
            if linalg.rank(F, cand) > picked.shape[0]:
                picked = cand
                comp_rows.append(row)
        comp = (AdditiveCode.from_preimage(Q, np.array(comp_rows, dtype=np.int16))
                if comp_rows else AdditiveCode.zero(Q, code.n))
        l, c2 = rad.m, len(comp_rows)
    else:
        raise ValueError(f"decomposition is defined for forms {DUAL_FORMS}")
    if c2 % 2:
        raise ParityViolation(
            f"complement of the radical has odd dimension {c2}")
    return CodeDecomposition(radical=rad, complement=comp, l=l, c=c2 // 2)


def self_orthogonality_witness(code: AdditiveCode, form: str = "alternating"):
    """First generator pair with nonzero form value, or None if self-orthogonal."""
    G = code.generators
    for i in range(G.shape[0]):
        for j in range(i, G.shape[0]):
            if inner(code.field, G[i], G[j], form) != 0:
                return (i, j)
    return None


def is_self_orthogonal(code: AdditiveCode, form: str = "alternating") -> bool:
    return self_orthogonality_witness(code, form) is None


def is_acd(code: AdditiveCode, form: str = "alternating") -> bool:
    return radical(code, form).m == 0


def is_dual_containing(code: AdditiveCode, form: str = "alternating") -> bool:
    return code.contains(dual(code, form))


# ---------------------------------------------------------------------------
# linear codes over GF(q^2) and Hermitian duality
# ---------------------------------------------------------------------------


class LinearCode:
    """GF(q^2)-linear code, canonicalized by RREF over GF(q^2)."""

    __slots__ = ("field", "n", "matrix")

    def __init__(self, field: FieldSpec, gens, n: int | None = None):
        field._require_quadratic()
        G = linalg.as_matrix(gens, cols=n)
        if (G >= field.order).any():
            raise FormatError(f"generator entry outside GF({field.order})")
        self.field = field
        self.n = G.shape[1]
        self.matrix = linalg.row_basis(field, G)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def to_additive(self) -> AdditiveCode:
        """The same set viewed additively: F_q-span of {g, beta*g}."""
        if self.dim == 0:
            return AdditiveCode.zero(self.field, self.n)
        scaled = self.field.mul_table[self.field.beta, self.matrix]
        return AdditiveCode.from_generators(
            self.field, np.vstack([self.matrix, scaled]))

    def hermitian_dual(self) -> "LinearCode":
        conj = self.field.conj_table[self.matrix] if self.dim else self.matrix
        return LinearCode(self.field, linalg.kernel(self.field,
                          linalg.as_matrix(conj, cols=self.n)), n=self.n)

    def hermitian_radical(self) -> "LinearCode":
        pre = linalg.subspace_intersect(self.field, self.matrix,
                                        self.hermitian_dual().matrix)
        return LinearCode(self.field, pre, n=self.n)

    def __eq__(self, other):
        return (isinstance(other, LinearCode) and other.field is self.field
                and other.n == self.n and np.array_equal(other.matrix, self.matrix))

    def __hash__(self):
        return hash((id(self.field), self.n, self.matrix.tobytes()))

    def __repr__(self):
        return f"LinearCode(q2={self.field.order}, n={self.n}, k={self.dim})"


def hermitian_witness(code: LinearCode):
    G = code.matrix
    for i in range(G.shape[0]):
        for j in range(i, G.shape[0]):
            if inner(code.field, G[i], G[j], "hermitian") != 0:
                return (i, j)
    return None


def is_hermitian_self_orthogonal(code: LinearCode) -> bool:
    return hermitian_witness(code) is None


def is_hermitian_lcd(code: LinearCode) -> bool:
    return code.hermitian_radical().dim == 0


# ---------------------------------------------------------------------------
# minimum weight by exhaustive enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MinWeightResult:
    weight: int        # ambient length + 1 means "undefined" (empty word set)
    examined: int

    def is_undefined(self, n: int) -> bool:
        return self.weight > n


def _combine(Q: FieldSpec, gens: np.ndarray, digits) -> np.ndarray:
    n = gens.shape[1]
    w = np.zeros(n, dtype=np.int16)
    for d, g in zip(digits, gens):
        if d:
            w = Q.add_table[w, Q.mul_table[d, g]]
    return w


def _suffix_block(Q: FieldSpec, gens: np.ndarray) -> np.ndarray:
    """All span words of `gens` in odometer order (last generator fastest)."""
    q = Q.base.order
    n = gens.shape[1]
    W = np.zeros((1, n), dtype=np.int16)
    for g in gens:
        scaled = Q.mul_table[np.arange(q)[:, None], g[None, :]]
        W = Q.add_table[W[:, None, :], scaled[None, :, :]].reshape(-1, n)
    return W


def _scan_span(Q, gens, shift, global_offset, skip_below, chunk=None):
    """Min weight over {shift + span(gens)}, skipping global odometer
    indices below `skip_below`.  Returns (best, examined)."""
    if chunk is None:
        chunk = _CHUNK
    q = Q.base.order
    m, n = gens.shape
    s = 0
    while s < m and q ** (s + 1) <= chunk:
        s += 1
    suffix = _suffix_block(Q, gens[m - s:])
    if shift is not None:
        suffix = Q.add_table[suffix, np.asarray(shift, dtype=np.int16)[None, :]]
    block_len = suffix.shape[0]
    best = n + 1
    examined = 0
    for ordinal, digits in enumerate(itertools.product(range(q), repeat=m - s)):
        start = global_offset + ordinal * block_len
        if start + block_len <= skip_below:
            continue
        block = suffix
        if digits and any(digits):
            block = Q.add_table[block, _combine(Q, gens[:m - s], digits)[None, :]]
        if start < skip_below:
            block = block[skip_below - start:]
        weights = (block != 0).sum(axis=1)
        examined += block.shape[0]
        if weights.size:
            best = min(best, int(weights.min()))
        if best <= 1:
            break
    return best, examined


def _exclusion_basis(outer: AdditiveCode, excluded: AdditiveCode):
    """Generators of `outer` ordered so the trailing block spans `excluded`."""
    F = outer.base_field
    picked = excluded.preimage
    ext_rows = []
    for row in outer.preimage:
        cand = np.vstack([picked, row.reshape(1, -1)])
        if linalg.rank(F, cand) > picked.shape[0]:
            picked = cand
            ext_rows.append(row)
    ext = (np.array(ext_rows, dtype=np.int16) if ext_rows
           else linalg.empty_matrix(2 * outer.n))
    pre = np.vstack([ext, excluded.preimage])
    return sp.phi(outer.field, pre) if pre.shape[0] else linalg.empty_matrix(outer.n)


def min_weight_excluding_detail(outer: AdditiveCode, excluded: AdditiveCode,
                                *, budget: int = DEFAULT_BUDGET,
                                strategy: str = "full",
                                threads: int = 1) -> MinWeightResult:
    """Minimum Hamming weight over words of `outer` not in `excluded`."""
    outer._check_peer(excluded)
    if not outer.contains(excluded):
        raise PreconditionFailed("excluded code is not contained in the outer code")
    q = outer.base_field.order
    n = outer.n
    total = q ** outer.m
    skip = q ** excluded.m
    required = total - skip
    if required == 0:
        return MinWeightResult(weight=n + 1, examined=0)
    if required > budget:
        raise BudgetExceeded(required, budget)
    gens = _exclusion_basis(outer, excluded)
    if strategy == "full":
        best, examined = _scan_span(outer.field, gens, None, 0, skip)
    elif strategy == "partitioned":
        best, examined = _scan_partitioned(outer.field, gens, skip, threads)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return MinWeightResult(weight=best, examined=examined)


def _scan_partitioned(Q, gens, skip_below, threads):
    """Partition by the first coefficient digit and merge the minima."""
    q = Q.base.order
    m, n = gens.shape
    if m == 0:
        return n + 1, 0
    part_len = q ** (m - 1)
    rest = gens[1:]

    def one(digit: int):
        shift = Q.mul_table[digit, gens[0]] if digit else None
        return _scan_span(Q, rest, shift, digit * part_len, skip_below)

    results = []
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one, range(q)))
    else:
        best_so_far = n + 1
        for d in range(q):
            r = one(d)
            results.append(r)
            best_so_far = min(best_so_far, r[0])
            if best_so_far <= 1:
                break
    best = min(r[0] for r in results)
    examined = sum(r[1] for r in results)
    return best, examined


def min_weight_excluding(outer: AdditiveCode, excluded: AdditiveCode, *,
                         budget: int = DEFAULT_BUDGET, strategy: str = "full",
                         threads: int = 1) -> int:
    return min_weight_excluding_detail(outer, excluded, budget=budget,
                                       strategy=strategy, threads=threads).weight


def min_weight_detail(code: AdditiveCode, *, budget: int = DEFAULT_BUDGET,
                      strategy: str = "full", threads: int = 1) -> MinWeightResult:
    return min_weight_excluding_detail(
        code, AdditiveCode.zero(code.field, code.n),
        budget=budget, strategy=strategy, threads=threads)


def min_weight(code: AdditiveCode, *, budget: int = DEFAULT_BUDGET,
               strategy: str = "full", threads: int = 1) -> int:
    return min_weight_detail(code, budget=budget, strategy=strategy,
                             threads=threads).weight


# ---------------------------------------------------------------------------
# puncturing
# ---------------------------------------------------------------------------


def puncture(code: AdditiveCode, coords) -> AdditiveCode:
    """Delete the 0-based coordinates from every generator and re-canonicalize."""
    coords = sorted(set(int(c) for c in coords))
    for c in coords:
        if not 0 <= c < code.n:
            raise IndexOutOfRange(f"coordinate {c} outside [0, {code.n})")
    keep = [j for j in range(code.n) if j not in coords]
    if code.m == 0:
        return AdditiveCode.zero(code.field, len(keep))
    return AdditiveCode.from_generators(code.field, code.generators[:, keep],
                                        n=len(keep))


def puncture_linear(code: LinearCode, coords) -> LinearCode:
    coords = sorted(set(int(c) for c in coords))
    for c in coords:
        if not 0 <= c < code.n:
            raise IndexOutOfRange(f"coordinate {c} outside [0, {code.n})")
    keep = [j for j in range(code.n) if j not in coords]
    return LinearCode(code.field, code.matrix[:, keep], n=len(keep))


# ---------------------------------------------------------------------------
# code files
# ---------------------------------------------------------------------------


def dump_code(code: AdditiveCode) -> str:
    header = f"code q2={code.field.order} n={code.n} m={code.m}"
    return linalg.dump_matrix(code.field, code.generators, comments=(header,))


def parse_code(text: str) -> AdditiveCode:
    F, M = linalg.parse_matrix(text)
    if not F.is_quadratic:
        raise FormatError(
            f"code files need a quadratic-extension field order, got {F.order}")
    return AdditiveCode.from_generators(F, M, n=M.shape[1])


def load_code(path) -> AdditiveCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code(fh.read())
