"""Symplectic geometry of F_q^{2n}.

Vectors are length-2n index arrays laid out as the concatenation (a|b) of
the two halves; subspaces are row-basis matrices with 2n columns as in
:mod:`eaqecne.linalg`.  The map to GF(q^2)^n sends a coordinate pair
(a_j, b_j) to beta*a_j + beta^q*b_j and is applied through a per-field
lookup table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .gf import FieldSpec
from . import linalg


def _halves(v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if v.shape[-1] % 2:
        raise DimensionMismatch(f"odd vector length {v.shape[-1]}")
    n = v.shape[-1] // 2
    return v[..., :n], v[..., n:]


def symp_inner(F: FieldSpec, u, v) -> int:
    """<(a|b),(a'|b')> = a.b' - b.a'."""
    u = np.asarray(u)
    v = np.asarray(v)
    if u.shape != v.shape:
        raise DimensionMismatch(f"{u.shape} vs {v.shape}")
    ua, ub = _halves(u)
    va, vb = _halves(v)
    return F.sub(F.dot(ua, vb), F.dot(ub, va))


def symp_weight(u) -> int:
    """Number of coordinates j with (a_j, b_j) != (0, 0)."""
    a, b = _halves(np.asarray(u))
    return int(((a != 0) | (b != 0)).sum())


def _lambda_rows(F: FieldSpec, basis: np.ndarray) -> np.ndarray:
    """Map each row (a|b) to (b|-a); then <x, row> is a plain dot product."""
    a, b = _halves(basis)
    return np.hstack([b, F.neg_table[a]])


def symp_dual(F: FieldSpec, basis) -> np.ndarray:
    """Canonical basis of {x : <x, s> = 0 for all s in the row space}."""
    basis = linalg.as_matrix(basis)
    if basis.shape[0] == 0:
        return linalg.identity_matrix(basis.shape[1])
    return linalg.kernel(F, _lambda_rows(F, basis))


def is_totally_isotropic(F: FieldSpec, basis) -> bool:
    basis = linalg.as_matrix(basis)
    return linalg.subspace_contains(F, symp_dual(F, basis), basis)


@dataclass(frozen=True)
class HyperbolicDecomposition:
    """Radical basis plus hyperbolic pairs splitting a subspace.

    The radical spans the intersection with the symplectic dual; each pair
    (e, f) satisfies <e,f> = 1 and is orthogonal to everything else in the
    output.  Only the counts and the Gram conditions are canonical; the
    particular basis depends on the documented row-order scan.
    """

    radical: np.ndarray
    pairs: tuple[tuple[np.ndarray, np.ndarray], ...]

    @property
    def l(self) -> int:
        return self.radical.shape[0]

    @property
    def c(self) -> int:
        return len(self.pairs)

    def pair_matrix(self) -> np.ndarray:
        cols = self.radical.shape[1]
        rows = [v for pair in self.pairs for v in pair]
        return np.array(rows, dtype=self.radical.dtype).reshape(len(rows), cols)


def decompose(F: FieldSpec, basis) -> HyperbolicDecomposition:
    """Symplectic Gram-Schmidt with row-order tie-breaking.

    Scans for the first basis vector with a non-orthogonal partner, rescales
    the partner so the pair has inner product 1, projects the remaining
    vectors off the pair, and repeats; leftovers span the radical.
    """
    work = [row.copy() for row in linalg.row_basis(F, basis)]
    pairs = []
    while True:
        hit = None
        for i in range(len(work)):
            for j in range(len(work)):
                if i != j and symp_inner(F, work[i], work[j]) != 0:
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            break
        i, j = hit
        e = work[i]
        f = F.mul_table[F.inv(symp_inner(F, e, work[j])), work[j]]
        rest = [work[k] for k in range(len(work)) if k not in (i, j)]
        projected = []
        for v in rest:
            ce = symp_inner(F, v, f)
            cf = symp_inner(F, v, e)
            v = F.sub_table[v, F.mul_table[ce, e]]
            v = F.add_table[v, F.mul_table[cf, f]]
            projected.append(v)
        pairs.append((e, f))
        work = projected
    cols = linalg.as_matrix(basis).shape[1]
    radical = (np.array(work, dtype=np.int16) if work
               else linalg.empty_matrix(cols))
    return HyperbolicDecomposition(radical=radical, pairs=tuple(pairs))


# ---------------------------------------------------------------------------
# the additive bijection F_q^{2n} <-> GF(q^2)^n
# ---------------------------------------------------------------------------


def phi(Q: FieldSpec, preimage) -> np.ndarray:
    """Apply (a|b) -> beta*a + beta^q*b coordinatewise; Q must be GF(q^2)."""
    Q._require_quadratic()
    q = Q.base.order
    v = np.asarray(preimage)
    a, b = _halves(v)
    return Q.phi_table[a.astype(np.int64) + q * b.astype(np.int64)].astype(np.int16)


def phi_inv(Q: FieldSpec, image) -> np.ndarray:
    Q._require_quadratic()
    q = Q.base.order
    w = np.asarray(image)
    pair = Q.phi_inv_table[w].astype(np.int64)
    return np.concatenate([pair % q, pair // q], axis=-1).astype(np.int16)


def dump_preimage(F: FieldSpec, basis, extra_comments: tuple[str, ...] = ()) -> str:
    """Serialize 2n-column rows in the shared matrix format with the
    ambient-size comment header."""
    basis = linalg.as_matrix(basis)
    comments = (f"ambient n={basis.shape[1] // 2}",) + tuple(extra_comments)
    return linalg.dump_matrix(F, basis, comments=comments)


# ---------------------------------------------------------------------------
# randomized generators used by tests and verification commands
# ---------------------------------------------------------------------------


def random_isotropic_basis(F: FieldSpec, n: int, m: int, rng) -> np.ndarray:
    """Basis of a random m-dimensional totally isotropic subspace of F_q^{2n}."""
    if not 0 <= m <= n:
        raise ValueError(f"isotropic dimension {m} outside [0, {n}]")
    basis = linalg.empty_matrix(2 * n)
    while basis.shape[0] < m:
        # anything orthogonal to an isotropic space extends it isotropically
        pool = symp_dual(F, basis) if basis.shape[0] else linalg.identity_matrix(2 * n)
        coeffs = rng.integers(0, F.order, size=pool.shape[0])
        v = np.zeros(2 * n, dtype=np.int16)
        for c, row in zip(coeffs, pool):
            v = F.add_table[v, F.mul_table[int(c), row]]
        cand = linalg.row_basis(F, np.vstack([basis, v.reshape(1, -1)]))
        if cand.shape[0] == basis.shape[0] + 1:
            basis = cand
    return basis
