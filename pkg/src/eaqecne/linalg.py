"""Row-reduction subspace algebra over a FieldSpec.

Matrices are 2-D numpy integer arrays of element indices; rows are the only
vector orientation that carries meaning.  Subspaces are identified with the
reduced row echelon form of any generating matrix, so subspace equality is
plain array equality.  Empty matrices (zero rows) are legal values
everywhere and denote the zero subspace.
"""

from __future__ import annotations

import numpy as np

from .errors import AmbientMismatch, FormatError
from .gf import FieldSpec, field

_DT = np.int16


def as_matrix(rows, cols: int | None = None) -> np.ndarray:
    """Coerce to a 2-D int16 matrix; ``rows=[]`` needs ``cols``."""
    M = np.array(rows, dtype=_DT)
    if M.size == 0:
        if cols is None and M.ndim == 2:
            cols = M.shape[1]
        if cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        return M.reshape(0, cols)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    return M


def empty_matrix(cols: int) -> np.ndarray:
    return np.zeros((0, cols), dtype=_DT)


def identity_matrix(n: int) -> np.ndarray:
    return np.eye(n, dtype=_DT)


def rref(F: FieldSpec, mat) -> tuple[np.ndarray, int, tuple[int, ...]]:
    """Reduced row echelon form; returns (matrix, rank, pivot columns)."""
    M = as_matrix(mat).copy()
    rows, cols = M.shape
    ADD, SUB, MUL, INV = F.add_table, F.sub_table, F.mul_table, F.inv_table
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(M[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            M[[r, p]] = M[[p, r]]
        M[r] = MUL[INV[M[r, c]], M[r]]
        for i in range(rows):
            if i != r and M[i, c] != 0:
                M[i] = SUB[M[i], MUL[M[i, c], M[r]]]
        pivots.append(c)
        r += 1
    return M, r, tuple(pivots)


def row_basis(F: FieldSpec, mat) -> np.ndarray:
    """Canonical basis of the row space (RREF with zero rows dropped)."""
    R, rank, _ = rref(F, mat)
    return R[:rank]


def rank(F: FieldSpec, mat) -> int:
    return rref(F, mat)[1]


def kernel(F: FieldSpec, mat) -> np.ndarray:
    """Canonical basis of the right null space {x : M x^T = 0}."""
    M = as_matrix(mat)
    cols = M.shape[1]
    R, rk, pivots = rref(F, M)
    free = [c for c in range(cols) if c not in pivots]
    out = np.zeros((len(free), cols), dtype=_DT)
    for i, fcol in enumerate(free):
        out[i, fcol] = 1
        for j, pcol in enumerate(pivots):
            out[i, pcol] = F.neg(int(R[j, fcol]))
    return row_basis(F, out)


def _check_ambient(a: np.ndarray, b: np.ndarray):
    if a.shape[1] != b.shape[1]:
        raise AmbientMismatch(f"{a.shape[1]} vs {b.shape[1]} columns")


def subspace_sum(F: FieldSpec, A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    _check_ambient(A, B)
    return row_basis(F, np.vstack([A, B]))


def subspace_intersect(F: FieldSpec, A, B) -> np.ndarray:
    """Intersection of row spaces via the kernel of stacked annihilators."""
    A, B = as_matrix(A), as_matrix(B)
    _check_ambient(A, B)
    return kernel(F, np.vstack([kernel(F, A), kernel(F, B)]))


def subspace_contains(F: FieldSpec, A, B) -> bool:
    """True when the row space of A contains the row space of B."""
    A, B = as_matrix(A), as_matrix(B)
    _check_ambient(A, B)
    return rank(F, A) == rank(F, np.vstack([A, B]))


def subspace_eq(F: FieldSpec, A, B) -> bool:
    return np.array_equal(row_basis(F, A), row_basis(F, B))


def form_complement(F: FieldSpec, S, gram) -> np.ndarray:
    """All x with gram(x, s) = 0 for every basis row s.

    ``gram`` must be an F_q-bilinear callback taking two index vectors and
    returning an element index, so the constraint matrix can be assembled
    from its values on unit vectors.
    """
    S = as_matrix(S)
    n = S.shape[1]
    if S.shape[0] == 0:
        return identity_matrix(n)
    eye = identity_matrix(n)
    A = np.array([[gram(eye[j], s) for j in range(n)] for s in S], dtype=_DT)
    return kernel(F, A)


def random_matrix(F: FieldSpec, rows: int, cols: int, rng) -> np.ndarray:
    return rng.integers(0, F.order, size=(rows, cols), dtype=np.int64).astype(_DT)


def random_subspace(F: FieldSpec, dim: int, cols: int, rng) -> np.ndarray:
    """Canonical basis of a uniformly-ish random subspace of given dimension."""
    while True:
        M = random_matrix(F, dim, cols, rng)
        B = row_basis(F, M)
        if B.shape[0] == dim:
            return B


# ---------------------------------------------------------------------------
# shared matrix text format
# ---------------------------------------------------------------------------


def dump_matrix(F: FieldSpec, mat, comments: tuple[str, ...] = ()) -> str:
    """Render the shared text format: `q rows cols` then one row per line."""
    M = as_matrix(mat)
    lines = [f"#{c}" for c in comments]
    lines.append(f"{F.order} {M.shape[0]} {M.shape[1]}")
    for row in M:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> tuple[FieldSpec, np.ndarray]:
    """Parse the shared text format; blank lines and # comments are ignored."""
    data = [ln for ln in (s.strip() for s in text.splitlines())
            if ln and not ln.startswith("#")]
    if not data:
        raise FormatError("no header line")
    head = data[0].split()
    if len(head) != 3:
        raise FormatError(f"header must be 'q rows cols', got {data[0]!r}")
    try:
        order, rows, cols = (int(t) for t in head)
    except ValueError as exc:
        raise FormatError(f"non-integer header {data[0]!r}") from exc
    try:
        F = field(order)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    body = data[1:]
    if len(body) != rows:
        raise FormatError(f"expected {rows} rows, found {len(body)}")
    out = np.zeros((rows, cols), dtype=_DT)
    for i, line in enumerate(body):
        parts = line.split()
        if len(parts) != cols:
            raise FormatError(f"row {i}: expected {cols} entries, got {len(parts)}")
        for j, tok in enumerate(parts):
            try:
                v = int(tok)
            except ValueError as exc:
                raise FormatError(f"row {i}: bad entry {tok!r}") from exc
            if not 0 <= v < order:
                raise FormatError(f"row {i}: entry {v} outside [0, {order})")
            out[i, j] = v
    return F, out


def load_matrix(path) -> tuple[FieldSpec, np.ndarray]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read())
