"""Code parameters, matching classification, and combination constructions.

An additive code C = (n, q^m) over GF(q^2) splits as radical ⊕ complement
with exponents l and 2c; it EA-stabilizes an [[n, k, d; c]]_q code with
k = n - c - l, consuming c ebits.  Self-orthogonal codes are the c = 0
special case and stabilize ordinary [[n, n-m, d]]_q codes.  Distances
minimize the Hamming weight over the dual of the full code, excluding the
code itself (stabilizer case) or just its radical (EA case).

A combination pairs Alice's EA code with a stabilizer code Bob uses to
protect the c shared ebits on his side; Bob's code matches when it has at
least c logical qudits, properly matches when it has exactly c, and the
pair is faithful when Bob's distance is at least 3.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (DimensionMismatch, FieldMismatch, InsufficientProtection,
                     NotSelfOrthogonal, PreconditionFailed, RangeError)
from .gf import FieldSpec
from . import addcodes as ac
from . import linalg

DEFAULT_BUDGET = ac.DEFAULT_BUDGET


def _fmt_d(d) -> str:
    return "?" if d is None else str(d)


@dataclass(frozen=True)
class QECCParams:
    """Stabilizer-code parameters [[n, k, d]]_q; d may be unknown."""

    q: int
    n: int
    k: int
    d: int | None = None

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise RangeError(f"k={self.k} outside [0, {self.n}]")
        if self.d is not None and not 1 <= self.d <= self.n:
            raise RangeError(f"d={self.d} outside [1, {self.n}]")

    def __str__(self):
        if self.d is None:
            return f"[[{self.n},{self.k}]]_{self.q}"
        return f"[[{self.n},{self.k},{self.d}]]_{self.q}"


@dataclass(frozen=True)
class EAQECCParams:
    """EA-code parameters [[n, k, d; c]]_q; d may be unknown or undefined."""

    q: int
    n: int
    k: int
    c: int
    d: int | None = None

    def __post_init__(self):
        if self.c < 0 or self.k < 0:
            raise RangeError(f"c={self.c}, k={self.k} must be nonnegative")
        if self.n - self.c - self.k < 0:
            raise RangeError(
                f"[[{self.n},{self.k};{self.c}]] forces negative isotropic dimension")

    @property
    def l(self) -> int:
        """Isotropic exponent forced by k = n - c - l."""
        return self.n - self.c - self.k

    def __str__(self):
        if self.d is None:
            return f"[[{self.n},{self.k};{self.c}]]_{self.q}"
        return f"[[{self.n},{self.k},{self.d};{self.c}]]_{self.q}"


@dataclass(frozen=True)
class MatchClassification:
    matching: bool
    faithful: bool
    properly_matching: bool

    @property
    def label(self) -> str:
        if not self.matching:
            return "none"
        head = "properly-matching" if self.properly_matching else "matching"
        return head + "+faithful" if self.faithful else head

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class CombinationParams:
    """Alice's EA code paired with Bob's ebit-protection code."""

    alice: EAQECCParams
    bob: QECCParams
    match: MatchClassification

    def __str__(self):
        return f"{self.alice} + {self.bob}"


# ---------------------------------------------------------------------------
# parameter derivation from codes
# ---------------------------------------------------------------------------


def stabilizer_params(code: ac.AdditiveCode, compute_d: bool = True, *,
                      budget: int = DEFAULT_BUDGET) -> QECCParams:
    """Parameters of the stabilizer code of a self-orthogonal additive code."""
    witness = ac.self_orthogonality_witness(code)
    if witness is not None:
        raise NotSelfOrthogonal(
            f"generators {witness[0]} and {witness[1]} have nonzero form value")
    q = code.base_field.order
    d = None
    if compute_d:
        w = ac.min_weight_excluding(ac.dual(code), code, budget=budget)
        d = None if w > code.n else w
    return QECCParams(q=q, n=code.n, k=code.n - code.m, d=d)


def eaqec_params(code: ac.AdditiveCode, compute_d: bool = True, *,
                 budget: int = DEFAULT_BUDGET) -> EAQECCParams:
    """EA parameters of an arbitrary additive code via its decomposition."""
    dec = ac.radical_decompose(code)
    q = code.base_field.order
    k = code.n - dec.c - dec.l
    d = None
    if compute_d:
        w = ac.min_weight_excluding(ac.dual(code), dec.radical, budget=budget)
        d = None if w > code.n else w
    return EAQECCParams(q=q, n=code.n, k=k, c=dec.c, d=d)


def classify_match(alice: EAQECCParams, bob: QECCParams) -> MatchClassification:
    if alice.q != bob.q:
        raise FieldMismatch(f"q={alice.q} vs q={bob.q}")
    matching = bob.k >= alice.c
    return MatchClassification(
        matching=matching,
        faithful=matching and bob.d is not None and bob.d >= 3,
        properly_matching=matching and bob.k == alice.c,
    )


def combine_neb(alice_code: ac.AdditiveCode, bob_code: ac.AdditiveCode,
                compute_d: bool = True, *,
                budget: int = DEFAULT_BUDGET) -> CombinationParams:
    """Pair an arbitrary EA-stabilizer image with a self-orthogonal Bob code.

    Bob's code must be self-orthogonal and leave him at least c logical
    qudits, i.e. c <= m - r.
    """
    if alice_code.base_field is not bob_code.base_field:
        raise FieldMismatch("Alice and Bob use different base fields")
    alice = eaqec_params(alice_code, compute_d, budget=budget)
    try:
        bob = stabilizer_params(bob_code, compute_d, budget=budget)
    except NotSelfOrthogonal as exc:
        raise NotSelfOrthogonal(f"Bob's code: {exc}") from exc
    if alice.c > bob.k:
        raise InsufficientProtection(
            f"c={alice.c} ebits exceed Bob's k={bob.k} logical qudits")
    return CombinationParams(alice=alice, bob=bob,
                             match=classify_match(alice, bob))


def linear_formulation(code: ac.LinearCode, bob: ac.LinearCode,
                       compute_d: bool = True, *,
                       budget: int = DEFAULT_BUDGET) -> CombinationParams:
    """Combination from linear codes: Alice any [n,u], Bob Hermitian
    self-orthogonal [m,v]; c = u - r with r the Hermitian radical dimension."""
    if code.field is not bob.field:
        raise FieldMismatch("Alice and Bob use different fields")
    r = code.hermitian_radical().dim
    u = code.dim
    c = u - r
    k = code.n - c - 2 * r
    if ac.hermitian_witness(bob) is not None:
        raise NotSelfOrthogonal("Bob's linear code is not Hermitian self-orthogonal")
    alice = eaqec_params(code.to_additive(), compute_d, budget=budget)
    assert (alice.c, alice.k, alice.l) == (c, k, 2 * r), \
        "additive view disagrees with the Hermitian bookkeeping"
    bob_params = stabilizer_params(bob.to_additive(), compute_d, budget=budget)
    if alice.c > bob_params.k:
        raise InsufficientProtection(
            f"c={alice.c} ebits exceed Bob's k={bob_params.k} logical qudits")
    return CombinationParams(alice=alice, bob=bob_params,
                             match=classify_match(alice, bob_params))


# ---------------------------------------------------------------------------
# block construction: stack a self-orthogonal code over an appended
# complementary-dual block
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CombinationReport:
    """Ground-truth measurements for one block construction instance."""

    params: EAQECCParams
    l: int
    c: int
    d1: int | None                   # min weight of the left-block sum code
    d2: int | None                   # min weight of the appended block code
    complement_min_weight: int | None
    distance_claim_holds: bool | None   # measured d >= d1 + d2
    radical_is_top_block: bool
    c_identity_value: int            # (n + m) - l - k, the claimed identity
    enumerated: int

    def lines(self) -> list[str]:
        out = [
            f"params={self.params}",
            f"l={self.l}",
            f"c={self.c}",
            f"d1={_fmt_d(self.d1)}",
            f"d2={_fmt_d(self.d2)}",
            f"complement_min_weight={_fmt_d(self.complement_min_weight)}",
            f"distance_claim_d_ge_d1_plus_d2="
            + ("?" if self.distance_claim_holds is None
               else str(self.distance_claim_holds).lower()),
            f"radical_is_top_block={str(self.radical_is_top_block).lower()}",
            f"c_identity_value={self.c_identity_value}",
            f"c_identity_holds={str(self.c_identity_value == self.c).lower()}",
            f"enumerated={self.enumerated}",
        ]
        return out


def combine_construct(field: FieldSpec, G, G2, E, compute_d: bool = True, *,
                      budget: int = DEFAULT_BUDGET
                      ) -> tuple[ac.AdditiveCode, CombinationReport]:
    """Build the (n+m)-length code with rows (G|0) and (G2|E) and measure it.

    Preconditions checked: G and G2 share a length n, G2 and E share a row
    count, span(G) is contained in the dual of span(G)+span(G2), and (G2|E)
    spans a complementary-dual code.
    """
    field._require_quadratic()
    G = linalg.as_matrix(G)
    G2 = linalg.as_matrix(G2)
    E = linalg.as_matrix(E)
    if G.shape[1] != G2.shape[1]:
        raise DimensionMismatch(
            f"G has length {G.shape[1]}, G2 has length {G2.shape[1]}")
    if G2.shape[0] != E.shape[0]:
        raise DimensionMismatch(
            f"G2 has {G2.shape[0]} rows, E has {E.shape[0]}")
    n, m = G.shape[1], E.shape[1]
    left = ac.AdditiveCode.from_generators(field, G, n=n)
    summed = ac.AdditiveCode.from_generators(field, np.vstack([G, G2]), n=n)
    if not ac.dual(left).contains(summed):
        raise PreconditionFailed(
            "span(G)+span(G2) is not contained in the dual of span(G)")
    appended = ac.AdditiveCode.from_generators(
        field, np.hstack([G2, E]), n=n + m)
    if not ac.is_acd(appended):
        raise PreconditionFailed("(G2|E) does not generate a complementary-dual code")
    top = np.hstack([G, np.zeros((G.shape[0], m), dtype=G.dtype)])
    combined = ac.AdditiveCode.from_generators(
        field, np.vstack([top, np.hstack([G2, E])]), n=n + m)

    dec = ac.radical_decompose(combined)
    enumerated = 0
    d = d1 = d2 = comp_w = None
    claim = None
    if compute_d:
        r0 = ac.min_weight_excluding_detail(ac.dual(combined), dec.radical,
                                            budget=budget)
        r1 = ac.min_weight_detail(summed, budget=budget)
        block = ac.AdditiveCode.from_generators(field, E, n=m)
        r2 = ac.min_weight_detail(block, budget=budget)
        r3 = ac.min_weight_detail(appended, budget=budget)
        enumerated = r0.examined + r1.examined + r2.examined + r3.examined
        d = None if r0.is_undefined(n + m) else r0.weight
        d1 = None if r1.is_undefined(n) else r1.weight
        d2 = None if r2.is_undefined(m) else r2.weight
        comp_w = None if r3.is_undefined(n + m) else r3.weight
        if d is not None and d1 is not None and d2 is not None:
            claim = d >= d1 + d2
    params = EAQECCParams(q=field.base.order, n=n + m,
                          k=(n + m) - dec.c - dec.l, c=dec.c, d=d)
    top_code = ac.AdditiveCode.from_generators(field, top, n=n + m)
    report = CombinationReport(
        params=params,
        l=dec.l,
        c=dec.c,
        d1=d1,
        d2=d2,
        complement_min_weight=comp_w,
        distance_claim_holds=claim,
        radical_is_top_block=(dec.radical == top_code),
        c_identity_value=(n + m) - dec.l - params.k,
        enumerated=enumerated,
    )
    return combined, report


# ---------------------------------------------------------------------------
# puncturing a Hermitian self-orthogonal code into an EA-stabilizer
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PunctureReport:
    params: EAQECCParams         # measured on the punctured code
    requested_c: int
    achieved_c: int
    claimed_n: int               # N - c
    claimed_k: int               # N - 2u
    equivalent_to: QECCParams    # the source stabilizer code

    def lines(self) -> list[str]:
        return [
            f"params={self.params}",
            f"requested_c={self.requested_c}",
            f"achieved_c={self.achieved_c}",
            f"claimed_n={self.claimed_n}",
            f"claimed_k={self.claimed_k}",
            f"equivalent_to={self.equivalent_to}",
        ]


def puncture_to_eaqecc(code: ac.LinearCode, c: int, compute_d: bool = True, *,
                       budget: int = DEFAULT_BUDGET) -> PunctureReport:
    """Drop the last c coordinates of a Hermitian self-orthogonal code and
    measure the EA parameters of the result."""
    if ac.hermitian_witness(code) is not None:
        raise NotSelfOrthogonal("source code is not Hermitian self-orthogonal")
    u, N = code.dim, code.n
    if not 0 < c <= u:
        raise RangeError(f"c={c} outside (0, {u}]")
    source = stabilizer_params(code.to_additive(), compute_d, budget=budget)
    punctured = ac.puncture_linear(code, range(N - c, N))
    params = eaqec_params(punctured.to_additive(), compute_d, budget=budget)
    return PunctureReport(
        params=params,
        requested_c=c,
        achieved_c=params.c,
        claimed_n=N - c,
        claimed_k=N - 2 * u,
        equivalent_to=source,
    )


# ---------------------------------------------------------------------------
# parameter tables for the published construction families
# ---------------------------------------------------------------------------


def _entry(q, n, k, d, c, m, kb, db) -> CombinationParams:
    alice = EAQECCParams(q=q, n=n, k=k, c=c, d=d)
    bob = QECCParams(q=q, n=m, k=kb, d=db)
    return CombinationParams(alice=alice, bob=bob,
                             match=classify_match(alice, bob))


#: Binary two-parameter families, instantiated per m; distances declared.
_BINARY_FAMILY = (
    lambda m: (2, 4 * m, 1, 2 * m + 1, 1, 5, 1, 3),
    lambda m: (2, 4 * m + 1, 1, 2 * m + 3, 4, 10, 4, 3),
    lambda m: (2, 4 * m + 2, 1, 2 * m + 3, 3, 8, 3, 3),
    lambda m: (2, 4 * m + 3, 1, 2 * m + 3, 2, 8, 2, 3),
)

_BINARY_FIXED = (
    (2, 7, 2, 5, 5, 11, 5, 3),
    (2, 8, 2, 5, 4, 10, 4, 3),
    (2, 9, 2, 5, 3, 8, 3, 3),
    (2, 10, 2, 6, 4, 10, 4, 3),
    (2, 9, 3, 6, 6, 12, 6, 3),
    (2, 13, 3, 9, 10, 16, 10, 3),
    (2, 12, 4, 7, 8, 14, 8, 3),
)

_TERNARY_FIXED = (
    (3, 11, 1, 7, 2, 6, 2, 3),
    (3, 26, 2, 11, 2, 6, 2, 3),
    (3, 28, 2, 11, 4, 8, 4, 3),
    (3, 14, 2, 9, 6, 10, 6, 3),
    (3, 28, 2, 13, 6, 10, 6, 3),
)


def known_tables(family_ms=(2, 3, 4)) -> list[CombinationParams]:
    """Published parameter families with declared (not recomputed) distances."""
    out = []
    for m in family_ms:
        if m < 2:
            raise RangeError(f"family parameter m={m} must be at least 2")
        for make in _BINARY_FAMILY:
            out.append(_entry(*make(m)))
    out.extend(_entry(*row) for row in _BINARY_FIXED)
    out.extend(_entry(*row) for row in _TERNARY_FIXED)
    return out


def tables_csv(family_ms=(2, 3, 4)) -> str:
    lines = ["q,n,k,d,c,m,kb,db,match"]
    for entry in known_tables(family_ms):
        a, b = entry.alice, entry.bob
        lines.append(f"{a.q},{a.n},{a.k},{a.d},{a.c},{b.n},{b.k},{b.d},{entry.match}")
    return "\n".join(lines) + "\n"
