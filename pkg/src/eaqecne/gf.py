"""Finite fields GF(p^e) and their quadratic extensions, table-driven.

Every element is an integer index in ``[0, order)``.  A prime-field index is
the element itself.  An extension element with coefficient vector
``(c_0, ..., c_{d-1})`` over its base field (low degree first) has index
``idx(c_0) + idx(c_1)*B + idx(c_2)*B^2 + ...`` where ``B`` is the base-field
order; unwinding the chain down to the prime field this is exactly base-p
positional encoding of the F_p coefficient vector.

Supported base orders are 2, 3, 4, 5, 7, 8, 9 with a fixed modulus table, and
each base field has a quadratic extension GF(q^2) whose modulus is always
monic ``x^2 + x + c``; the residue class of ``x`` is the designated basis
generator of GF(q^2) over GF(q).  A modulus of the shape ``x^2 + const``
would make that residue class and its conjugate linearly dependent, so the
linear term is mandatory.

All orders are at most 81, so full addition/multiplication tables are built
eagerly and shared; operations on numpy index arrays vectorize through fancy
indexing on those tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

import numpy as np

from .errors import DivisionByZero, FieldMismatch, NotQuadraticExtension

#: Base-field orders with fixed moduli shipped by the package.
SUPPORTED_ORDERS = (2, 3, 4, 5, 7, 8, 9)

# Constant term c of the quadratic modulus x^2 + x + c over GF(q), as a
# base-field element index.  Each is verified irreducible at construction.
_QUAD_CONST = {2: 1, 3: 2, 4: 2, 5: 2, 7: 3, 8: 1, 9: 4}

# GF(8) is the only supported base field that is not prime and not a
# quadratic extension: x^3 + x + 1 over GF(2), coefficients low-first.
_GF8_MODULUS = (1, 1, 0, 1)

_TABLE_DTYPE = np.int16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for k in range(2, isqrt(n) + 1):
        if n % k == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over an existing FieldSpec (coefficient tuples, low first)
# ---------------------------------------------------------------------------


def _poly_trim(f):
    while f and f[-1] == 0:
        f = f[:-1]
    return f


def _poly_mul(base: "FieldSpec", f, g):
    out = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = base.add(out[i + j], base.mul(a, b))
    return tuple(out)


def _poly_mod(base: "FieldSpec", f, m):
    """Remainder of f modulo a monic polynomial m."""
    f = list(f)
    d = len(m) - 1
    while len(_poly_trim(tuple(f))) > d:
        f = list(_poly_trim(tuple(f)))
        lead = f[-1]
        shift = len(f) - 1 - d
        for i, c in enumerate(m):
            f[shift + i] = base.sub(f[shift + i], base.mul(lead, c))
    f = _poly_trim(tuple(f))
    return tuple(f) + (0,) * (d - len(f))


def _poly_is_irreducible(base: "FieldSpec", m) -> bool:
    """Trial division by all monic polynomials of degree <= deg(m)/2."""
    d = len(m) - 1
    if d < 1 or m[-1] != 1:
        return False
    for k in range(1, d // 2 + 1):
        for tail in itertools.product(range(base.order), repeat=k):
            divisor = tuple(tail) + (1,)
            if not any(_poly_mod(base, m, divisor)):
                return False
    return True


class FieldSpec:
    """Immutable arithmetic tables for one finite field.

    Build through :func:`field`; direct construction is for the fixed table
    entries only.  Safe to share across threads: nothing mutates after
    ``__init__``.
    """

    def __init__(self, p: int | None = None, base: "FieldSpec | None" = None,
                 modulus: tuple[int, ...] | None = None):
        if base is None:
            assert p is not None and modulus is None
            if not _is_prime(p):
                raise ValueError(f"characteristic {p} is not prime")
            self.p = p
            self.base = None
            self.modulus = (0, 1)  # the residue ring F_p[x]/(x) ~ F_p
            self.degree = 1
            self.order = p
            self.e = 1
            rng = np.arange(p, dtype=_TABLE_DTYPE)
            self.add_table = (rng[:, None] + rng[None, :]) % p
            self.mul_table = (rng[:, None].astype(np.int64) * rng[None, :]) % p
            self.mul_table = self.mul_table.astype(_TABLE_DTYPE)
            self.neg_table = (-rng) % p
        else:
            assert modulus is not None
            self.p = base.p
            self.base = base
            self.modulus = tuple(modulus)
            self.degree = len(modulus) - 1
            if self.degree < 2:
                raise ValueError("extension modulus must have degree >= 2")
            if modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            if not _poly_is_irreducible(base, self.modulus):
                raise ValueError(
                    f"modulus {modulus} is reducible over GF({base.order})")
            self.order = base.order ** self.degree
            self.e = base.e * self.degree
            self._build_extension_tables()
        self.sub_table = self.add_table[:, self.neg_table]
        self.inv_table = self._build_inverse()
        self.frob_table = np.array(
            [self.pow(a, self.p) for a in range(self.order)], dtype=_TABLE_DTYPE)
        self.abs_trace_table = self._build_abs_trace()
        if self.base is not None and self.degree == 2:
            self._finalize_quadratic()
        else:
            self.beta = None

    # -- construction internals -------------------------------------------

    def _build_extension_tables(self):
        base, d = self.base, self.degree
        coeff = [self.coeffs(i) for i in range(self.order)]
        add = np.zeros((self.order, self.order), dtype=_TABLE_DTYPE)
        mul = np.zeros_like(add)
        for a in range(self.order):
            for b in range(a, self.order):
                s = tuple(base.add(x, y) for x, y in zip(coeff[a], coeff[b]))
                add[a, b] = add[b, a] = self.index(s)
                prod = _poly_mod(base, _poly_mul(base, coeff[a], coeff[b]),
                                 self.modulus)
                prod = tuple(prod) + (0,) * (d - len(prod))
                mul[a, b] = mul[b, a] = self.index(prod)
        self.add_table = add
        self.mul_table = mul
        self.neg_table = np.array(
            [self.index(tuple(base.neg(c) for c in coeff[a]))
             for a in range(self.order)], dtype=_TABLE_DTYPE)

    def _build_inverse(self):
        inv = np.zeros(self.order, dtype=_TABLE_DTYPE)
        for a in range(1, self.order):
            hits = np.where(self.mul_table[a] == 1)[0]
            assert len(hits) == 1, "multiplication table is not a field"
            inv[a] = hits[0]
        return inv

    def _build_abs_trace(self):
        tr = np.zeros(self.order, dtype=_TABLE_DTYPE)
        for a in range(self.order):
            acc, x = 0, a
            for _ in range(self.e):
                acc = self.add(acc, x)
                x = int(self.frob_table[x])
            assert acc < self.p, "absolute trace left the prime subfield"
            tr[a] = acc
        return tr

    def _finalize_quadratic(self):
        base = self.base
        q = base.order
        self.beta = q  # residue class of x: coefficients (0, 1)
        conj = np.array([self.pow(a, q) for a in range(self.order)],
                        dtype=_TABLE_DTYPE)
        assert all(conj[conj[a]] == a for a in range(self.order))
        assert all(conj[a] == a for a in range(q)), "conjugation moved GF(q)"
        self.conj_table = conj
        self.beta_conj = int(conj[self.beta])
        # {beta, beta^q} must be a GF(q)-basis of GF(q^2)
        for lam in range(q):
            if self.mul(lam, self.beta) == self.beta_conj:
                raise ValueError("beta and beta^q are linearly dependent")
        self.alt_normalizer = self.sub(self.mul(self.beta, self.beta),
                                       self.mul(self.beta_conj, self.beta_conj))
        if self.alt_normalizer == 0:
            raise ValueError("beta^2 - beta^(2q) vanishes")
        rel = np.array([self.add(a, int(conj[a])) for a in range(self.order)],
                       dtype=_TABLE_DTYPE)
        assert all(v < q for v in rel), "relative trace left the base field"
        self.rel_trace_table = rel
        # phi on a single coordinate pair: (a|b) -> beta*a + beta^q*b,
        # indexed by a + q*b; a bijection GF(q)^2 -> GF(q^2).
        phi = np.zeros(self.order, dtype=_TABLE_DTYPE)
        for b in range(q):
            for a in range(q):
                phi[a + q * b] = self.add(self.mul(self.beta, a),
                                          self.mul(self.beta_conj, b))
        inv = np.full(self.order, -1, dtype=_TABLE_DTYPE)
        inv[phi] = np.arange(self.order, dtype=_TABLE_DTYPE)
        assert (inv >= 0).all(), "phi is not a bijection"
        self.phi_table = phi
        self.phi_inv_table = inv

    # -- scalar operations --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.sub_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"division by zero in {self!r}")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        out, acc = 1, a
        while k:
            if k & 1:
                out = self.mul(out, acc)
            acc = self.mul(acc, acc)
            k >>= 1
        return out

    def dot(self, u, v) -> int:
        """Plain coordinatewise dot product of two index vectors."""
        acc = 0
        for a, b in zip(u, v, strict=True):
            acc = self.add(acc, self.mul(int(a), int(b)))
        return acc

    # -- encoding -------------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector over the base field, low degree first."""
        if self.base is None:
            return (a,)
        out = []
        for _ in range(self.degree):
            a, r = divmod(a, self.base.order)
            out.append(r)
        return tuple(out)

    def index(self, coeffs) -> int:
        a = 0
        for c in reversed(tuple(coeffs)):
            a = a * self.base.order + c if self.base else c
        return a

    def prime_coeffs(self, a: int) -> tuple[int, ...]:
        """Flat F_p coefficient vector (base-p digits of the index)."""
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    # -- quadratic-extension operations ---------------------------------------

    @property
    def is_quadratic(self) -> bool:
        return self.base is not None and self.degree == 2

    def _require_quadratic(self):
        if not self.is_quadratic:
            raise NotQuadraticExtension(
                f"{self!r} is not a quadratic extension")

    def conjugate(self, a: int) -> int:
        """x -> x^q, q the base-field order."""
        self._require_quadratic()
        return int(self.conj_table[a])

    def rel_trace(self, a: int) -> int:
        """x + x^q, returned as a base-field index."""
        self._require_quadratic()
        return int(self.rel_trace_table[a])

    def abs_trace(self, a: int) -> int:
        """x + x^p + ... + x^(p^(e-1)), an element of F_p."""
        return int(self.abs_trace_table[a])

    def frobenius(self, a: int) -> int:
        return int(self.frob_table[a])

    # -- presentation -----------------------------------------------------------

    def element(self, index: int) -> "FieldElement":
        if not 0 <= index < self.order:
            raise ValueError(f"index {index} outside [0, {self.order})")
        return FieldElement(self, index)

    def poly_str(self, a: int, var: str = "x") -> str:
        """Human-readable polynomial form of an element index.

        Base-field coefficients of a tower field use the next letter, so a
        GF(16) element reads like ``(1 + y) + y*x``.
        """
        if self.base is None:
            return str(a)
        nested = chr(ord(var) + 1)
        terms = []
        for i, c in enumerate(self.coeffs(a)):
            if c == 0:
                continue
            cs = self.base.poly_str(c, nested)
            if i == 0:
                terms.append(f"({cs})" if "+" in cs else cs)
            else:
                head = "" if cs == "1" else (f"({cs})*" if "+" in cs else f"{cs}*")
                terms.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
        return " + ".join(terms) if terms else "0"

    def modulus_str(self, var: str = "x") -> str:
        if self.base is None:
            return var
        nested = chr(ord(var) + 1)
        terms = []
        for i, c in enumerate(self.modulus):
            if c == 0:
                continue
            cs = self.base.poly_str(c, nested)
            if i == 0:
                terms.append(f"({cs})" if "+" in cs else cs)
            else:
                head = "" if cs == "1" else (f"({cs})*" if "+" in cs else f"{cs}*")
                terms.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
        return " + ".join(reversed(terms))

    def __repr__(self) -> str:
        return f"GF({self.order})"


@lru_cache(maxsize=None)
def field(order: int) -> FieldSpec:
    """Return the canonical spec for GF(order) from the fixed modulus table."""
    if order in (2, 3, 5, 7):
        return FieldSpec(p=order)
    if order == 8:
        return FieldSpec(base=field(2), modulus=_GF8_MODULUS)
    root = isqrt(order)
    if root * root == order and root in SUPPORTED_ORDERS:
        base = field(root)
        return FieldSpec(base=base, modulus=(_QUAD_CONST[root], 1, 1))
    raise ValueError(
        f"unsupported field order {order}; base orders are {SUPPORTED_ORDERS} "
        "plus their squares")


def quadratic_field(base: FieldSpec) -> FieldSpec:
    """The canonical GF(q^2) over a supported base GF(q)."""
    if base.order not in SUPPORTED_ORDERS:
        raise ValueError(f"no quadratic extension shipped for {base!r}")
    return field(base.order ** 2)


@dataclass(frozen=True)
class FieldElement:
    """A field element bound to its spec; thin wrapper over the index API."""

    spec: FieldSpec
    index: int

    def _peer(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec is not self.spec:
                raise FieldMismatch(f"{self.spec!r} vs {other.spec!r}")
            return other.index
        return int(other)

    def __add__(self, other):
        return FieldElement(self.spec, self.spec.add(self.index, self._peer(other)))

    def __sub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self.index, self._peer(other)))

    def __mul__(self, other):
        return FieldElement(self.spec, self.spec.mul(self.index, self._peer(other)))

    def __truediv__(self, other):
        return FieldElement(self.spec, self.spec.div(self.index, self._peer(other)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.index))

    def conjugate(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.conjugate(self.index))

    def rel_trace(self) -> "FieldElement":
        self.spec._require_quadratic()
        return FieldElement(self.spec.base, self.spec.rel_trace(self.index))

    def abs_trace(self) -> "FieldElement":
        return FieldElement(field(self.spec.p), self.spec.abs_trace(self.index))

    def __str__(self) -> str:
        return str(self.index)
