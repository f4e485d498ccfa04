"""Exact arithmetic in GF(p^m).

Elements are stored as integer codes.  For a prime field the code is the
residue itself; for an extension field the element
``c0 + c1*x + ... + c_{m-1}*x^(m-1)`` has code ``c0 + c1*p + ... + c_{m-1}*p^(m-1)``.
Numeric order of codes is the canonical element order, so ``0`` and ``1``
always come first.

Linear algebra elsewhere in the package works on numpy arrays of codes and
uses the vectorised methods of :class:`FieldSpec` (``add``, ``mul``, ...),
which accept Python ints or integer arrays alike.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import (
    BadArgs,
    FieldDivisionByZero,
    FieldMismatch,
    NoBuiltinModulus,
    NonPrime,
    ReducibleModulus,
)

# monic irreducible moduli, coefficients c0..cm
BUILTIN_MODULI = {
    4: (2, 2, (1, 1, 1)),
    8: (2, 3, (1, 1, 0, 1)),
    9: (3, 2, (2, 2, 1)),
    16: (2, 4, (1, 1, 0, 0, 1)),
    25: (5, 2, (2, 4, 1)),
    27: (3, 3, (1, 2, 0, 1)),
    32: (2, 5, (1, 0, 1, 0, 0, 1)),
    49: (7, 2, (3, 6, 1)),
    64: (2, 6, (1, 1, 0, 1, 1, 0, 1)),
    81: (3, 4, (2, 0, 0, 2, 1)),
}

MAX_PRIME = 2**31
MAX_EXTENSION_ORDER = 1024
_PRIME_INV_TABLE_LIMIT = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by monic b over GF(p); coefficient lists low-to-high."""
    a = [c % p for c in a]
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        lead = a[-1]
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..m//2."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(list(modulus), list(low) + [1], p):
                return False
    return True


class FieldSpec:
    """Description of GF(p^m) plus the arithmetic tables used by the kernels.

    Instances are immutable; equality and hashing depend only on
    ``(p, m, modulus)``.
    """

    __slots__ = ("p", "m", "q", "modulus", "prime_mode", "add_table", "mul_table",
                 "neg_table", "inv_table", "frob_table", "_digits")

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
            raise NonPrime(f"{p} is not prime")
        p, m = int(p), int(m)
        if p >= MAX_PRIME:
            raise BadArgs(f"p={p} exceeds the supported machine-word range")
        if m < 1:
            raise BadArgs("extension degree m must be >= 1")
        q = p**m
        if m == 1:
            if modulus is not None:
                raise BadArgs("a prime field takes no modulus")
        else:
            if modulus is None:
                if q not in BUILTIN_MODULI:
                    raise NoBuiltinModulus(f"no built-in modulus for q={q}")
                modulus = BUILTIN_MODULI[q][2]
            modulus = tuple(int(c) for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise BadArgs(f"modulus must be monic of degree {m}: {modulus}")
            if any(not 0 <= c < p for c in modulus):
                raise BadArgs(f"modulus coefficients must lie in [0, {p})")
            if not is_irreducible(modulus, p):
                raise ReducibleModulus(f"{modulus} is reducible over GF({p})")
            if q > MAX_EXTENSION_ORDER:
                raise BadArgs(f"extension fields are limited to q <= {MAX_EXTENSION_ORDER}")
        self.p, self.m, self.q, self.modulus = p, m, q, modulus
        self.prime_mode = m == 1
        self._build_tables()

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        if self.prime_mode:
            self._digits = None
            self.add_table = self.mul_table = self.neg_table = None
            if p <= _PRIME_INV_TABLE_LIMIT:
                inv = np.zeros(p, dtype=np.int64)
                for a in range(1, p):
                    inv[a] = pow(a, -1, p)
                self.inv_table = inv
            else:
                self.inv_table = None
            self.frob_table = None
            return
        weights = p ** np.arange(m, dtype=np.int64)
        codes = np.arange(q, dtype=np.int64)
        digits = (codes[:, None] // weights[None, :]) % p
        self._digits = digits
        self.add_table = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self.neg_table = ((-digits) % p) @ weights
        # xpow[i][a] = digits of a * x^i
        red = np.array(self.modulus[:m], dtype=np.int64)
        xpow = [digits]
        cur = digits
        for _ in range(1, m):
            top = cur[:, m - 1]
            shifted = np.zeros_like(cur)
            shifted[:, 1:] = cur[:, :m - 1]
            cur = (shifted - top[:, None] * red[None, :]) % p
            xpow.append(cur)
        xpow = np.stack(xpow)  # (m, q, m)
        prod_digits = np.einsum("bi,iaj->abj", digits, xpow) % p
        self.mul_table = prod_digits @ weights
        inv = np.zeros(q, dtype=np.int64)
        ones = self.mul_table[1:] == 1
        inv[1:] = np.argmax(ones, axis=1)
        self.inv_table = inv
        frob = codes.copy()
        for _ in range(p - 1):
            frob = self.mul_table[frob, codes]
        self.frob_table = frob
        for t in (self.add_table, self.mul_table, self.neg_table, self.inv_table, self.frob_table):
            t.setflags(write=False)

    # -- identity -----------------------------------------------------------
    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.prime_mode:
            return f"GF({self.p})"
        return f"GF({self.q}, modulus={list(self.modulus)})"

    def __reduce__(self):
        return (FieldSpec, (self.p, self.m, self.modulus))

    # -- vectorised arithmetic on codes ---------------------------------------
    def add(self, a, b):
        if self.prime_mode:
            return (a + b) % self.p
        return self.add_table[a, b]

    def neg(self, a):
        if self.prime_mode:
            return (-a) % self.p
        return self.neg_table[a]

    def sub(self, a, b):
        if self.prime_mode:
            return (a - b) % self.p
        return self.add_table[a, self.neg_table[b]]

    def mul(self, a, b):
        if self.prime_mode:
            return (a * b) % self.p
        return self.mul_table[a, b]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise FieldDivisionByZero("inverse of zero")
        if self.inv_table is not None:
            return self.inv_table[a]
        if np.ndim(a) == 0:
            return pow(int(a), -1, self.p)
        return np.vectorize(lambda x: pow(int(x), -1, self.p), otypes=[np.int64])(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def frob(self, a, e: int = 1):
        """``a ** (p ** e)`` with e taken mod m."""
        e %= self.m
        if self.prime_mode or e == 0:
            return a
        for _ in range(e):
            a = self.frob_table[a]
        return a

    def power(self, a: int, e: int) -> int:
        result, base = 1, int(a)
        if e < 0:
            base, e = int(self.inv(base)), -e
        while e:
            if e & 1:
                result = int(self.mul(result, base))
            base = int(self.mul(base, base))
            e >>= 1
        return result

    def matmul(self, A, B):
        """Matrix product of code arrays."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if A.shape[1] != B.shape[0]:
            raise BadArgs(f"shape mismatch {A.shape} @ {B.shape}")
        if self.prime_mode and (self.p - 1) ** 2 * max(1, A.shape[1]) < 2**62:
            return (A @ B) % self.p
        acc = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for t in range(A.shape[1]):
            acc = self.add(acc, self.mul(A[:, t, None], B[None, t, :]))
        return acc

    # -- element helpers ------------------------------------------------------
    def coeffs(self, code: int) -> tuple[int, ...]:
        code = int(code)
        return tuple((code // self.p**i) % self.p for i in range(self.m))

    def from_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            rem = _poly_mod(coeffs, list(self.modulus), self.p) if self.m > 1 else [sum(coeffs) % self.p]
            coeffs = rem
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))

    def check(self, code) -> int:
        code = int(code)
        if not 0 <= code < self.q:
            raise BadArgs(f"{code} is not an element code of {self!r}")
        return code

    def element(self, code) -> "FieldElement":
        return FieldElement(self, self.check(code))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def nonzero_codes(self) -> range:
        return range(1, self.q)

    def format_code(self, code) -> str:
        """Text form used in matrix files: decimal residue, or c0..c_{m-1} digits."""
        if self.prime_mode:
            return str(int(code))
        return "".join(str(c) for c in self.coeffs(code))

    def parse_code(self, text: str) -> int:
        text = text.strip()
        if self.prime_mode:
            value = int(text)
            if not 0 <= value < self.p:
                raise BadArgs(f"entry {text!r} outside GF({self.p})")
            return value
        if len(text) != self.m or not text.isdigit():
            raise BadArgs(f"entry {text!r} must be {self.m} base-{self.p} digits")
        digits = [int(ch) for ch in text]
        if any(d >= self.p for d in digits):
            raise BadArgs(f"entry {text!r} has a digit >= {self.p}")
        return self.from_coeffs(digits)

    def header(self) -> str:
        if self.prime_mode:
            return f"q={self.p}^1"
        return f"q={self.p}^{self.m} poly=" + ",".join(str(c) for c in self.modulus)


def make_field(p: int, m: int = 1, modulus=None) -> FieldSpec:
    return FieldSpec(p, m, modulus)


def field_of_order(q: int) -> FieldSpec:
    """GF(q) with the built-in modulus when q is a proper prime power."""
    if is_prime(q):
        return FieldSpec(q)
    if q in BUILTIN_MODULI:
        p, m, _ = BUILTIN_MODULI[q]
        return FieldSpec(p, m)
    p = next((d for d in range(2, q) if q % d == 0), q)
    r = q
    while r % p == 0:
        r //= p
    if q > 1 and r == 1:
        raise NoBuiltinModulus(f"no built-in modulus for q={q}")
    raise NonPrime(f"{q} is not a prime power")


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.spec.check(self.value))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatch(f"{self.spec!r} vs {other.spec!r}")
            return other.value
        if isinstance(other, (int, np.integer)) and self.spec.prime_mode:
            return int(other) % self.spec.p
        return NotImplemented

    def _wrap(self, code) -> "FieldElement":
        return FieldElement(self.spec, int(code))

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.div(self.value, b))

    def __neg__(self):
        return self._wrap(self.spec.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.spec.power(self.value, e))

    def inv(self) -> "FieldElement":
        return self._wrap(self.spec.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        if self.spec.prime_mode:
            return f"{self.value}"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + mono)
        return "+".join(terms) if terms else "0"


_OPS = {"add": "__add__", "sub": "__sub__", "mul": "__mul__", "div": "__truediv__"}


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if op not in _OPS:
        raise BadArgs(f"unknown op {op!r}")
    if a.spec != b.spec:
        raise FieldMismatch(f"{a.spec!r} vs {b.spec!r}")
    return getattr(a, _OPS[op])(b)


def inv(a: FieldElement) -> FieldElement:
    return a.inv()


def neg(a: FieldElement) -> FieldElement:
    return -a


def frobenius(a: FieldElement, e: int) -> FieldElement:
    """Apply the e-th power of Frobenius; e is reduced modulo m."""
    return FieldElement(a.spec, int(a.spec.frob(a.value, e)))


def all_elements(spec: FieldSpec) -> list[FieldElement]:
    return [FieldElement(spec, c) for c in range(spec.q)]
