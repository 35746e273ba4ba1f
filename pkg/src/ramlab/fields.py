"""Exact arithmetic in GF(p^k), p an odd prime.

Elements are integer codes in [0, p^k): the base-p digits of a code are the
coordinates of the element in the power basis 1, x, ..., x^{k-1} of
GF(p)[x] / (m(x)), where m is a fixed irreducible modulus.  The modulus is
chosen deterministically (smallest monic irreducible of degree k when
coefficient tuples are compared most-significant first), so codes mean the
same thing in every run and every process.

Codes 0..p-1 are always the prime subfield, in every extension.
"""

from __future__ import annotations

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


# ---------------------------------------------------------------------------
# GF(p)[x] helpers on plain int arrays (ascending coefficients), used only
# for modulus selection.
# ---------------------------------------------------------------------------

def _trim(a):
    n = len(a)
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _fp_mul(a, b, p):
    if len(a) == 0 or len(b) == 0:
        return np.zeros(0, dtype=np.int64)
    return np.convolve(a, b) % p


def _fp_mod(a, m, p):
    a = _trim(np.array(a, dtype=np.int64) % p)
    dm = len(m) - 1
    inv_lead = pow(int(m[dm]), p - 2, p)
    while len(a) - 1 >= dm:
        da = len(a) - 1
        c = (int(a[da]) * inv_lead) % p
        a = a.copy()
        a[da - dm:da + 1] = (a[da - dm:da + 1] - c * np.asarray(m, dtype=np.int64)) % p
        a = _trim(a)
    return a


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    out = np.zeros(n, dtype=np.int64)
    out[:len(a)] = a
    out[:len(b)] -= b
    return _trim(out % p)


def _fp_gcd(a, b, p):
    a = _trim(np.array(a, dtype=np.int64) % p)
    b = _trim(np.array(b, dtype=np.int64) % p)
    while len(b) > 0:
        a, b = b, _fp_mod(a, b, p)
    return a


def _fp_xpow_mod(e: int, m, p):
    """x^e mod m over GF(p) by square and multiply."""
    result = np.array([1], dtype=np.int64)
    base = _fp_mod(np.array([0, 1], dtype=np.int64), m, p)
    while e > 0:
        if e & 1:
            result = _fp_mod(_fp_mul(result, base, p), m, p)
        base = _fp_mod(_fp_mul(base, base, p), m, p)
        e >>= 1
    return result


def _is_irreducible(m, p: int) -> bool:
    """Rabin test for a monic polynomial m over GF(p)."""
    k = len(m) - 1
    x = _fp_mod(np.array([0, 1], dtype=np.int64), m, p)
    # x^(p^k) == x mod m
    h = _fp_xpow_mod(p ** k, m, p)
    if len(_fp_sub(h, x, p)) != 0:
        return False
    prime_divs = []
    ell, kk = 2, k
    while ell * ell <= kk:
        if kk % ell == 0:
            prime_divs.append(ell)
            while kk % ell == 0:
                kk //= ell
        ell += 1
    if kk > 1:
        prime_divs.append(kk)
    for ell in prime_divs:
        h = _fp_xpow_mod(p ** (k // ell), m, p)
        diff = _fp_sub(h, x, p)
        if len(diff) == 0 or len(_fp_gcd(diff, m, p)) != 1:
            return False
    return True


def minimal_irreducible(p: int, k: int) -> np.ndarray:
    """Smallest monic irreducible of degree k over GF(p).

    Candidates x^k + c_{k-1} x^{k-1} + ... + c_0 are ordered by the tuple
    (c_{k-1}, ..., c_0), most-significant coefficient first.
    """
    if k == 1:
        return np.array([0, 1], dtype=np.int64)
    for code in range(p ** k):
        digits = np.empty(k + 1, dtype=np.int64)
        c = code
        # code's high base-p digit is the x^{k-1} coefficient
        for i in range(k):
            digits[i] = c % p
            c //= p
        digits[k] = 1
        if _is_irreducible(digits, p):
            return digits
    raise ValueError(f"no irreducible of degree {k} over GF({p})")  # unreachable


# ---------------------------------------------------------------------------
# Field and FieldElement
# ---------------------------------------------------------------------------

_TABLE_LIMIT = 2048  # largest q for which full lookup tables are built


class Field:
    """GF(p^k) with code-level arithmetic and optional lookup tables."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p) or p == 2:
            raise ValueError(f"characteristic must be an odd prime, got {p}")
        if k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = minimal_irreducible(p, k)
        self._ppow = np.array([p ** i for i in range(k)], dtype=np.int64)
        self._red = self._reduction_rows()
        self._digits = None
        self._tables = None

    def _reduction_rows(self) -> np.ndarray:
        """Row j = coefficients of x^{k+j} mod modulus, j = 0..k-2."""
        k, p = self.k, self.p
        rows = np.zeros((max(k - 1, 0), k), dtype=np.int64)
        if k == 1:
            return rows
        cur = (-self.modulus[:k]) % p  # x^k
        for j in range(k - 1):
            rows[j] = cur
            nxt = np.zeros(k, dtype=np.int64)
            nxt[1:] = cur[:-1]
            nxt = (nxt + cur[k - 1] * rows[0]) % p
            cur = nxt
        return rows

    # -- code-level arithmetic ------------------------------------------------

    def digit_table(self) -> np.ndarray:
        """(q, k) array of base-p digits of every code."""
        if self._digits is None:
            c = np.arange(self.q, dtype=np.int64)
            d = np.empty((self.q, self.k), dtype=np.int64)
            for i in range(self.k):
                d[:, i] = c % self.p
                c = c // self.p
            self._digits = d
        return self._digits

    def decode(self, code: int) -> np.ndarray:
        return self.digit_table()[code]

    def encode(self, digits) -> int:
        return int(np.dot(np.asarray(digits, dtype=np.int64) % self.p, self._ppow))

    def add_codes(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self.encode(self.decode(a) + self.decode(b))

    def sub_codes(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a - b) % self.p
        return self.encode(self.decode(a) - self.decode(b))

    def neg_code(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self.encode(-self.decode(a))

    def mul_codes(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        conv = np.convolve(self.decode(a), self.decode(b))
        red = conv[:self.k].copy()
        if len(conv) > self.k:
            red += conv[self.k:] @ self._red[:len(conv) - self.k]
        return self.encode(red)

    def pow_code(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow_code(self.inv_code(a), -e)
        r, base = 1, a
        while e > 0:
            if e & 1:
                r = self.mul_codes(r, base)
            base = self.mul_codes(base, base)
            e >>= 1
        return r

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero in " + repr(self))
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow_code(a, self.q - 2)

    def scalar_mul_code(self, c: int, a: int) -> int:
        """Multiply code a by a prime-subfield scalar c (an integer mod p)."""
        if self.k == 1:
            return (c * a) % self.p
        return self.encode(c * self.decode(a))

    # -- elements --------------------------------------------------------------

    def element(self, value) -> "FieldElement":
        """Coerce to an element: ints map through Z -> GF(p) -> GF(p^k)."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element from a different field")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, int(value) % self.p)
        return FieldElement(self, self.encode(value))

    def from_code(self, code: int) -> "FieldElement":
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for {self!r}")
        return FieldElement(self, code)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        for c in range(self.q):
            yield FieldElement(self, c)

    # -- lookup tables for kernels ----------------------------------------------

    def tables(self):
        """(add, mul, neg, inv) int64 lookup tables indexed by codes.

        inv[0] is a 0 sentinel; kernels must not look up the inverse of 0.
        """
        if self._tables is None:
            if self.q > _TABLE_LIMIT:
                raise ValueError(
                    f"lookup tables limited to q <= {_TABLE_LIMIT}, got q = {self.q}")
            q, p, k = self.q, self.p, self.k
            if k == 1:
                r = np.arange(q, dtype=np.int64)
                add = np.add.outer(r, r) % p
                mul = np.multiply.outer(r, r) % p
                neg = (-r) % p
            else:
                d = self.digit_table()
                add = ((d[:, None, :] + d[None, :, :]) % p) @ self._ppow
                conv = np.zeros((q, q, 2 * k - 1), dtype=np.int64)
                for i in range(k):
                    for j in range(k):
                        conv[:, :, i + j] += np.multiply.outer(d[:, i], d[:, j])
                red = conv[:, :, :k] + np.tensordot(conv[:, :, k:], self._red, axes=([2], [0]))
                mul = (red % p) @ self._ppow
                neg = ((-d) % p) @ self._ppow
            inv = np.argmax(mul == 1, axis=1).astype(np.int64)  # inv[0] = 0 sentinel
            self._tables = (add, mul, neg, inv)
        return self._tables

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p and self.k == other.k

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.p, self.k))

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"


class FieldElement:
    """An element of a Field, stored as an integer code."""

    __slots__ = ("field", "code")

    def __init__(self, field: Field, code: int):
        self.field = field
        self.code = code

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("mixed fields in arithmetic")
            return other
        if isinstance(other, (int, np.integer)):
            return self.field.element(int(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add_codes(self.code, o.code))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub_codes(self.code, o.code))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub_codes(o.code, self.code))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul_codes(self.code, o.code))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul_codes(self.code, self.field.inv_code(o.code)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul_codes(o.code, self.field.inv_code(self.code)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_code(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_code(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_code(self.code))

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = self.field.element(int(other))
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.code == other.code

    def __ne__(self, other):
        r = self == other
        return NotImplemented if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.code))

    def __repr__(self):
        return f"{self.code}:{self.field!r}"
