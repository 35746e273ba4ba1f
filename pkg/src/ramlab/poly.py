"""Univariate polynomials over GF(p^k).

Coefficients are stored ascending in an int64 code array with no trailing
zeros; the zero polynomial is the empty array and its degree is the
distinguished NEG_INF marker, never an integer.
"""

from __future__ import annotations

import numpy as np

from ramlab.fields import Field, FieldElement

NEG_INF = float("-inf")


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        a = np.asarray(coeffs, dtype=np.int64)
        n = len(a)
        while n > 0 and a[n - 1] == 0:
            n -= 1
        self.field = field
        self.coeffs = np.array(a[:n], dtype=np.int64)

    # -- constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, [])

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, [1])

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, [0, 1])

    @classmethod
    def from_ints(cls, field: Field, ints) -> "Poly":
        """Integer coefficients, reduced through Z -> GF(p)."""
        return cls(field, [field.element(int(c)).code for c in ints])

    @classmethod
    def from_elements(cls, field: Field, elems) -> "Poly":
        return cls(field, [field.element(e).code for e in elems])

    @classmethod
    def linear_power(cls, field: Field, root_code: int, e: int) -> "Poly":
        """(t - root)^e."""
        base = cls(field, [field.neg_code(root_code), 1])
        return base ** e

    # -- basics -----------------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if len(self.coeffs) else NEG_INF

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def lead(self) -> FieldElement:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return FieldElement(self.field, int(self.coeffs[-1]))

    def coeff(self, i: int) -> FieldElement:
        c = int(self.coeffs[i]) if 0 <= i < len(self.coeffs) else 0
        return FieldElement(self.field, c)

    def padded(self, length: int) -> np.ndarray:
        out = np.zeros(length, dtype=np.int64)
        out[:len(self.coeffs)] = self.coeffs
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.coeffs, other.coeffs)

    def __ne__(self, other):
        r = self == other
        return NotImplemented if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.coeffs.tobytes()))

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*t" if c != 1 else "t")
            else:
                terms.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(reversed(terms))

    # -- arithmetic ---------------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise ValueError("mixed fields in polynomial arithmetic")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a, b = self.padded(n), other.padded(n)
        f = self.field
        if f.k == 1:
            return Poly(f, (a + b) % f.p)
        d = f.digit_table()
        return Poly(f, ((d[a] + d[b]) % f.p) @ f._ppow)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        f = self.field
        if f.k == 1:
            return Poly(f, (-self.coeffs) % f.p)
        d = f.digit_table()
        return Poly(f, ((-d[self.coeffs]) % f.p) @ f._ppow)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, FieldElement):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        f = self.field
        if f.k == 1:
            return Poly(f, np.convolve(self.coeffs, other.coeffs) % f.p)
        # lift codes to digit matrices, convolve exactly over Z, reduce
        d = f.digit_table()
        A, B = d[self.coeffs], d[other.coeffs]
        k = f.k
        out = np.zeros((len(A) + len(B) - 1, 2 * k - 1), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                out[:, i + j] += np.convolve(A[:, i], B[:, j])
        red = out[:, :k] + out[:, k:] @ f._red
        return Poly(f, (red % f.p) @ f._ppow)

    def scale(self, c) -> "Poly":
        f = self.field
        c = f.element(c)
        if c.code == 0:
            return Poly.zero(f)
        if f.k == 1:
            return Poly(f, (self.coeffs * c.code) % f.p)
        return Poly(f, [f.mul_codes(int(a), c.code) for a in self.coeffs])

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.field)
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        r = self.coeffs.copy()
        db = other.degree
        inv_lead = f.inv_code(int(other.coeffs[-1]))
        if len(r) - 1 < db:
            return Poly.zero(f), Poly(f, r)
        q = np.zeros(len(r) - db, dtype=np.int64)
        b = other.coeffs
        for i in range(len(r) - 1, db - 1, -1):
            c = f.mul_codes(int(r[i]), inv_lead)
            if c == 0:
                continue
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] = f.sub_codes(int(r[i - db + j]), f.mul_codes(c, int(b[j])))
        return Poly(f, q), Poly(f, r)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ValueError("zero polynomial cannot be made monic")
        return self.scale(self.lead().inverse())

    # -- calculus & evaluation ------------------------------------------------------

    def derivative(self) -> "Poly":
        """Formal derivative; the p-fold iterate is identically zero."""
        f = self.field
        if len(self.coeffs) <= 1:
            return Poly.zero(f)
        mult = np.arange(1, len(self.coeffs), dtype=np.int64) % f.p
        if f.k == 1:
            return Poly(f, (self.coeffs[1:] * mult) % f.p)
        d = f.digit_table()
        return Poly(f, ((d[self.coeffs[1:]] * mult[:, None]) % f.p) @ f._ppow)

    def eval_code(self, x_code: int) -> int:
        f = self.field
        acc = 0
        for c in self.coeffs[::-1]:
            acc = f.add_codes(f.mul_codes(acc, x_code), int(c))
        return acc

    def __call__(self, x) -> FieldElement:
        x = self.field.element(x) if not isinstance(x, FieldElement) else x
        return FieldElement(self.field, self.eval_code(x.code))

    def divide_linear(self, root_code: int):
        """Synthetic division by (t - root): returns (quotient, remainder code)."""
        f = self.field
        if self.is_zero():
            return Poly.zero(f), 0
        n = len(self.coeffs)
        q = np.zeros(n - 1, dtype=np.int64)
        acc = int(self.coeffs[-1])
        for i in range(n - 2, -1, -1):
            q[i] = acc
            acc = f.add_codes(f.mul_codes(acc, root_code), int(self.coeffs[i]))
        return Poly(f, q), acc

    def root_multiplicity(self, root_code: int) -> int:
        m = 0
        cur = self
        while not cur.is_zero():
            quotient, rem = cur.divide_linear(root_code)
            if rem != 0:
                break
            m += 1
            cur = quotient
        return m


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor; errors if both are zero."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_derivative(f: Poly) -> Poly:
    return f.derivative()
