"""Rational functions on the projective line over GF(p^k).

A RatFunc is held in normal form: numerator and denominator coprime, with
monic denominator.  Equality is representational equality, which makes
deduplication exact.  The point at infinity is a first-class ProjPoint
variant, never a sentinel field element.
"""

from __future__ import annotations

from ramlab.fields import Field, FieldElement
from ramlab.poly import Poly, poly_gcd


class ProjPoint:
    """A point of P^1: either a field element or the point at infinity."""

    __slots__ = ("field", "code")

    def __init__(self, field: Field, code):
        self.field = field
        self.code = code  # int code, or None for infinity

    @classmethod
    def finite(cls, value) -> "ProjPoint":
        if not isinstance(value, FieldElement):
            raise TypeError("finite points are built from field elements")
        return cls(value.field, value.code)

    @classmethod
    def infinity(cls, field: Field) -> "ProjPoint":
        return cls(field, None)

    @property
    def is_infinity(self) -> bool:
        return self.code is None

    @property
    def value(self) -> FieldElement:
        if self.code is None:
            raise ValueError("the point at infinity has no field value")
        return FieldElement(self.field, self.code)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.field == other.field and self.code == other.code

    def __ne__(self, other):
        r = self == other
        return NotImplemented if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.code))

    def __repr__(self):
        return "inf" if self.code is None else f"{self.code}:{self.field!r}"


class RatFunc:
    """num/den in reduced normal form (coprime, monic denominator)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly, reduced: bool = False):
        if num.field != den.field:
            raise ValueError("numerator and denominator over different fields")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = Poly.zero(num.field)
            self.den = Poly.one(num.field)
            return
        if not reduced:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
        c = den.lead().inverse()
        self.num = num.scale(c)
        self.den = den.scale(c)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_ints(cls, field: Field, num_ints, den_ints=(1,)) -> "RatFunc":
        return cls(Poly.from_ints(field, num_ints), Poly.from_ints(field, den_ints))

    @classmethod
    def constant(cls, value: FieldElement) -> "RatFunc":
        return cls(Poly(value.field, [value.code]), Poly.one(value.field))

    @classmethod
    def t(cls, field: Field) -> "RatFunc":
        return cls(Poly.x(field), Poly.one(field))

    # -- basics ----------------------------------------------------------------

    @property
    def field(self) -> Field:
        return self.num.field

    @property
    def degree(self) -> int:
        """max(deg num, deg den) after reduction; constants have degree 0."""
        if self.num.is_zero():
            return 0
        return int(max(self.num.degree, self.den.degree))

    def is_constant(self) -> bool:
        return self.degree == 0

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        r = self == other
        return NotImplemented if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == Poly.one(self.field):
            return f"({self.num!r})"
        return f"({self.num!r}) / ({self.den!r})"

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, reduced=True)

    def __mul__(self, other) -> "RatFunc":
        if isinstance(other, FieldElement):
            return RatFunc(self.num.scale(other), self.den)
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def scale(self, c) -> "RatFunc":
        return RatFunc(self.num.scale(c), self.den, reduced=True)

    def derivative(self) -> "RatFunc":
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_polynomial(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{self!r} has poles")
        return self.num

    # -- evaluation on P^1 -----------------------------------------------------------

    def proj_eval(self, point: ProjPoint) -> ProjPoint:
        """Value at a projective point; poles map to infinity, and the value
        at infinity is read off via the coordinate swap s = 1/t."""
        field = self.field
        if point.is_infinity:
            dn, dd = self.num.degree, self.den.degree
            if self.num.is_zero():
                return ProjPoint(field, 0)
            if dn > dd:
                return ProjPoint.infinity(field)
            if dn < dd:
                return ProjPoint(field, 0)
            v = field.mul_codes(self.num.lead().code, field.inv_code(self.den.lead().code))
            return ProjPoint(field, v)
        d = self.den.eval_code(point.code)
        if d == 0:
            return ProjPoint.infinity(field)
        n = self.num.eval_code(point.code)
        return ProjPoint(field, field.mul_codes(n, field.inv_code(d)))


# ---------------------------------------------------------------------------
# The Moebius action
# ---------------------------------------------------------------------------

def _as_matrix_codes(field: Field, sigma):
    m = [[field.element(sigma[i][j]).code for j in range(2)] for i in range(2)]
    a, b = m[0]
    c, d = m[1]
    det = field.sub_codes(field.mul_codes(a, d), field.mul_codes(b, c))
    if det == 0:
        raise ValueError("singular matrix does not define a Moebius transformation")
    return a, b, c, d


def moebius_apply_point(field: Field, sigma, point: ProjPoint) -> ProjPoint:
    """Apply (a t + b)/(c t + d) to a point of P^1."""
    a, b, c, d = _as_matrix_codes(field, sigma)
    if point.is_infinity:
        if c == 0:
            return ProjPoint.infinity(field)
        return ProjPoint(field, field.mul_codes(a, field.inv_code(c)))
    x = point.code
    den = field.add_codes(field.mul_codes(c, x), d)
    if den == 0:
        return ProjPoint.infinity(field)
    num = field.add_codes(field.mul_codes(a, x), b)
    return ProjPoint(field, field.mul_codes(num, field.inv_code(den)))


def moebius_inverse(field: Field, sigma):
    a, b, c, d = _as_matrix_codes(field, sigma)
    return ((d, field.neg_code(b)), (field.neg_code(c), a))


def moebius_conjugate(f: RatFunc, sigma, side: str = "post") -> RatFunc:
    """sigma o f (side="post") or f o sigma (side="pre"), in normal form.

    The degree of f is preserved either way.
    """
    field = f.field
    a, b, c, d = _as_matrix_codes(field, sigma)
    ea, eb = Poly(field, [a]), Poly(field, [b])
    ec, ed = Poly(field, [c]), Poly(field, [d])
    if side == "post":
        num = ea * f.num + eb * f.den
        den = ec * f.num + ed * f.den
        # an invertible matrix cannot introduce a common factor
        return RatFunc(num, den, reduced=True)
    if side == "pre":
        D = f.degree
        top = Poly(field, [b, a])      # a t + b
        bot = Poly(field, [d, c])      # c t + d
        top_pow = [Poly.one(field)]
        bot_pow = [Poly.one(field)]
        for _ in range(D):
            top_pow.append(top_pow[-1] * top)
            bot_pow.append(bot_pow[-1] * bot)
        num = Poly.zero(field)
        den = Poly.zero(field)
        for i in range(D + 1):
            basis = top_pow[i] * bot_pow[D - i]
            ci = f.num.coeff(i)
            if ci.code != 0:
                num = num + basis.scale(ci)
            ci = f.den.coeff(i)
            if ci.code != 0:
                den = den + basis.scale(ci)
        # substitution into coprime homogeneous forms stays coprime
        return RatFunc(num, den, reduced=True)
    raise ValueError(f"side must be 'pre' or 'post', got {side!r}")
