"""Ramification of separable self-maps of the projective line.

A self-map is a RatFunc of degree >= 1.  Local ramification orders are read
off after Moebius moves sending the source point and its image to 0; wild
behavior (order >= p, or p dividing the order) is flagged, never silently
mixed into tame counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from ramlab.fields import Field
from ramlab.poly import Poly
from ramlab.ratfunc import ProjPoint, RatFunc, moebius_conjugate


class RamOrder(NamedTuple):
    order: int
    wild: bool


def wronskian(f: RatFunc) -> Poly:
    """num' den - num den'; nonzero exactly when f is separable."""
    return f.num.derivative() * f.den - f.num * f.den.derivative()


def is_separable(f: RatFunc) -> bool:
    if f.is_constant():
        raise ValueError("separability is about nonconstant maps")
    return not wronskian(f).is_zero()


def ram_order(f: RatFunc, point: ProjPoint) -> RamOrder:
    """Order of vanishing of f - f(P) at P; wild when p | e or e >= p."""
    if f.is_constant():
        raise ValueError("ramification order of a constant map is undefined")
    field = f.field
    if point.is_infinity:
        f = moebius_conjugate(f, ((0, 1), (1, 0)), side="pre")  # t -> 1/t
        point = ProjPoint(field, 0)
    v = f.proj_eval(point)
    if v.is_infinity:
        g = f.den
    else:
        g = f.num - f.den.scale(v.value)
    e = g.root_multiplicity(point.code)
    p = field.p
    return RamOrder(e, e >= p or e % p == 0)


class ProfileCheck(NamedTuple):
    ok: bool
    wild: bool
    reason: str


@dataclass(frozen=True)
class RamProfile:
    """Marked points with prescribed ramification orders over GF(p).

    Points are codes of the prime field, with None for infinity; orders obey
    1 <= e < p and sum(e_i - 1) must be even so the degree is an integer.
    """

    p: int
    points: tuple      # int codes and/or None
    orders: tuple

    def __init__(self, p, points, orders):
        points = tuple(points)
        orders = tuple(int(e) for e in orders)
        if len(points) != len(orders):
            raise ValueError("points and orders must have equal length")
        if len(points) == 0:
            raise ValueError("a profile needs at least one marked point")
        seen = set()
        for P in points:
            if P is not None and not 0 <= P < p:
                raise ValueError(f"point {P} is not in GF({p}) (use None for infinity)")
            if P in seen:
                raise ValueError("marked points must be pairwise distinct")
            seen.add(P)
        for e in orders:
            if not 1 <= e < p:
                raise ValueError(f"order {e} outside the tame range [1, {p - 1}]")
        s = sum(e - 1 for e in orders)
        if s % 2 != 0:
            raise ValueError("profile violates Riemann-Hurwitz parity: sum(e_i - 1) is odd")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "orders", orders)

    @property
    def degree(self) -> int:
        return sum(e - 1 for e in self.orders) // 2 + 1

    def proj_points(self, field: Field):
        """The marked points as ProjPoints of the (possibly extended) field."""
        if field.p != self.p:
            raise ValueError("field has the wrong characteristic")
        return tuple(
            ProjPoint.infinity(field) if P is None else ProjPoint(field, P)
            for P in self.points
        )


def check_profile(f: RatFunc, profile: RamProfile) -> ProfileCheck:
    """Exact ramification orders e_i at the P_i, all tame, degree d.

    With sum(e_i - 1) = 2d - 2 (a profile invariant), a separable map
    passing these checks has no other ramification, by Riemann-Hurwitz.
    """
    field = f.field
    if not is_separable(f):
        return ProfileCheck(False, True, "inseparable")
    for P, e in zip(profile.proj_points(field), profile.orders):
        o = ram_order(f, P)
        if o.wild:
            return ProfileCheck(False, True, f"wild ramification of order {o.order} at {P!r}")
        if o.order != e:
            return ProfileCheck(False, False, f"order {o.order} != {e} at {P!r}")
    if f.degree != profile.degree:
        return ProfileCheck(False, False, f"degree {f.degree} != {profile.degree}")
    return ProfileCheck(True, False, "")


@dataclass(frozen=True)
class HurwitzAudit:
    ok: bool
    wronskian_degree: int
    leftover_degree: int
    orders: tuple
    reason: str


def riemann_hurwitz_audit(f: RatFunc, profile: RamProfile) -> HurwitzAudit:
    """Independent check that the ramification divisor sits entirely on the
    marked points, by factoring the Wronskian.

    Each finite marked point must divide the Wronskian to order exactly
    e_i - 1; what is left must be a nonzero constant, and the Wronskian
    degree must account for infinity: 2d - 2 minus (e_inf - 1) when infinity
    is marked, exactly 2d - 2 otherwise.
    """
    field = f.field
    W = wronskian(f)
    if W.is_zero():
        return HurwitzAudit(False, -1, -1, (), "inseparable: Wronskian vanishes")
    d = f.degree
    orders = tuple(ram_order(f, P) for P in profile.proj_points(field))
    if any(o.wild for o in orders):
        return HurwitzAudit(False, int(W.degree), -1, orders, "wild ramification at a marked point")
    if tuple(o.order for o in orders) != profile.orders:
        return HurwitzAudit(False, int(W.degree), -1, orders, "marked orders do not match")
    expected_deg = 2 * d - 2
    rest = W
    for P, e in zip(profile.points, profile.orders):
        if P is None:
            expected_deg -= e - 1
            continue
        for _ in range(e - 1):
            quotient, rem = rest.divide_linear(P)
            if rem != 0:
                return HurwitzAudit(False, int(W.degree), -1, orders,
                                    f"Wronskian order at {P} below {e - 1}")
            rest = quotient
        _, rem = rest.divide_linear(P)
        if rem == 0:
            return HurwitzAudit(False, int(W.degree), -1, orders,
                                f"Wronskian order at {P} above {e - 1}")
    if int(W.degree) != expected_deg:
        return HurwitzAudit(False, int(W.degree), int(rest.degree), orders,
                            f"Wronskian degree {W.degree} != {expected_deg}: "
                            "ramification away from the marked points")
    if rest.degree != 0:
        return HurwitzAudit(False, int(W.degree), int(rest.degree), orders,
                            "leftover Wronskian factor: unaccounted finite ramification")
    return HurwitzAudit(True, int(W.degree), 0, orders, "")
