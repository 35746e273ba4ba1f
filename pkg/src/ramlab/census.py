"""Brute-force census of self-maps of P^1 with a prescribed tame profile.

The search is organized by critical-value pattern: post-composition is used
to pin the values at the first three marked points, which splits the hunt
into five branches by the coincidence pattern of those values
(all distinct -> (0, inf, 1); one coincidence -> (0, 0, inf) and its two
rearrangements; all equal -> (0, 0, 0)).  The pattern is an orbit invariant
and PGL2 is sharply 3-transitive, so every orbit is reached in exactly one
branch.  Within a branch the pinned values become divisibility constraints
and the numerator/denominator cofactors are scanned by kernel; survivors
are re-verified against the profile at the object level, canonicalized and
deduplicated.

An exhaustive mode scans every scalar-normalized coefficient pair instead;
it is the independent oracle for the pruned parametrization on small
fields.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ramlab import _kernels
from ramlab.fields import Field
from ramlab.pgl2 import canonical_form, orbit_size
from ramlab.poly import Poly
from ramlab.ratfunc import RatFunc, moebius_conjugate, moebius_inverse
from ramlab.ratmaps import RamProfile, check_profile

DEFAULT_BUDGET = 10_000_000
_MAX_SURVIVOR_ROWS = 200_000


@dataclass(frozen=True)
class CensusResult:
    p: int
    k: int
    profile: RamProfile
    orbit_count: int | None
    representatives: tuple
    raw_count: int | None
    wild_rejections: int
    candidates: int
    status: str
    method: str

    @property
    def complete(self) -> bool:
        return self.status == "complete"


def _relocation(field: Field, profile: RamProfile):
    """Move a profile containing infinity into the affine chart.

    Returns (points, tau) with tau the source change of coordinate such that
    maps with the original profile are exactly (relocated maps) o tau^{-1}.
    """
    p = profile.p
    if all(P is not None for P in profile.points):
        return list(profile.points), None
    finite = {P for P in profile.points if P is not None}
    c = next((x for x in range(p) if x not in finite), None)
    if c is None:
        raise ValueError("no free point of GF(p) left to relocate infinity")
    # tau(t) = (c t + 1)/t sends 0 to infinity and infinity to c
    tau = ((c, 1), (1, 0))
    pts = []
    for P in profile.points:
        if P is None:
            pts.append(0)
        else:
            pts.append(pow((P - c) % p, p - 2, p))  # tau^{-1}(P) = 1/(P - c)
    return pts, tau


_BRANCHES = (
    ({0}, {1}, (2,)),      # values (0, inf, 1)
    ({0, 1}, {2}, ()),     # values (0, 0, inf)
    ({0, 2}, {1}, ()),     # values (0, inf, 0)
    ({1, 2}, {0}, ()),     # values (inf, 0, 0)
    ({0, 1, 2}, set(), ()),  # values (0, 0, 0)
)


def _padded_profile(p: int, points, orders):
    """Ensure at least three marked points by adding unramified ones.

    Unramified marked points constrain nothing a valid map does not already
    satisfy, so the map set and orbit count are unchanged; they only anchor
    the critical-value normalization."""
    orders = list(orders)
    pts = list(points)
    used = set(pts)
    x = 0
    while len(pts) < 3:
        while x in used:
            x += 1
        if x >= p:
            raise ValueError("field too small to pad the profile to three points")
        pts.append(x)
        used.add(x)
        orders.append(1)
    return pts, orders


def census(p: int, k: int, profile: RamProfile, budget: int = DEFAULT_BUDGET,
           method: str = "pruned") -> CensusResult:
    """Count maps with the given profile over GF(p^k) modulo post-composition.

    Deterministic for fixed inputs; representatives are sorted canonical
    forms satisfying the profile exactly.
    """
    if profile.p != p:
        raise ValueError("profile characteristic does not match p")
    field = Field(p, k)
    d = profile.degree
    reloc_pts, tau = _relocation(field, profile)
    tau_inv = moebius_inverse(field, tau) if tau is not None else None
    reloc_profile = RamProfile(p, reloc_pts, profile.orders)

    if method == "pruned":
        rows, candidates, complete = _pruned_scan(field, d, reloc_pts, profile.orders, budget)
    elif method == "exhaustive":
        rows, candidates, complete = _exhaustive_scan(field, d, reloc_pts, profile.orders, budget)
    else:
        raise ValueError(f"method must be 'pruned' or 'exhaustive', got {method!r}")

    if not complete:
        return CensusResult(p, k, profile, None, (), None, 0, candidates,
                            "incomplete(budget)", method)

    wild = 0
    raw_exhaustive = 0
    canon = {}
    L = d + 1
    for row in rows:
        f = RatFunc(Poly(field, row[:L]), Poly(field, row[L:]))
        if f.degree != d:
            continue  # pair had a common factor: not a degree-d map
        ok = check_profile(f, reloc_profile)
        if not ok.ok:
            if ok.wild:
                wild += 1
            continue
        raw_exhaustive += 1
        if tau_inv is not None:
            f = moebius_conjugate(f, tau_inv, side="pre")
        g = canonical_form(f)
        canon[(g.num, g.den)] = g

    reps = tuple(g for _, g in sorted(
        canon.items(), key=lambda kv: (tuple(kv[0][0].coeffs), tuple(kv[0][1].coeffs))))
    if method == "exhaustive":
        raw = raw_exhaustive
    else:
        raw = sum(orbit_size(g) for g in reps)
    return CensusResult(p, k, profile, len(reps), reps, raw, wild, candidates,
                        "complete", method)


def _pruned_scan(field: Field, d: int, points, orders, budget: int):
    q, p = field.q, field.p
    add_t, mul_t, neg_t, inv_t = field.tables()
    pts, ords = _padded_profile(p, points, orders)
    L = d + 1
    out = np.empty((min(_MAX_SURVIVOR_ROWS, max(budget, 1)), 2 * L), dtype=np.int64)
    rows = []
    candidates = 0
    free_pts = np.array(pts[3:], dtype=np.int64)
    free_ords = np.array(ords[3:], dtype=np.int64)
    for zero_ix, inf_ix, one_ix in _BRANCHES:
        g0 = Poly.one(field)
        for i in zero_ix:
            g0 = g0 * Poly.linear_power(field, pts[i], ords[i])
        ginf = Poly.one(field)
        for i in inf_ix:
            ginf = ginf * Poly.linear_power(field, pts[i], ords[i])
        if g0.degree > d or ginf.degree > d:
            continue
        pts01 = np.array([pts[i] for i in sorted(zero_ix | inf_ix)], dtype=np.int64)
        one_pts = np.array([pts[i] for i in one_ix], dtype=np.int64)
        one_ords = np.array([ords[i] for i in one_ix], dtype=np.int64)
        max_a = d - int(g0.degree)
        max_b = d - int(ginf.degree)
        for deg_a in range(max_a + 1):
            for deg_b in range(max_b + 1):
                if max(int(g0.degree) + deg_a, int(ginf.degree) + deg_b) != d:
                    continue
                total = (q - 1) * q ** (deg_a + deg_b)
                if candidates + total > budget:
                    return rows, candidates, False
                candidates += total
                n = _kernels.branch_scan(
                    q, d, p, g0.padded(int(g0.degree) + 1), ginf.padded(int(ginf.degree) + 1),
                    deg_a, deg_b, pts01, one_pts, one_ords, free_pts, free_ords,
                    add_t, mul_t, inv_t, neg_t, out)
                if n < 0:
                    return rows, candidates, False
                rows.extend(out[i].copy() for i in range(n))
    return rows, candidates, True


def _exhaustive_scan(field: Field, d: int, points, orders, budget: int):
    q, p = field.q, field.p
    add_t, mul_t, neg_t, inv_t = field.tables()
    L = d + 1
    out = np.empty((min(_MAX_SURVIVOR_ROWS, max(budget, 1)), 2 * L), dtype=np.int64)
    pts = np.array(points, dtype=np.int64)
    ords = np.array(orders, dtype=np.int64)
    rows = []
    candidates = 0
    for phase in (0, 1):
        total = q ** d * q ** (L if phase == 0 else d)
        if candidates + total > budget:
            return rows, candidates, False
        candidates += total
        n = _kernels.exhaustive_scan(q, d, p, pts, ords, phase,
                                     add_t, mul_t, inv_t, neg_t, out)
        if n < 0:
            return rows, candidates, False
        rows.extend(out[i].copy() for i in range(n))
    return rows, candidates, True


def census_sweep(p: int, profile: RamProfile, kmax: int,
                 budget: int = DEFAULT_BUDGET):
    """Per-extension-degree censuses k = 1..kmax (geometric stabilization)."""
    return [census(p, k, profile, budget=budget) for k in range(1, kmax + 1)]
