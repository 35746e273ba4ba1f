"""Counts of self-maps of P^1 with prescribed tame ramification.

Three routes to the same number, kept deliberately independent so they can
cross-check each other:

* a memoized recursion that peels the last two ramification indices off the
  profile, summing over the degree d' of the peeled-off piece;
* a left-to-right dynamic program over the node indices of the degenerate
  chain encoding of the same count;
* explicit enumeration of all valid node-index insertions.

Counts are exact integers.  The kernels compute the chain counts in int64;
they are only used when a crude upper bound fits, otherwise the pure-Python
big-integer DP takes over.

Closed forms: the 3-point dormant count (p^3 - p)/24 and the genus-2
Frobenius-unstable count 2(p^3 - p)/3 = 16 * (p^3 - p)/24.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from ramlab import _kernels
from ramlab.fields import is_prime


def profile_degree(entries) -> int:
    """d = (sum(e_i - 1) + 2) / 2; raises if the parity is wrong."""
    s = sum(e - 1 for e in entries)
    if s % 2 != 0:
        raise ValueError(
            f"profile {tuple(entries)} violates Riemann-Hurwitz parity: sum(e_i - 1) is odd")
    return s // 2 + 1


@dataclass(frozen=True)
class Profile:
    """Ramification indices (e_1, ..., e_n) for a prime p, n >= 3."""

    p: int
    entries: tuple

    def __init__(self, p: int, entries):
        entries = tuple(int(e) for e in entries)
        if not is_prime(p) or p == 2:
            raise ValueError(f"p must be an odd prime, got {p}")
        if len(entries) < 3:
            raise ValueError("a profile needs at least 3 indices")
        for e in entries:
            if not 1 <= e < p:
                raise ValueError(f"index {e} out of the tame range [1, {p - 1}]")
        profile_degree(entries)  # validates parity
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def degree(self) -> int:
        return profile_degree(self.entries)

    def __iter__(self):
        return iter(self.entries)


def triple_admissible(e1: int, e2: int, e3: int, p: int) -> bool:
    """Strict triangle inequality, odd sum, and sum < 2p + 1.

    Equivalently: with d = (e1 + e2 + e3 - 1)/2, every index is <= d and
    p > d, which is the 3-point base case of the count.
    """
    s = e1 + e2 + e3
    if s % 2 == 0 or s >= 2 * p + 1:
        return False
    return e1 < e2 + e3 and e2 < e1 + e3 and e3 < e1 + e2


@functools.lru_cache(maxsize=None)
def _ngen(p: int, entries: tuple) -> int:
    # internal entries may exceed p - 1: peeled-off node indices range in
    # [1, 2p - 3] even though user profiles are capped below p
    n = len(entries)
    if n == 3:
        return 1 if triple_admissible(entries[0], entries[1], entries[2], p) else 0
    d = profile_degree(entries)
    em, en = entries[-2], entries[-1]
    lo = max(d - em + 1, d - en + 1)
    hi = min(d, p + d - em - en)
    total = 0
    for dp in range(lo, hi + 1):
        e = 2 * dp - 2 * d + em + en - 1
        total += _ngen(p, entries[:-2] + (e,))
    return total


def n_gen_recursive(profile: Profile) -> int:
    """The peeling recursion, memoized on the ordered index tuple."""
    return _ngen(profile.p, profile.entries)


def _chain_triples(entries, xs):
    """Component triples of the chain e1, e2, x1, e3, x2, ..., e_{n-1}, e_n."""
    n = len(entries)
    if n == 3:
        return [tuple(entries)]
    triples = [(entries[0], entries[1], xs[0])]
    for j in range(1, n - 3):
        triples.append((xs[j - 1], entries[j + 1], xs[j]))
    triples.append((xs[-1], entries[n - 2], entries[n - 1]))
    return triples


def chain_insertions(profile: Profile):
    """Yield every valid node-index tuple (x_1, ..., x_{n-3})."""
    p, entries = profile.p, profile.entries
    n = len(entries)
    if n == 3:
        if triple_admissible(*entries, p):
            yield ()
        return
    X = 2 * p - 3
    for xs in itertools.product(range(1, X + 1), repeat=n - 3):
        if all(triple_admissible(a, b, c, p) for a, b, c in _chain_triples(entries, xs)):
            yield xs


def _chain_dp_python(entries, p: int) -> int:
    """Big-integer chain DP; no overflow, used past the int64 bound."""
    n = len(entries)
    if n == 3:
        return 1 if triple_admissible(entries[0], entries[1], entries[2], p) else 0
    X = 2 * p - 3
    v = [0] * (X + 1)
    for x in range(1, X + 1):
        if triple_admissible(entries[0], entries[1], x, p):
            v[x] = 1
    for j in range(2, n - 2):
        w = [0] * (X + 1)
        for y in range(1, X + 1):
            w[y] = sum(v[x] for x in range(1, X + 1)
                       if v[x] and triple_admissible(x, entries[j], y, p))
        v = w
    return sum(v[x] for x in range(1, X + 1)
               if v[x] and triple_admissible(x, entries[n - 2], entries[n - 1], p))


def n_gen_chain(profile: Profile, mode: str = "count"):
    """Chain count of the profile.

    mode="count": dynamic program over node indices (kernel-backed while the
    crude bound (2p-3)^(n-3) fits in int64, exact big-int Python otherwise).
    mode="enumerate": explicit enumeration; returns (count, list of node
    index tuples).
    """
    p, entries = profile.p, profile.entries
    if mode == "enumerate":
        chains = list(chain_insertions(profile))
        return len(chains), chains
    if mode != "count":
        raise ValueError(f"mode must be 'count' or 'enumerate', got {mode!r}")
    n = len(entries)
    X = 2 * p - 3
    if n == 3 or X ** (n - 3) < 2 ** 62:
        return int(_kernels.chain_count_dp(np.array(entries, dtype=np.int64), p))
    return _chain_dp_python(entries, p)


def n_gen_chain_enum_count(profile: Profile) -> int:
    """Kernel-backed enumeration count (cross-validation route)."""
    return int(_kernels.chain_count_enum(np.array(profile.entries, dtype=np.int64), profile.p))


# ---------------------------------------------------------------------------
# Parity variants and the radius <-> index dictionary
# ---------------------------------------------------------------------------

def parity_variants(profile: Profile):
    """Profiles with e_i replaced by p - e_i on every even-size position set.

    Requires every index odd (so each has a radius (p - e_i)/2); returns the
    2^(n-1) variants sorted, the untouched profile included.
    """
    p, entries = profile.p, profile.entries
    for e in entries:
        if e % 2 == 0:
            raise ValueError(f"index {e} is even; parity variants need odd indices")
    n = len(entries)
    out = []
    for mask in range(1 << n):
        if bin(mask).count("1") % 2 != 0:
            continue
        new = tuple(p - e if (mask >> i) & 1 else e for i, e in enumerate(entries))
        out.append(new)
    out.sort()
    return [Profile(p, e) for e in out]


@dataclass(frozen=True)
class RadiusIndexPair:
    """rho in (0, p/2) paired with the odd ramification index e = p - 2 rho.

    e_even is the parity-replacement partner 2 rho = p - e.
    """

    p: int
    rho: int
    e: int

    @property
    def e_even(self) -> int:
        return 2 * self.rho


def radius_index_pair(p: int, rho: int | None = None, e: int | None = None) -> RadiusIndexPair:
    """Convert between a radius and its odd ramification index."""
    if (rho is None) == (e is None):
        raise ValueError("give exactly one of rho and e")
    if rho is not None:
        if not 0 < rho < p / 2:
            raise ValueError(f"rho must satisfy 0 < rho < p/2, got {rho}")
        return RadiusIndexPair(p, rho, p - 2 * rho)
    if e % 2 == 0 or not 1 <= e <= p - 2:
        raise ValueError(f"index must be odd in [1, {p - 2}], got {e}")
    return RadiusIndexPair(p, (p - e) // 2, e)


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def dormant_3pt_count(p: int) -> int:
    """(p^3 - p)/24: dormant count over the 3-pointed line."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    v, r = divmod(p ** 3 - p, 24)
    assert r == 0
    return v


def genus2_frobenius_count(p: int) -> int:
    """2(p^3 - p)/3: Frobenius-unstable bundle count on a general genus-2 curve."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    v, r = divmod(2 * (p ** 3 - p), 3)
    assert r == 0
    assert v == 16 * dormant_3pt_count(p)
    return v


def selfmap_total(r: int, dormant_count: int) -> int:
    """2^(r-1) times a dormant count: all parity variants together."""
    if r < 3:
        raise ValueError(f"r must be >= 3, got {r}")
    return (1 << (r - 1)) * dormant_count


# ---------------------------------------------------------------------------
# Profile sweeps
# ---------------------------------------------------------------------------

def iter_profiles(p: int, n: int):
    """All valid (parity-even) profiles of length n with entries in [1, p-2]."""
    for entries in itertools.product(range(1, p - 1), repeat=n):
        if sum(e - 1 for e in entries) % 2 == 0:
            yield Profile(p, entries)


def odd_profiles(p: int, n: int = 3):
    """All profiles of length n with odd entries in {1, 3, ..., p-2}."""
    for entries in itertools.product(range(1, p - 1, 2), repeat=n):
        yield Profile(p, entries)


def dormant_sum(p: int) -> int:
    """Sum of counts over ordered odd 3-profiles; equals (p^3 - p)/24."""
    return sum(n_gen_recursive(pr) for pr in odd_profiles(p, 3))
