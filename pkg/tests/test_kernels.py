"""Pin the numba and numpy kernel implementations to each other."""

import random

import numpy as np
import pytest

from ramlab._kernels import get_impl
from ramlab.backend import numba_available
from ramlab.counting import iter_profiles, n_gen_recursive
from ramlab.poly import Poly
from ramlab.ratfunc import RatFunc

IMPLS = ["numpy"] + (["numba"] if numba_available() else [])
npk = get_impl("numpy")
nbk = get_impl("numba") if numba_available() else None

needs_numba = pytest.mark.skipif(nbk is None, reason="numba unavailable")


def rand_map(F, rng, max_deg=3):
    while True:
        num = Poly(F, [rng.randrange(F.q) for _ in range(rng.randint(1, max_deg + 1))])
        den = Poly(F, [rng.randrange(F.q) for _ in range(rng.randint(1, max_deg + 1))])
        if num.is_zero() or den.is_zero():
            continue
        f = RatFunc(num, den)
        if f.degree >= 1:
            return f


@needs_numba
def test_chain_kernels_agree():
    rng = random.Random(41)
    for _ in range(120):
        p = rng.choice((5, 7, 11, 13))
        n = rng.randint(3, 6)
        e = np.array([rng.randint(1, p - 1) for _ in range(n)], dtype=np.int64)
        assert npk.chain_count_dp(e, p) == nbk.chain_count_dp(e, p)
        assert npk.chain_count_enum(e, p) == nbk.chain_count_enum(e, p)
        assert npk.chain_count_dp(e, p) == npk.chain_count_enum(e, p)


@needs_numba
def test_chain_kernels_match_recursion():
    for p in (5, 7):
        for prof in iter_profiles(p, 4):
            e = np.array(prof.entries, dtype=np.int64)
            expect = n_gen_recursive(prof)
            assert nbk.chain_count_dp(e, p) == expect
            assert npk.chain_count_dp(e, p) == expect


@needs_numba
def test_pgl2_kernels_agree(field):
    rng = random.Random(42)
    for p, k in [(5, 1), (7, 1), (3, 2)]:
        F = field(p, k)
        add_t, mul_t, neg_t, inv_t = F.tables()
        for _ in range(6):
            f = rand_map(F, rng)
            L = f.degree + 1
            num, den = f.num.padded(L), f.den.padded(L)
            a = npk.pgl2_min_vec(num, den, F.q, add_t, mul_t, inv_t)
            b = nbk.pgl2_min_vec(num, den, F.q, add_t, mul_t, inv_t)
            assert np.array_equal(a, b)
            sa = npk.pgl2_stab_count(num, den, F.q, add_t, mul_t, inv_t)
            sb = nbk.pgl2_stab_count(num, den, F.q, add_t, mul_t, inv_t)
            assert sa == sb


@needs_numba
def test_scan_kernels_agree(field):
    F = field(5)
    add_t, mul_t, neg_t, inv_t = F.tables()
    d = 3
    g0 = Poly.linear_power(F, 3, 2).padded(3)       # (t-3)^2
    ginf = Poly.linear_power(F, 4, 2).padded(3)     # (t-4)^2
    pts01 = np.array([3, 4], dtype=np.int64)
    one_pts = np.array([0], dtype=np.int64)
    one_ords = np.array([3], dtype=np.int64)
    empty = np.zeros(0, dtype=np.int64)
    out_a = np.empty((512, 2 * (d + 1)), dtype=np.int64)
    out_b = np.empty((512, 2 * (d + 1)), dtype=np.int64)
    for deg_a, deg_b in ((1, 1), (0, 1), (1, 0)):
        na = npk.branch_scan(5, d, 5, g0, ginf, deg_a, deg_b, pts01, one_pts, one_ords,
                             empty, empty, add_t, mul_t, inv_t, neg_t, out_a)
        nb = nbk.branch_scan(5, d, 5, g0, ginf, deg_a, deg_b, pts01, one_pts, one_ords,
                             empty, empty, add_t, mul_t, inv_t, neg_t, out_b)
        assert na == nb
        assert np.array_equal(out_a[:na], out_b[:nb])


@needs_numba
def test_scan_kernels_with_free_points_agree(field):
    # degree-3 maps with order 2 at 0 (value 0), order 2 at 1 (value inf),
    # order 3 at the free marked point 2: sum(e_i - 1) = 4 = 2d - 2
    F = field(5)
    add_t, mul_t, neg_t, inv_t = F.tables()
    d = 3
    g0 = Poly.linear_power(F, 0, 2).padded(3)
    ginf = Poly.linear_power(F, 1, 2).padded(3)
    pts01 = np.array([0, 1], dtype=np.int64)
    empty = np.zeros(0, dtype=np.int64)
    free_pts = np.array([2], dtype=np.int64)
    free_ords = np.array([3], dtype=np.int64)
    out_a = np.empty((512, 2 * (d + 1)), dtype=np.int64)
    out_b = np.empty((512, 2 * (d + 1)), dtype=np.int64)
    found = 0
    for deg_a, deg_b in ((1, 1), (1, 0), (0, 1)):
        na = npk.branch_scan(5, d, 5, g0, ginf, deg_a, deg_b, pts01, empty, empty,
                             free_pts, free_ords, add_t, mul_t, inv_t, neg_t, out_a)
        nb = nbk.branch_scan(5, d, 5, g0, ginf, deg_a, deg_b, pts01, empty, empty,
                             free_pts, free_ords, add_t, mul_t, inv_t, neg_t, out_b)
        assert na == nb
        assert np.array_equal(out_a[:na], out_b[:nb])
        found += na
    assert found > 0


@needs_numba
def test_exhaustive_kernels_agree(field):
    F = field(5)
    add_t, mul_t, neg_t, inv_t = F.tables()
    d = 2
    pts = np.array([0, 1, 2], dtype=np.int64)
    ords = np.array([2, 2, 1], dtype=np.int64)
    for phase in (0, 1):
        out_a = np.empty((4096, 2 * (d + 1)), dtype=np.int64)
        out_b = np.empty((4096, 2 * (d + 1)), dtype=np.int64)
        na = npk.exhaustive_scan(5, d, 5, pts, ords, phase, add_t, mul_t, inv_t, neg_t, out_a)
        nb = nbk.exhaustive_scan(5, d, 5, pts, ords, phase, add_t, mul_t, inv_t, neg_t, out_b)
        assert na == nb
        assert np.array_equal(out_a[:na], out_b[:nb])


@needs_numba
def test_overflow_sentinel():
    F = None
    from ramlab.fields import Field
    F = Field(5)
    add_t, mul_t, neg_t, inv_t = F.tables()
    d = 2
    pts = np.array([0], dtype=np.int64)
    ords = np.array([1], dtype=np.int64)
    tiny = np.empty((1, 2 * (d + 1)), dtype=np.int64)
    assert npk.exhaustive_scan(5, d, 5, pts, ords, 0, add_t, mul_t, inv_t, neg_t, tiny) == -1
    assert nbk.exhaustive_scan(5, d, 5, pts, ords, 0, add_t, mul_t, inv_t, neg_t, tiny) == -1


@needs_numba
def test_census_identical_across_backends(monkeypatch):
    import ramlab.census as census_mod
    from ramlab.ratmaps import RamProfile

    cases = [
        (5, 1, (0, 1, None), (2, 2, 3)),
        (7, 1, (0, 1, 2, None), (3, 3, 3, 3)),
        (3, 2, (0, 1, None), (2, 2, 1)),
    ]
    for p, k, pts, orders in cases:
        prof = RamProfile(p, pts, orders)
        results = {}
        for name, impl in (("numpy", npk), ("numba", nbk)):
            monkeypatch.setattr(census_mod, "_kernels", impl)
            r = census_mod.census(p, k, prof)
            results[name] = (r.orbit_count, r.raw_count, r.candidates,
                             [(tuple(g.num.coeffs), tuple(g.den.coeffs))
                              for g in r.representatives])
        assert results["numpy"] == results["numba"]


@needs_numba
def test_branch_scan_parity_randomized(field):
    rng = random.Random(44)
    for _ in range(25):
        p = rng.choice((5, 7))
        F = field(p)
        add_t, mul_t, neg_t, inv_t = F.tables()
        d = rng.randint(2, 5)
        pts = rng.sample(range(p), 3)
        e0 = rng.randint(1, min(p - 1, d))
        e1 = rng.randint(1, min(p - 1, d))
        g0 = Poly.linear_power(F, pts[0], e0)
        ginf = Poly.linear_power(F, pts[1], e1)
        if g0.degree > d or ginf.degree > d:
            continue
        deg_a = rng.randint(0, d - int(g0.degree))
        deg_b = rng.randint(0, d - int(ginf.degree))
        pts01 = np.array(pts[:2], dtype=np.int64)
        one_pts = np.array(pts[2:], dtype=np.int64)
        one_ords = np.array([rng.randint(1, min(p - 1, d))], dtype=np.int64)
        empty = np.zeros(0, dtype=np.int64)
        out_a = np.empty((20000, 2 * (d + 1)), dtype=np.int64)
        out_b = np.empty((20000, 2 * (d + 1)), dtype=np.int64)
        args = (F.q, d, p, g0.padded(int(g0.degree) + 1), ginf.padded(int(ginf.degree) + 1),
                deg_a, deg_b, pts01, one_pts, one_ords, empty, empty,
                add_t, mul_t, inv_t, neg_t)
        na = npk.branch_scan(*args, out_a)
        nb = nbk.branch_scan(*args, out_b)
        assert na == nb
        assert np.array_equal(out_a[:na], out_b[:nb])


def test_backend_env_selection(monkeypatch):
    import importlib
    import ramlab.backend as backend
    monkeypatch.setenv("RAMLAB_BACKEND", "numpy")
    importlib.reload(backend)
    assert backend.active_backend() == "numpy"
    monkeypatch.setenv("RAMLAB_BACKEND", "bogus")
    importlib.reload(backend)
    with pytest.raises(ValueError):
        backend.active_backend()
    monkeypatch.delenv("RAMLAB_BACKEND")
    importlib.reload(backend)
    assert backend.active_backend() in ("numba", "numpy")
