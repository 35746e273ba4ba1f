import random

import pytest

from ramlab.poly import Poly
from ramlab.ratfunc import ProjPoint, RatFunc, moebius_apply_point, moebius_conjugate


def rand_map(F, rng, max_deg=4):
    while True:
        num = Poly(F, [rng.randrange(F.q) for _ in range(rng.randint(1, max_deg + 1))])
        den = Poly(F, [rng.randrange(F.q) for _ in range(rng.randint(1, max_deg + 1))])
        if num.is_zero() or den.is_zero():
            continue
        f = RatFunc(num, den)
        if f.degree >= 1:
            return f


def test_normal_form(field):
    F5 = field(5)
    f = RatFunc.from_ints(F5, [2, 2], [4, 0, 4])   # 2(t+1) / 4(t^2+1)... reduces
    assert f.den.lead().code == 1
    from ramlab.poly import poly_gcd
    g = poly_gcd(f.num, f.den)
    assert g.degree == 0
    # (t-1)(t+1) / (t-1) -> t+1
    h = RatFunc.from_ints(F5, [-1, 0, 1], [-1, 1])
    assert h == RatFunc.from_ints(F5, [1, 1])


def test_proj_eval_examples(field):
    F5 = field(5)
    inv_t = RatFunc.from_ints(F5, [1], [0, 1])          # 1/t
    assert inv_t.proj_eval(ProjPoint(F5, 0)).is_infinity
    sq = RatFunc.from_ints(F5, [0, 0, 1])               # t^2
    assert sq.proj_eval(ProjPoint.infinity(F5)).is_infinity
    f = RatFunc.from_ints(F5, [-1, 1], [1, 1])          # (t-1)/(t+1)
    assert f.proj_eval(ProjPoint(F5, 1)) == ProjPoint(F5, 0)
    # value at infinity of a ratio of equal degrees is the leading ratio
    g = RatFunc.from_ints(F5, [0, 3], [1, 2])
    assert g.proj_eval(ProjPoint.infinity(F5)) == ProjPoint(F5, 4)  # 3/2 = 3*3 = 9 = 4


def test_proj_point_variants(field):
    F5 = field(5)
    inf = ProjPoint.infinity(F5)
    assert inf.is_infinity
    with pytest.raises(ValueError):
        inf.value
    fin = ProjPoint.finite(F5.element(2))
    assert not fin.is_infinity and fin.value.code == 2
    assert inf != fin


def test_moebius_identity_and_swap(field):
    F7 = field(7)
    f = rand_map(F7, random.Random(1))
    assert moebius_conjugate(f, ((1, 0), (0, 1)), "post") == f
    assert moebius_conjugate(f, ((1, 0), (0, 1)), "pre") == f
    t = RatFunc.t(F7)
    assert moebius_conjugate(t, ((0, 1), (1, 0)), "post") == RatFunc.from_ints(F7, [1], [0, 1])


def test_moebius_rejects_singular(field):
    F5 = field(5)
    with pytest.raises(ValueError):
        moebius_conjugate(RatFunc.t(F5), ((1, 2), (2, 4)), "post")


def test_moebius_degree_preserved(field):
    rng = random.Random(8)
    for p, k in [(5, 1), (3, 2)]:
        F = field(p, k)
        for _ in range(50):
            f = rand_map(F, rng)
            while True:
                sigma = tuple(tuple(rng.randrange(F.q) for _ in range(2)) for _ in range(2))
                det = (F.mul_codes(sigma[0][0], sigma[1][1])
                       - F.mul_codes(sigma[0][1], sigma[1][0])) % F.p if F.k == 1 else None
                try:
                    g = moebius_conjugate(f, sigma, rng.choice(["pre", "post"]))
                    break
                except ValueError:
                    continue
            assert g.degree == f.degree


def test_post_composition_acts_on_values(field):
    # proj_eval(sigma o f, P) = sigma(proj_eval(f, P)) pointwise
    rng = random.Random(9)
    F = field(7)
    for _ in range(30):
        f = rand_map(F, rng)
        sigma = ((1, rng.randrange(7)), (rng.randrange(7), rng.randrange(7)))
        try:
            g = moebius_conjugate(f, sigma, "post")
        except ValueError:
            continue
        for c in list(range(7)) + [None]:
            P = ProjPoint(F, c)
            assert g.proj_eval(P) == moebius_apply_point(F, sigma, f.proj_eval(P))


def test_pre_composition_relocates_values(field):
    rng = random.Random(10)
    F = field(5)
    for _ in range(30):
        f = rand_map(F, rng)
        sigma = ((2, 1), (1, 1))  # det = 1
        g = moebius_conjugate(f, sigma, "pre")
        for c in list(range(5)) + [None]:
            P = ProjPoint(F, c)
            assert g.proj_eval(P) == f.proj_eval(moebius_apply_point(F, sigma, P))


def test_ratfunc_arithmetic(field):
    F7 = field(7)
    t = RatFunc.t(F7)
    one = RatFunc.constant(F7.one)
    inv_t = one / t
    assert t * inv_t == one
    assert (t + inv_t) == RatFunc.from_ints(F7, [1, 0, 1], [0, 1])
    assert (t - t).is_zero()
