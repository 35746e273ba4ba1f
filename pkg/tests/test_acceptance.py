"""Acceptance criteria, one test per criterion, all exact arithmetic.

Run with `pytest tests/test_acceptance.py -s` to see one PASS/FAIL line per
criterion as it completes.
"""

from ramlab.census import census
from ramlab.counting import (
    Profile,
    dormant_3pt_count,
    dormant_sum,
    genus2_frobenius_count,
    iter_profiles,
    n_gen_chain,
    n_gen_chain_enum_count,
    n_gen_recursive,
    odd_profiles,
    parity_variants,
    selfmap_total,
)
from ramlab.ratmaps import RamProfile, riemann_hurwitz_audit
from ramlab.verify import suite_connection_props


def _report(num, desc, ok):
    print(f"ACCEPTANCE {num} {'PASS' if ok else 'FAIL'}: {desc}")
    assert ok, f"criterion {num} failed: {desc}"


def test_criterion_1_closed_forms():
    ok = [dormant_3pt_count(p) for p in (3, 5, 7, 11)] == [1, 5, 14, 55]
    ok &= [genus2_frobenius_count(p) for p in (3, 5, 7)] == [16, 80, 224]
    for p in (3, 5, 7, 11, 13, 17, 19):
        ok &= 16 * dormant_3pt_count(p) == genus2_frobenius_count(p)
    _report(1, "closed forms (p^3-p)/24 and 2(p^3-p)/3 with the 16x identity", bool(ok))


def test_criterion_2_method_equivalence():
    checked = 0
    ok = True
    for p in (5, 7, 11):
        for n in range(3, 7):
            for prof in iter_profiles(p, n):
                a = n_gen_recursive(prof)
                b = n_gen_chain(prof, mode="count")
                c = n_gen_chain_enum_count(prof)
                checked += 1
                if not (a == b == c):
                    ok = False
    _report(2, f"recursion = chain DP = chain enumeration on {checked} profiles "
               "(n <= 6, entries in [1, p-2], p in {5, 7, 11})", ok)


def test_criterion_3_dormant_sum():
    ok = True
    for p in (5, 7, 11, 13):
        ok &= dormant_sum(p) == dormant_3pt_count(p)
    parts = {prof.entries: n_gen_recursive(prof) for prof in odd_profiles(5, 3)}
    ok &= parts[(1, 1, 1)] == 1 and parts[(3, 3, 3)] == 1
    ok &= sum(v for k, v in parts.items() if sorted(k) == [1, 3, 3]) == 3
    ok &= dormant_sum(5) == 5 and dormant_sum(7) == 14
    _report(3, "sum over ordered odd 3-profiles equals (p^3-p)/24 for p in {5, 7, 11, 13}",
            bool(ok))


def test_criterion_4_census_vs_formula():
    ok = True
    for p, orders in ((7, (3, 3, 3)), (5, (2, 2, 3)), (5, (1, 1, 1))):
        res = census(p, 1, RamProfile(p, (0, 1, None), orders))
        formula = n_gen_recursive(Profile(p, orders))
        ok &= res.complete and res.orbit_count == 1 == formula
    _report(4, "census(p=7,(3,3,3)) = census(p=5,(2,2,3)) = census(p=5,(1,1,1)) = 1 "
               "= recursion base case", bool(ok))


def test_criterion_5_parity_variants():
    counts = [census(5, 1, RamProfile(5, (0, 1, None), orders)).orbit_count
              for orders in ((3, 3, 3), (2, 2, 3), (2, 3, 2), (3, 2, 2))]
    ok = counts == [1, 1, 1, 1]
    total = sum(n_gen_recursive(var)
                for prof in odd_profiles(5, 3)
                for var in parity_variants(prof))
    ok &= total == selfmap_total(3, dormant_3pt_count(5)) == 20
    _report(5, "parity-variant censuses all equal 1 at p=5; corollary total "
               "2^(r-1) * 5 = 20 at formula level", bool(ok))


def test_criterion_6_connection_properties():
    samples = 350
    report = suite_connection_props(ps=(3, 5, 7), samples=samples)
    ok = report.passed and 3 * samples >= 1000
    _report(6, f"connection invariants on {3 * samples} random connections "
               "(pole confinement, twist invariance, canonical dormancy, "
               "p-trivial determinant => traceless residues)", ok)


def test_criterion_7_riemann_hurwitz_audit():
    audited = 0
    ok = True
    cases = (
        (7, 1, (0, 1, None), (3, 3, 3)),
        (5, 1, (0, 1, None), (2, 2, 3)),
        (5, 1, (0, 1, None), (1, 1, 1)),
        (5, 1, (0, 1, 2, None), (2, 2, 1, 1)),
        (3, 2, (0, 1, None), (2, 2, 1)),
    )
    for p, k, pts, orders in cases:
        prof = RamProfile(p, pts, orders)
        res = census(p, k, prof)
        ok &= res.complete and len(res.representatives) > 0
        for g in res.representatives:
            audit = riemann_hurwitz_audit(g, prof)
            audited += 1
            ok &= audit.ok
    _report(7, f"independent Wronskian factorization audit on {audited} census "
               "representatives", bool(ok))
