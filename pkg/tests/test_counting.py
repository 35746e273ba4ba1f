import itertools
import random

import pytest

from ramlab.counting import (
    Profile,
    chain_insertions,
    dormant_3pt_count,
    dormant_sum,
    genus2_frobenius_count,
    iter_profiles,
    n_gen_chain,
    n_gen_chain_enum_count,
    n_gen_recursive,
    odd_profiles,
    parity_variants,
    profile_degree,
    radius_index_pair,
    selfmap_total,
    triple_admissible,
)


def test_triple_admissible_examples():
    assert triple_admissible(3, 3, 3, 7)          # sum 9 odd < 15, d = 4 < 7
    assert not triple_admissible(3, 1, 1, 5)      # triangle fails
    assert not triple_admissible(3, 3, 5, 5)      # sum 11 >= 2p + 1 = 11
    assert triple_admissible(3, 3, 1, 5)
    assert triple_admissible(2, 2, 3, 7)          # even entries allowed, sum odd
    assert not triple_admissible(2, 2, 2, 7)      # even sum


def test_triple_admissible_equals_base_case_conditions():
    # triangle + odd sum + sum < 2p+1 is exactly: d integral, every index <= d, p > d
    for p in (5, 7):
        for e in itertools.product(range(1, 2 * p - 2), repeat=3):
            s = sum(e)
            direct = triple_admissible(*e, p)
            if s % 2 == 0:
                assert not direct
                continue
            d = (s - 1) // 2
            assert direct == (max(e) <= d and p > d)


def test_profile_validation():
    with pytest.raises(ValueError):
        Profile(5, (3, 3))            # too short
    with pytest.raises(ValueError):
        Profile(5, (3, 3, 5))         # index >= p
    with pytest.raises(ValueError):
        Profile(5, (3, 3, 2))         # parity
    with pytest.raises(ValueError):
        Profile(9, (3, 3, 3))         # not prime
    assert Profile(5, (3, 3, 3)).degree == 4
    assert profile_degree((3, 3, 1)) == 3


def test_recursive_base_cases():
    assert n_gen_recursive(Profile(7, (3, 3, 3))) == 1
    assert n_gen_recursive(Profile(5, (3, 3, 1))) == 1
    assert n_gen_recursive(Profile(5, (3, 1, 1))) == 0
    assert n_gen_recursive(Profile(5, (1, 1, 1))) == 1


def test_four_point_frozen_oracle_values():
    # frozen from the explicit insertion enumeration: over p = 5 the single
    # node index can be 1 or 3; over p = 7 it can be 1, 3, or 5
    count, chains = n_gen_chain(Profile(5, (3, 3, 3, 3)), mode="enumerate")
    assert count == 2 and chains == [(1,), (3,)]
    assert n_gen_recursive(Profile(5, (3, 3, 3, 3))) == 2
    assert n_gen_chain(Profile(5, (3, 3, 3, 3))) == 2
    assert n_gen_recursive(Profile(7, (3, 3, 3, 3))) == 3
    assert n_gen_chain_enum_count(Profile(7, (3, 3, 3, 3))) == 3


def test_inadmissible_forced_end_triple():
    # (1, 1, x) is admissible only for x = 1; the tail (3, ...) then fails
    assert n_gen_chain(Profile(5, (1, 1, 3, 3))) == n_gen_recursive(Profile(5, (1, 1, 3, 3)))
    assert n_gen_chain(Profile(5, (1, 1, 3, 1))) == 0
    count, chains = n_gen_chain(Profile(5, (1, 1, 1, 1)), mode="enumerate")
    assert count == 1 and chains == [(1,)]


def test_methods_agree_exhaustively_small():
    for p in (5, 7):
        for n in (3, 4, 5):
            for prof in iter_profiles(p, n):
                a = n_gen_recursive(prof)
                b = n_gen_chain(prof, mode="count")
                c = n_gen_chain_enum_count(prof)
                assert a == b == c, (p, prof.entries, a, b, c)


def test_enumeration_mode_matches_count_mode():
    rng = random.Random(31)
    for _ in range(40):
        p = rng.choice((5, 7, 11))
        n = rng.randint(3, 6)
        while True:
            entries = tuple(rng.randint(1, p - 2) for _ in range(n))
            if sum(e - 1 for e in entries) % 2 == 0:
                break
        prof = Profile(p, entries)
        count, chains = n_gen_chain(prof, mode="enumerate")
        assert count == len(chains) == n_gen_chain(prof)
        assert chains == list(chain_insertions(prof))


def test_permutation_invariance():
    rng = random.Random(32)
    for _ in range(30):
        p = rng.choice((5, 7, 11))
        n = rng.randint(3, 6)
        while True:
            entries = tuple(rng.randint(1, p - 2) for _ in range(n))
            if sum(e - 1 for e in entries) % 2 == 0:
                break
        base = n_gen_recursive(Profile(p, entries))
        perm = list(entries)
        rng.shuffle(perm)
        assert n_gen_recursive(Profile(p, tuple(perm))) == base


def test_vanishing_beyond_bound():
    # any index above the degree forces zero
    assert n_gen_recursive(Profile(7, (1, 1, 5))) == 0      # d = 3 < 5
    assert n_gen_recursive(Profile(7, (1, 1, 1, 5))) == 0   # d = 3 < 5
    assert n_gen_recursive(Profile(11, (9, 1, 1, 1, 1))) == 0


def test_parity_variants_examples():
    variants = parity_variants(Profile(5, (3, 3, 3)))
    assert sorted(v.entries for v in variants) == [(2, 2, 3), (2, 3, 2), (3, 2, 2), (3, 3, 3)]
    with pytest.raises(ValueError):
        parity_variants(Profile(5, (2, 2, 3)))


def test_parity_variants_cardinality():
    for n in range(3, 9):
        entries = (1,) * n  # always valid: sum(e-1) = 0
        vs = parity_variants(Profile(11, entries))
        assert len(vs) == 2 ** (n - 1)
        assert Profile(11, entries) in vs    # the empty replacement set


def test_parity_variants_preserve_count():
    rng = random.Random(33)
    for _ in range(20):
        p = rng.choice((5, 7, 11))
        n = rng.randint(3, 5)
        while True:
            entries = tuple(rng.choice(range(1, p - 1, 2)) for _ in range(n))
            if sum(e - 1 for e in entries) % 2 == 0:
                break
        prof = Profile(p, entries)
        base = n_gen_recursive(prof)
        for var in parity_variants(prof):
            assert n_gen_recursive(var) == base


def test_radius_index_conversion():
    pair = radius_index_pair(5, rho=1)
    assert pair.e == 3 and pair.e_even == 2
    assert radius_index_pair(7, e=3).rho == 2
    assert radius_index_pair(7, e=3).e_even == 4
    with pytest.raises(ValueError):
        radius_index_pair(5, e=2)
    with pytest.raises(ValueError):
        radius_index_pair(5, rho=3)   # rho >= p/2
    with pytest.raises(ValueError):
        radius_index_pair(5)
    # round trip
    for p in (5, 7, 11):
        for rho in range(1, (p - 1) // 2 + 1):
            assert radius_index_pair(p, e=radius_index_pair(p, rho=rho).e).rho == rho


def test_closed_forms():
    assert [dormant_3pt_count(p) for p in (3, 5, 7, 11)] == [1, 5, 14, 55]
    assert [genus2_frobenius_count(p) for p in (3, 5, 7)] == [16, 80, 224]
    for p in (3, 5, 7, 11, 13):
        assert 16 * dormant_3pt_count(p) == genus2_frobenius_count(p)
    with pytest.raises(ValueError):
        dormant_3pt_count(4)


def test_selfmap_total():
    assert selfmap_total(3, dormant_3pt_count(5)) == 20
    assert selfmap_total(3, 1) == 4
    assert selfmap_total(4, 0) == 0
    with pytest.raises(ValueError):
        selfmap_total(2, 1)


def test_dormant_sum_identity():
    # p = 5 decomposes as 1 + 3 + 1 over (1,1,1), perms of (3,3,1), (3,3,3)
    parts = {prof.entries: n_gen_recursive(prof) for prof in odd_profiles(5, 3)}
    assert parts[(1, 1, 1)] == 1
    assert parts[(3, 3, 1)] == parts[(3, 1, 3)] == parts[(1, 3, 3)] == 1
    assert parts[(3, 3, 3)] == 1
    assert sum(parts.values()) == 5
    for p in (5, 7, 11, 13):
        assert dormant_sum(p) == dormant_3pt_count(p)
