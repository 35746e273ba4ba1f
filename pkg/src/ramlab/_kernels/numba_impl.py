"""@njit kernels: chain counting, orbit canonicalization, census scans.

All field arithmetic happens through int64 code arrays and the lookup
tables produced by Field.tables().  Semantics must match numpy_impl
exactly; tests pin the two together.
"""

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def _adm(a, b, c, p):
    s = a + b + c
    if s % 2 == 0 or s >= 2 * p + 1:
        return False
    if a >= b + c or b >= a + c or c >= a + b:
        return False
    return True


@njit(cache=True)
def chain_count_dp(e, p):
    n = e.shape[0]
    if n == 3:
        return 1 if _adm(e[0], e[1], e[2], p) else 0
    X = 2 * p - 3
    v = np.zeros(X + 1, dtype=np.int64)
    for x in range(1, X + 1):
        if _adm(e[0], e[1], x, p):
            v[x] = 1
    for j in range(2, n - 2):
        w = np.zeros(X + 1, dtype=np.int64)
        for y in range(1, X + 1):
            acc = 0
            for x in range(1, X + 1):
                if v[x] != 0 and _adm(x, e[j], y, p):
                    acc += v[x]
            w[y] = acc
        v = w
    total = 0
    for x in range(1, X + 1):
        if v[x] != 0 and _adm(x, e[n - 2], e[n - 1], p):
            total += v[x]
    return total


@njit(cache=True)
def chain_count_enum(e, p):
    n = e.shape[0]
    if n == 3:
        return 1 if _adm(e[0], e[1], e[2], p) else 0
    m = n - 3
    X = 2 * p - 3
    xs = np.ones(m, dtype=np.int64)
    count = 0
    while True:
        ok = _adm(e[0], e[1], xs[0], p)
        if ok:
            for j in range(1, m):
                if not _adm(xs[j - 1], e[j + 1], xs[j], p):
                    ok = False
                    break
        if ok and _adm(xs[m - 1], e[n - 2], e[n - 1], p):
            count += 1
        i = 0
        while i < m:
            xs[i] += 1
            if xs[i] <= X:
                break
            xs[i] = 1
            i += 1
        if i == m:
            break
    return count


# ---------------------------------------------------------------------------
# PGL2 orbit kernels
# ---------------------------------------------------------------------------

@njit(cache=True)
def _normalize_vec(v, mul_t, inv_t):
    j = 0
    while v[j] == 0:
        j += 1
    s = inv_t[v[j]]
    if s != 1:
        for i in range(j, v.shape[0]):
            v[i] = mul_t[s, v[i]]


@njit(cache=True)
def _lex_less(a, b):
    for i in range(a.shape[0]):
        if a[i] != b[i]:
            return a[i] < b[i]
    return False


@njit(cache=True)
def pgl2_min_vec(num, den, q, add_t, mul_t, inv_t):
    """Minimum normalized (num|den) vector over all q^3 - q post-compositions."""
    L = num.shape[0]
    best = np.empty(2 * L, dtype=np.int64)
    cand = np.empty(2 * L, dtype=np.int64)
    nn = np.empty(L, dtype=np.int64)
    cn = np.empty(L, dtype=np.int64)
    have = False
    # sigma = [[1, b], [c, d]], det = d - b c
    for b in range(q):
        for i in range(L):
            nn[i] = add_t[num[i], mul_t[b, den[i]]]
        for c in range(q):
            bc = mul_t[b, c]
            for i in range(L):
                cn[i] = mul_t[c, num[i]]
            for d in range(q):
                if d == bc:
                    continue
                for i in range(L):
                    cand[i] = nn[i]
                    cand[L + i] = add_t[cn[i], mul_t[d, den[i]]]
                _normalize_vec(cand, mul_t, inv_t)
                if not have or _lex_less(cand, best):
                    best[:] = cand
                    have = True
    # sigma = [[0, 1], [c, d]], c != 0
    for c in range(1, q):
        for i in range(L):
            cn[i] = mul_t[c, num[i]]
        for d in range(q):
            for i in range(L):
                cand[i] = den[i]
                cand[L + i] = add_t[cn[i], mul_t[d, den[i]]]
            _normalize_vec(cand, mul_t, inv_t)
            if _lex_less(cand, best):
                best[:] = cand
    return best


@njit(cache=True)
def pgl2_stab_count(num, den, q, add_t, mul_t, inv_t):
    """Number of post-compositions fixing the map."""
    L = num.shape[0]
    ref = np.empty(2 * L, dtype=np.int64)
    for i in range(L):
        ref[i] = num[i]
        ref[L + i] = den[i]
    _normalize_vec(ref, mul_t, inv_t)
    cand = np.empty(2 * L, dtype=np.int64)
    nn = np.empty(L, dtype=np.int64)
    cn = np.empty(L, dtype=np.int64)
    count = 0
    for b in range(q):
        for i in range(L):
            nn[i] = add_t[num[i], mul_t[b, den[i]]]
        for c in range(q):
            bc = mul_t[b, c]
            for i in range(L):
                cn[i] = mul_t[c, num[i]]
            for d in range(q):
                if d == bc:
                    continue
                for i in range(L):
                    cand[i] = nn[i]
                    cand[L + i] = add_t[cn[i], mul_t[d, den[i]]]
                _normalize_vec(cand, mul_t, inv_t)
                same = True
                for i in range(2 * L):
                    if cand[i] != ref[i]:
                        same = False
                        break
                if same:
                    count += 1
    for c in range(1, q):
        for i in range(L):
            cn[i] = mul_t[c, num[i]]
        for d in range(q):
            for i in range(L):
                cand[i] = den[i]
                cand[L + i] = add_t[cn[i], mul_t[d, den[i]]]
            _normalize_vec(cand, mul_t, inv_t)
            same = True
            for i in range(2 * L):
                if cand[i] != ref[i]:
                    same = False
                    break
            if same:
                count += 1
    return count


# ---------------------------------------------------------------------------
# Census scans
# ---------------------------------------------------------------------------

@njit(cache=True)
def _eval_codes(coeffs, n, x, add_t, mul_t):
    acc = 0
    for i in range(n - 1, -1, -1):
        acc = add_t[mul_t[acc, x], coeffs[i]]
    return acc


@njit(cache=True)
def _ord_capped(coeffs, n, x, cap, add_t, mul_t):
    """Multiplicity of the root x, capped: returns cap+1 when it exceeds cap."""
    work = coeffs[:n].copy()
    ln = n
    m = 0
    while m <= cap:
        while ln > 0 and work[ln - 1] == 0:
            ln -= 1
        if ln == 0:
            return cap + 1
        acc = work[ln - 1]
        for i in range(ln - 2, -1, -1):
            tmp = work[i]
            work[i] = acc
            acc = add_t[mul_t[acc, x], tmp]
        if acc != 0:
            return m
        m += 1
        ln -= 1
    return m


@njit(cache=True)
def _conv_into(out, g, a, add_t, mul_t):
    for i in range(out.shape[0]):
        out[i] = 0
    for i in range(g.shape[0]):
        if g[i] == 0:
            continue
        for j in range(a.shape[0]):
            if a[j] != 0:
                out[i + j] = add_t[out[i + j], mul_t[g[i], a[j]]]


@njit(cache=True)
def _wronskian_into(W, num, den, L, p, add_t, mul_t, neg_t):
    for i in range(W.shape[0]):
        W[i] = 0
    for i in range(1, L):
        ci = mul_t[i % p, num[i]]
        if ci == 0:
            continue
        for j in range(L):
            if den[j] != 0:
                W[i - 1 + j] = add_t[W[i - 1 + j], mul_t[ci, den[j]]]
    for i in range(1, L):
        ci = mul_t[i % p, den[i]]
        if ci == 0:
            continue
        ci = neg_t[ci]
        for j in range(L):
            if num[j] != 0:
                W[i - 1 + j] = add_t[W[i - 1 + j], mul_t[ci, num[j]]]


@njit(cache=True)
def branch_scan(q, d, p, g0, ginf, deg_a, deg_b,
                pts01, one_pts, one_ords, free_pts, free_ords,
                add_t, mul_t, inv_t, neg_t, out):
    """Scan one critical-value branch; survivors go to out as (num|den) rows.

    Candidates: num = g0 * a with deg a = deg_a exactly, den = ginf * b with
    b monic of degree deg_b.  Returns the survivor count, or -1 if out is
    too small.
    """
    L = d + 1
    la, lb = deg_a + 1, deg_b + 1
    a = np.empty(la, dtype=np.int64)
    b = np.empty(lb, dtype=np.int64)
    num = np.empty(L, dtype=np.int64)
    den = np.empty(L, dtype=np.int64)
    h = np.empty(L, dtype=np.int64)
    W = np.empty(2 * L, dtype=np.int64)
    n_rest = 1
    for _ in range(deg_a + deg_b):
        n_rest *= q
    total = (q - 1) * n_rest
    nfound = 0
    for idx in range(total):
        t = idx
        lead = 1 + t % (q - 1)
        t //= (q - 1)
        for i in range(deg_a):
            a[i] = t % q
            t //= q
        a[deg_a] = lead
        for i in range(deg_b):
            b[i] = t % q
            t //= q
        b[deg_b] = 1
        ok = True
        for j in range(pts01.shape[0]):
            x = pts01[j]
            if (_eval_codes(a, la, x, add_t, mul_t) == 0
                    or _eval_codes(b, lb, x, add_t, mul_t) == 0):
                ok = False
                break
        if not ok:
            continue
        _conv_into(num, g0, a, add_t, mul_t)
        _conv_into(den, ginf, b, add_t, mul_t)
        for j in range(one_pts.shape[0]):
            x = one_pts[j]
            e = one_ords[j]
            if _eval_codes(num, L, x, add_t, mul_t) == 0:
                ok = False
                break
            for i in range(L):
                h[i] = add_t[num[i], neg_t[den[i]]]
            if _ord_capped(h, L, x, e, add_t, mul_t) != e:
                ok = False
                break
        if not ok:
            continue
        if free_pts.shape[0] > 0:
            _wronskian_into(W, num, den, L, p, add_t, mul_t, neg_t)
            for j in range(free_pts.shape[0]):
                x = free_pts[j]
                e = free_ords[j]
                if (_eval_codes(num, L, x, add_t, mul_t) == 0
                        and _eval_codes(den, L, x, add_t, mul_t) == 0):
                    ok = False
                    break
                if _ord_capped(W, 2 * L, x, e - 1, add_t, mul_t) != e - 1:
                    ok = False
                    break
            if not ok:
                continue
        if nfound >= out.shape[0]:
            return -1
        for i in range(L):
            out[nfound, i] = num[i]
            out[nfound, L + i] = den[i]
        nfound += 1
    return nfound


@njit(cache=True)
def exhaustive_scan(q, d, p, pts, ords, phase,
                    add_t, mul_t, inv_t, neg_t, out):
    """Scan every scalar-normalized degree-d pair; survivors as (num|den) rows.

    phase 0: num monic of degree d, den any nonzero poly of degree <= d.
    phase 1: den monic of degree d, num any nonzero poly of degree <= d-1.
    Candidate filter is the Wronskian order at each marked point; callers do
    the authoritative profile check on the survivors.
    """
    L = d + 1
    num = np.empty(L, dtype=np.int64)
    den = np.empty(L, dtype=np.int64)
    W = np.empty(2 * L, dtype=np.int64)
    if phase == 0:
        n_free, n_other = d, L
    else:
        n_free, n_other = d, d
    n1 = 1
    for _ in range(n_free):
        n1 *= q
    n2 = 1
    for _ in range(n_other):
        n2 *= q
    nfound = 0
    for idx in range(n1 * n2):
        t = idx
        if phase == 0:
            for i in range(d):
                num[i] = t % q
                t //= q
            num[d] = 1
            allz = True
            for i in range(L):
                den[i] = t % q
                t //= q
                if den[i] != 0:
                    allz = False
            if allz:
                continue
        else:
            allz = True
            for i in range(d):
                num[i] = t % q
                t //= q
                if num[i] != 0:
                    allz = False
            num[d] = 0
            if allz:
                continue
            for i in range(d):
                den[i] = t % q
                t //= q
            den[d] = 1
        _wronskian_into(W, num, den, L, p, add_t, mul_t, neg_t)
        ok = True
        for j in range(pts.shape[0]):
            x = pts[j]
            e = ords[j]
            if (_eval_codes(num, L, x, add_t, mul_t) == 0
                    and _eval_codes(den, L, x, add_t, mul_t) == 0):
                ok = False
                break
            if _ord_capped(W, 2 * L, x, e - 1, add_t, mul_t) != e - 1:
                ok = False
                break
        if not ok:
            continue
        if nfound >= out.shape[0]:
            return -1
        for i in range(L):
            out[nfound, i] = num[i]
            out[nfound, L + i] = den[i]
        nfound += 1
    return nfound
