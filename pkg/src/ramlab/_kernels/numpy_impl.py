"""Vectorized numpy kernels; the fallback when numba is off.

Semantics (including survivor order) match numba_impl exactly; the kernel
parity tests pin the two together.  Candidate enumerations are processed
in chunks to bound memory.
"""

import numpy as np

NAME = "numpy"

_CHUNK = 1 << 16


def _adm_mask(a, b, c, p):
    s = a + b + c
    return (s % 2 == 1) & (s < 2 * p + 1) & (a < b + c) & (b < a + c) & (c < a + b)


def chain_count_dp(e, p):
    e = np.asarray(e, dtype=np.int64)
    n = e.shape[0]
    if n == 3:
        return int(_adm_mask(e[0], e[1], e[2], p))
    X = 2 * p - 3
    xs = np.arange(1, X + 1, dtype=np.int64)
    v = _adm_mask(e[0], e[1], xs, p).astype(np.int64)
    for j in range(2, n - 2):
        T = _adm_mask(xs[:, None], e[j], xs[None, :], p)
        v = v @ T
    last = _adm_mask(xs, e[n - 2], e[n - 1], p)
    return int((v * last).sum())


def chain_count_enum(e, p):
    e = np.asarray(e, dtype=np.int64)
    n = e.shape[0]
    if n == 3:
        return int(_adm_mask(e[0], e[1], e[2], p))
    m = n - 3
    X = 2 * p - 3
    if X ** m <= (1 << 22):
        grids = np.indices((X,) * m).reshape(m, -1).astype(np.int64) + 1
        ok = _adm_mask(e[0], e[1], grids[0], p)
        for j in range(1, m):
            ok &= _adm_mask(grids[j - 1], e[j + 1], grids[j], p)
        ok &= _adm_mask(grids[m - 1], e[n - 2], e[n - 1], p)
        return int(ok.sum())
    # odometer fallback for very long chains
    xs = [1] * m
    count = 0
    while True:
        ok = bool(_adm_mask(e[0], e[1], xs[0], p))
        if ok:
            for j in range(1, m):
                if not _adm_mask(xs[j - 1], e[j + 1], xs[j], p):
                    ok = False
                    break
        if ok and _adm_mask(xs[m - 1], e[n - 2], e[n - 1], p):
            count += 1
        i = 0
        while i < m:
            xs[i] += 1
            if xs[i] <= X:
                break
            xs[i] = 1
            i += 1
        if i == m:
            return count


# ---------------------------------------------------------------------------
# Row helpers (N candidate polynomials as rows of code matrices)
# ---------------------------------------------------------------------------

def _eval_rows(C, x, add_t, mul_t):
    acc = np.zeros(C.shape[0], dtype=np.int64)
    for i in range(C.shape[1] - 1, -1, -1):
        acc = add_t[mul_t[acc, x], C[:, i]]
    return acc


def _ord_capped_rows(C, x, cap, add_t, mul_t):
    N, L = C.shape
    order = np.full(N, cap + 1, dtype=np.int64)
    done = np.zeros(N, dtype=bool)
    work = C.copy()
    ln = L
    for m in range(cap + 1):
        if ln == 0:
            break
        acc = work[:, ln - 1].copy()
        for i in range(ln - 2, -1, -1):
            tmp = work[:, i].copy()
            work[:, i] = acc
            acc = add_t[mul_t[acc, x], tmp]
        newly = ~done & (acc != 0)
        order[newly] = m
        done |= newly
        if done.all():
            break
        ln -= 1
    return order


def _conv_rows(g, A, outlen, add_t, mul_t):
    out = np.zeros((A.shape[0], outlen), dtype=np.int64)
    for i in range(g.shape[0]):
        if g[i] == 0:
            continue
        for j in range(A.shape[1]):
            out[:, i + j] = add_t[out[:, i + j], mul_t[g[i], A[:, j]]]
    return out


def _wronskian_rows(NUM, DEN, p, add_t, mul_t, neg_t):
    N, L = NUM.shape
    W = np.zeros((N, 2 * L), dtype=np.int64)
    for i in range(1, L):
        ci = mul_t[i % p, NUM[:, i]]
        for j in range(L):
            W[:, i - 1 + j] = add_t[W[:, i - 1 + j], mul_t[ci, DEN[:, j]]]
        ci = neg_t[mul_t[i % p, DEN[:, i]]]
        for j in range(L):
            W[:, i - 1 + j] = add_t[W[:, i - 1 + j], mul_t[ci, NUM[:, j]]]
    return W


def _normalize_rows(rows, mul_t, inv_t):
    idx = np.argmax(rows != 0, axis=1)
    vals = rows[np.arange(rows.shape[0]), idx]
    s = inv_t[vals]
    return mul_t[s[:, None], rows]


def _min_row(rows):
    order = np.lexsort(rows.T[::-1])
    return rows[order[0]].copy()


def _lex_less(a, b):
    for i in range(a.shape[0]):
        if a[i] != b[i]:
            return a[i] < b[i]
    return False


# ---------------------------------------------------------------------------
# PGL2 orbit kernels
# ---------------------------------------------------------------------------

def _post_blocks(num, den, q, add_t, mul_t):
    """Yield blocks of normalized-candidate building material per family."""
    L = num.shape[0]
    cs = np.arange(q, dtype=np.int64)
    cnum = mul_t[cs[:, None], num[None, :]]
    dden = mul_t[cs[:, None], den[None, :]]
    dd_all = add_t[cnum[:, None, :], dden[None, :, :]]  # (c, d, L)
    for b in range(q):
        nn = add_t[num, mul_t[b, den]]
        mask = cs[None, :] != mul_t[b, cs][:, None]     # det = d - b c != 0
        rows = np.empty((q, q, 2 * L), dtype=np.int64)
        rows[:, :, :L] = nn
        rows[:, :, L:] = dd_all
        yield rows.reshape(q * q, 2 * L)[mask.reshape(-1)]
    rows = np.empty((q - 1, q, 2 * L), dtype=np.int64)
    rows[:, :, :L] = den
    rows[:, :, L:] = dd_all[1:]                          # c != 0
    yield rows.reshape((q - 1) * q, 2 * L)


def pgl2_min_vec(num, den, q, add_t, mul_t, inv_t):
    best = None
    for block in _post_blocks(num, den, q, add_t, mul_t):
        cand = _min_row(_normalize_rows(block, mul_t, inv_t))
        if best is None or _lex_less(cand, best):
            best = cand
    return best


def pgl2_stab_count(num, den, q, add_t, mul_t, inv_t):
    L = num.shape[0]
    ref = _normalize_rows(np.concatenate([num, den])[None, :], mul_t, inv_t)[0]
    count = 0
    for block in _post_blocks(num, den, q, add_t, mul_t):
        norm = _normalize_rows(block, mul_t, inv_t)
        count += int((norm == ref).all(axis=1).sum())
    return count


# ---------------------------------------------------------------------------
# Census scans
# ---------------------------------------------------------------------------

def _emit(out, nfound, NUM, DEN):
    n = NUM.shape[0]
    if nfound + n > out.shape[0]:
        return -1
    out[nfound:nfound + n, :NUM.shape[1]] = NUM
    out[nfound:nfound + n, NUM.shape[1]:] = DEN
    return nfound + n


def branch_scan(q, d, p, g0, ginf, deg_a, deg_b,
                pts01, one_pts, one_ords, free_pts, free_ords,
                add_t, mul_t, inv_t, neg_t, out):
    L = d + 1
    total = (q - 1) * q ** (deg_a + deg_b)
    nfound = 0
    for start in range(0, total, _CHUNK):
        t = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        lead = 1 + t % (q - 1)
        t = t // (q - 1)
        A = np.empty((len(lead), deg_a + 1), dtype=np.int64)
        for i in range(deg_a):
            A[:, i] = t % q
            t = t // q
        A[:, deg_a] = lead
        B = np.empty((len(lead), deg_b + 1), dtype=np.int64)
        for i in range(deg_b):
            B[:, i] = t % q
            t = t // q
        B[:, deg_b] = 1
        mask = np.ones(len(lead), dtype=bool)
        for x in pts01:
            mask &= _eval_rows(A, x, add_t, mul_t) != 0
            mask &= _eval_rows(B, x, add_t, mul_t) != 0
        if not mask.any():
            continue
        A, B = A[mask], B[mask]
        NUM = _conv_rows(g0, A, L, add_t, mul_t)
        DEN = _conv_rows(ginf, B, L, add_t, mul_t)
        mask = np.ones(NUM.shape[0], dtype=bool)
        if len(one_pts):
            H = add_t[NUM, neg_t[DEN]]
            for x, e in zip(one_pts, one_ords):
                mask &= _eval_rows(NUM, x, add_t, mul_t) != 0
                mask &= _ord_capped_rows(H, x, int(e), add_t, mul_t) == e
        if len(free_pts):
            NUMm, DENm = NUM[mask], DEN[mask]
            sub = np.ones(NUMm.shape[0], dtype=bool)
            W = _wronskian_rows(NUMm, DENm, p, add_t, mul_t, neg_t)
            for x, e in zip(free_pts, free_ords):
                sub &= ~((_eval_rows(NUMm, x, add_t, mul_t) == 0)
                         & (_eval_rows(DENm, x, add_t, mul_t) == 0))
                sub &= _ord_capped_rows(W, x, int(e) - 1, add_t, mul_t) == e - 1
            NUM, DEN = NUMm[sub], DENm[sub]
        else:
            NUM, DEN = NUM[mask], DEN[mask]
        if NUM.shape[0]:
            nfound = _emit(out, nfound, NUM, DEN)
            if nfound < 0:
                return -1
    return nfound


def exhaustive_scan(q, d, p, pts, ords, phase,
                    add_t, mul_t, inv_t, neg_t, out):
    L = d + 1
    n_free = d
    n_other = L if phase == 0 else d
    total = q ** n_free * q ** n_other
    nfound = 0
    for start in range(0, total, _CHUNK):
        t = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        n = len(t)
        NUM = np.zeros((n, L), dtype=np.int64)
        DEN = np.zeros((n, L), dtype=np.int64)
        if phase == 0:
            for i in range(d):
                NUM[:, i] = t % q
                t = t // q
            NUM[:, d] = 1
            for i in range(L):
                DEN[:, i] = t % q
                t = t // q
            mask = DEN.any(axis=1)
        else:
            for i in range(d):
                NUM[:, i] = t % q
                t = t // q
            mask = NUM.any(axis=1)
            for i in range(d):
                DEN[:, i] = t % q
                t = t // q
            DEN[:, d] = 1
        if not mask.any():
            continue
        NUM, DEN = NUM[mask], DEN[mask]
        W = _wronskian_rows(NUM, DEN, p, add_t, mul_t, neg_t)
        keep = np.ones(NUM.shape[0], dtype=bool)
        for x, e in zip(pts, ords):
            keep &= ~((_eval_rows(NUM, x, add_t, mul_t) == 0)
                      & (_eval_rows(DEN, x, add_t, mul_t) == 0))
            keep &= _ord_capped_rows(W, x, int(e) - 1, add_t, mul_t) == e - 1
        NUM, DEN = NUM[keep], DEN[keep]
        if NUM.shape[0]:
            nfound = _emit(out, nfound, NUM, DEN)
            if nfound < 0:
                return -1
    return nfound
