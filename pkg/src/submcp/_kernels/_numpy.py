"""Vectorised numpy kernels; reference path when JIT is disabled."""
import numpy as np

_CHUNK = 4096


def _masks(n):
    return np.arange(1 << n, dtype=np.int64)


def cut_table(n, us, vs, ws):
    masks = _masks(n)
    out = np.zeros(1 << n, dtype=ws.dtype)
    for u, v, w in zip(us, vs, ws):
        out += w * (((masks >> u) ^ (masks >> v)) & 1).astype(ws.dtype)
    return out


def coverage_table(n, us, vs, ws):
    masks = _masks(n)
    out = np.zeros(1 << n, dtype=ws.dtype)
    for u, v, w in zip(us, vs, ws):
        out += w * (((masks >> u) | (masks >> v)) & 1).astype(ws.dtype)
    return out


def hypercut_table(n, hmasks, ws):
    masks = _masks(n)
    out = np.zeros(1 << n, dtype=ws.dtype)
    for h, w in zip(hmasks, ws):
        x = masks & h
        out += w * ((x != 0) & (x != h)).astype(ws.dtype)
    return out


def min_split_enum(table, node_masks, s, t, base, mode, eps):
    free = np.array([node_masks[i] for i in range(len(node_masks)) if i not in (s, t)],
                    dtype=np.int64)
    codes = np.arange(1 << len(free), dtype=np.int64)
    u = np.full(codes.shape, node_masks[s], dtype=np.int64)
    for b, fm in enumerate(free):
        u |= ((codes >> b) & 1) * fm
    vals = table[u]
    if mode == 1:
        vals = vals + table[base ^ u] - table[base]
    return int(u[_first_min(vals, eps)])


def _first_min(vals, eps):
    if eps == 0:
        return int(np.argmin(vals))
    return int(np.flatnonzero(vals <= vals.min() + eps)[0])


def rgs(n, k):
    """All restricted growth strings of length n with exactly k blocks, lexicographic."""
    if k < 1 or k > n:
        return np.zeros((0, n), dtype=np.int8)
    rows = np.zeros((1, 1), dtype=np.int8)
    mx = np.zeros(1, dtype=np.int64)
    for i in range(1, n):
        counts = np.minimum(mx + 1, k - 1) + 1
        starts = np.repeat(np.cumsum(counts) - counts, counts)
        lab = np.arange(starts.shape[0], dtype=np.int64) - starts
        parent = np.repeat(np.arange(rows.shape[0]), counts)
        new_mx = np.maximum(mx[parent], lab)
        keep = new_mx + 1 + (n - 1 - i) >= k
        rows = np.concatenate([rows[parent[keep]], lab[keep, None].astype(np.int8)], axis=1)
        mx = new_mx[keep]
    return rows[mx == k - 1]


def _one_bit(x):
    return (x != 0) & ((x & (x - 1)) == 0)


def _hits(bm, cands):
    ok = np.zeros(bm.shape[0], dtype=bool)
    for c in cands:
        ok |= _one_bit(bm & c).all(axis=1)
    return ok


def partition_search(table, n, k, cands1, cands2, eps):
    best = -np.ones(n, dtype=np.int64)
    rows = rgs(n, k)
    if rows.shape[0] == 0:
        return best
    weights = np.int64(1) << np.arange(n, dtype=np.int64)
    bm = np.stack([((rows == b) * weights).sum(axis=1) for b in range(k)], axis=1)
    vals = table[bm].sum(axis=1)
    order = np.argsort(vals, kind="stable")
    for start in range(0, order.shape[0], _CHUNK):
        idx = order[start:start + _CHUNK]
        ok = _hits(bm[idx], cands1)
        if len(cands2):
            ok &= _hits(bm[idx], cands2)
        hit = np.flatnonzero(ok)
        if hit.size:
            first = idx[hit[0]]
            if eps:
                # lexicographic tie-break among near-equal values
                tol = vals[first] + eps
                later = order[start + hit[0]:]
                later = later[vals[later] <= tol]
                okl = _hits(bm[later], cands1)
                if len(cands2):
                    okl &= _hits(bm[later], cands2)
                first = later[okl].min()
            best[:] = rows[first]
            return best
    return best


def submodular_pairs(table, eps):
    N = table.shape[0]
    idx = np.arange(N, dtype=np.int64)
    for A in range(N - 1):
        B = idx[A + 1:]
        bad = table[A] + table[B] < table[A | B] + table[A & B] - eps
        if bad.any():
            return A, int(B[np.argmax(bad)])
    return -1, -1


def submodular_local(table, n, eps):
    N = table.shape[0]
    S = np.arange(N, dtype=np.int64)
    best = None
    for u in range(n):
        for v in range(u + 1, n):
            sel = S[((S >> u) & 1 == 0) & ((S >> v) & 1 == 0)]
            Su, Sv = sel | (1 << u), sel | (1 << v)
            bad = table[Su] + table[Sv] < table[Su | Sv] + table[sel] - eps
            if bad.any():
                j = int(np.argmax(bad))
                cand = (int(sel[j]), u, v)
                if best is None or cand < best:
                    best = cand
    if best is None:
        return -1, -1
    s, u, v = best
    return s | (1 << u), s | (1 << v)


def symmetric_check(table, eps):
    N = table.shape[0]
    d = np.abs(table - table[(N - 1) ^ np.arange(N)])
    bad = np.flatnonzero(d > eps)
    return int(bad[0]) if bad.size else -1


def monotone_check(table, n, eps):
    N = table.shape[0]
    S = np.arange(N, dtype=np.int64)
    best = None
    for u in range(n):
        sel = S[(S >> u) & 1 == 0]
        bad = np.flatnonzero(table[sel] > table[sel | (1 << u)] + eps)
        if bad.size:
            cand = (int(sel[bad[0]]), u)
            if best is None or cand < best:
                best = cand
    if best is None:
        return -1, -1
    return best[0], best[0] | (1 << best[1])
