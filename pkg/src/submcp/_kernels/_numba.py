"""JIT-compiled kernels. Signatures mirror ``_numpy`` exactly."""
import numpy as np
from numba import njit

_opts = dict(cache=True, nogil=True)


@njit(**_opts)
def cut_table(n, us, vs, ws):
    N = 1 << n
    out = np.zeros(N, dtype=ws.dtype)
    for mask in range(N):
        s = out[0]
        for e in range(us.shape[0]):
            if ((mask >> us[e]) & 1) != ((mask >> vs[e]) & 1):
                s += ws[e]
        out[mask] = s
    return out


@njit(**_opts)
def coverage_table(n, us, vs, ws):
    N = 1 << n
    out = np.zeros(N, dtype=ws.dtype)
    for mask in range(N):
        s = out[0]
        for e in range(us.shape[0]):
            if ((mask >> us[e]) & 1) or ((mask >> vs[e]) & 1):
                s += ws[e]
        out[mask] = s
    return out


@njit(**_opts)
def hypercut_table(n, hmasks, ws):
    N = 1 << n
    out = np.zeros(N, dtype=ws.dtype)
    for mask in range(N):
        s = out[0]
        for e in range(hmasks.shape[0]):
            x = mask & hmasks[e]
            if x != 0 and x != hmasks[e]:
                s += ws[e]
        out[mask] = s
    return out


@njit(**_opts)
def min_split_enum(table, node_masks, s, t, base, mode, eps):
    m = node_masks.shape[0]
    free = np.empty(m - 2, dtype=np.int64)
    j = 0
    for i in range(m):
        if i != s and i != t:
            free[j] = node_masks[i]
            j += 1
    nf = m - 2
    smask = node_masks[s]
    best_u = -1
    best = 0.0
    for code in range(1 << nf):
        u = smask
        for b in range(nf):
            if (code >> b) & 1:
                u |= free[b]
        if mode == 0:
            val = table[u]
        else:
            val = table[u] + table[base ^ u] - table[base]
        if best_u < 0 or val < best - eps:
            best = val
            best_u = u
    return best_u


@njit(**_opts)
def _hits_all(blk, k, cands):
    for c in range(cands.shape[0]):
        cand = cands[c]
        ok = True
        for b in range(k):
            x = cand & blk[b]
            if x == 0 or (x & (x - 1)) != 0:
                ok = False
                break
        if ok:
            return True
    return False


@njit(**_opts)
def partition_search(table, n, k, cands1, cands2, eps):
    best_labels = -np.ones(n, dtype=np.int64)
    a = np.zeros(n, dtype=np.int64)
    mx = np.zeros(n, dtype=np.int64)
    blk = np.zeros(k, dtype=np.int64)
    best = 0.0
    found = False
    if n == 1 or k == 1:
        if k != 1:
            return best_labels
        blk[0] = (1 << n) - 1
        if _hits_all(blk, 1, cands1) and (cands2.shape[0] == 0 or _hits_all(blk, 1, cands2)):
            best_labels[:] = 0
        return best_labels
    i = 1
    a[1] = -1
    while i >= 1:
        a[i] += 1
        limit = mx[i - 1] + 1
        if limit > k - 1:
            limit = k - 1
        if a[i] > limit:
            i -= 1
            continue
        m = mx[i - 1] if mx[i - 1] > a[i] else a[i]
        if m + 1 + (n - 1 - i) < k:
            continue
        mx[i] = m
        if i < n - 1:
            i += 1
            a[i] = -1
            continue
        if m != k - 1:
            continue
        for b in range(k):
            blk[b] = 0
        for j in range(n):
            blk[a[j]] |= 1 << j
        val = table[blk[0]]
        for b in range(1, k):
            val += table[blk[b]]
        if found and not val < best - eps:
            continue
        if not _hits_all(blk, k, cands1):
            continue
        if cands2.shape[0] > 0 and not _hits_all(blk, k, cands2):
            continue
        found = True
        best = val
        best_labels[:] = a
    return best_labels


@njit(**_opts)
def submodular_pairs(table, eps):
    N = table.shape[0]
    for A in range(N):
        for B in range(A + 1, N):
            if table[A] + table[B] < table[A | B] + table[A & B] - eps:
                return A, B
    return -1, -1


@njit(**_opts)
def submodular_local(table, n, eps):
    N = table.shape[0]
    for S in range(N):
        for u in range(n):
            if (S >> u) & 1:
                continue
            Su = S | (1 << u)
            for v in range(u + 1, n):
                if (S >> v) & 1:
                    continue
                Sv = S | (1 << v)
                if table[Su] + table[Sv] < table[Su | Sv] + table[S] - eps:
                    return Su, Sv
    return -1, -1


@njit(**_opts)
def symmetric_check(table, eps):
    N = table.shape[0]
    for A in range(N):
        d = table[A] - table[(N - 1) ^ A]
        if d > eps or -d > eps:
            return A
    return -1


@njit(**_opts)
def monotone_check(table, n, eps):
    N = table.shape[0]
    for S in range(N):
        for u in range(n):
            if (S >> u) & 1:
                continue
            if table[S] > table[S | (1 << u)] + eps:
                return S, S | (1 << u)
    return -1, -1
