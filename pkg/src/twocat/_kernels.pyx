# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the scans in ``_kernels_py``; same signatures and output."""

import numpy as np

cdef int COMPOSABILITY = 0
cdef int TYPING = 1
cdef int UNIT = 2
cdef int ASSOC = 3
cdef int DANGLING = 4
cdef int IDENTITY_PRESERVATION = 5
cdef int INTERCHANGE = 6
cdef int OBJECT_UNIT = 7
cdef int OBJECT_ASSOC = 8


def _as_i32(values):
    return np.ascontiguousarray(np.asarray(values, dtype=np.int32))


def _csr(keys, int size):
    keys_arr = _as_i32(keys)
    order = np.argsort(keys_arr, kind="stable").astype(np.int32)
    ptr = np.zeros(size + 1, dtype=np.int32)
    if keys_arr.shape[0]:
        np.cumsum(np.bincount(keys_arr, minlength=size), out=ptr[1:])
    return ptr, order


def category_violations(src, tgt, comp, ident):
    cdef int[::1] s = _as_i32(src)
    cdef int[::1] t = _as_i32(tgt)
    cdef int[::1] idn = _as_i32(ident)
    cdef int[:, ::1] tab = _as_i32(comp).reshape(len(src), len(src)) if len(src) else np.zeros((0, 0), dtype=np.int32)
    cdef int n = s.shape[0]
    cdef int a, b, c, r, ia, ic, ab
    found = []
    for a in range(n):
        for b in range(n):
            r = tab[a, b]
            if (t[b] == s[a]) != (r >= 0):
                found.append((COMPOSABILITY, (a, b)))
            elif r >= n:
                found.append((DANGLING, (a, b, r)))
            elif r >= 0 and (s[r] != s[b] or t[r] != t[a]):
                found.append((TYPING, (a, b, r)))
    if found:
        return found
    for a in range(n):
        if tab[idn[t[a]], a] != a or tab[a, idn[s[a]]] != a:
            found.append((UNIT, (a,)))
    leave_ptr_arr, leave_idx_arr = _csr(src, idn.shape[0])
    arrive_ptr_arr, arrive_idx_arr = _csr(tgt, idn.shape[0])
    cdef int[::1] lp = leave_ptr_arr
    cdef int[::1] li = leave_idx_arr
    cdef int[::1] ap = arrive_ptr_arr
    cdef int[::1] ai = arrive_idx_arr
    for b in range(n):
        for ia in range(lp[t[b]], lp[t[b] + 1]):
            a = li[ia]
            ab = tab[a, b]
            for ic in range(ap[s[b]], ap[s[b] + 1]):
                c = ai[ic]
                if tab[ab, c] != tab[a, tab[b, c]]:
                    found.append((ASSOC, (a, b, c)))
    return found


def horizontal_violations(src1, tgt1, hc1, unit1, src2, tgt2, hc2, vc, id2):
    cdef int n1 = len(src1)
    cdef int n2 = len(src2)
    cdef int n0 = len(unit1)
    cdef int[::1] s1 = _as_i32(src1)
    cdef int[::1] t1 = _as_i32(tgt1)
    cdef int[::1] u1 = _as_i32(unit1)
    cdef int[::1] s2 = _as_i32(src2)
    cdef int[::1] t2 = _as_i32(tgt2)
    cdef int[::1] i2 = _as_i32(id2)
    cdef int[:, ::1] h1 = _as_i32(hc1).reshape(n1, n1) if n1 else np.zeros((0, 0), dtype=np.int32)
    cdef int[:, ::1] h2 = _as_i32(hc2).reshape(n2, n2) if n2 else np.zeros((0, 0), dtype=np.int32)
    cdef int[:, ::1] v2 = _as_i32(vc).reshape(n2, n2) if n2 else np.zeros((0, 0), dtype=np.int32)
    lo_arr = np.zeros(n2, dtype=np.int32)
    hi_arr = np.zeros(n2, dtype=np.int32)
    cdef int[::1] lo = lo_arr
    cdef int[::1] hi = hi_arr
    cdef int a, b, c, d, r, x, y, xy, ib, ic, ab, ca, db, p, q, mid, top, bottom
    for a in range(n2):
        lo[a] = s1[s2[a]]
        hi[a] = t1[s2[a]]
    found = []
    for a in range(n2):
        for b in range(n2):
            r = h2[a, b]
            if (lo[a] == hi[b]) != (r >= 0):
                found.append((COMPOSABILITY, (a, b)))
            elif r >= n2:
                found.append((DANGLING, (a, b, r)))
            elif r >= 0 and (s2[r] != h1[s2[a], s2[b]] or t2[r] != h1[t2[a], t2[b]]):
                found.append((TYPING, (a, b, r)))
    if found:
        return found
    for a in range(n2):
        if h2[i2[u1[hi[a]]], a] != a or h2[a, i2[u1[lo[a]]]] != a:
            found.append((UNIT, (a,)))
    for x in range(n1):
        for y in range(n1):
            xy = h1[x, y]
            if xy >= 0 and h2[i2[x], i2[y]] != i2[xy]:
                found.append((IDENTITY_PRESERVATION, (x, y)))
    hp_arr, hidx_arr = _csr(hi_arr, n0)
    cdef int[::1] hp = hp_arr
    cdef int[::1] hidx = hidx_arr
    for a in range(n2):
        for ib in range(hp[lo[a]], hp[lo[a] + 1]):
            b = hidx[ib]
            ab = h2[a, b]
            for ic in range(hp[lo[b]], hp[lo[b] + 1]):
                c = hidx[ic]
                if h2[ab, c] != h2[a, h2[b, c]]:
                    found.append((ASSOC, (a, b, c)))
    # vertically composable pairs (c after a), grouped by hom, built in a
    # Python list so that the order matches the fallback exactly
    pair_lists = [[] for _ in range(n0 * n0)]
    for a in range(n2):
        for c in range(n2):
            if s2[c] == t2[a]:
                pair_lists[lo[a] * n0 + hi[a]].append((c, a))
    counts = np.array([len(pl) for pl in pair_lists], dtype=np.int32)
    ptr_arr = np.zeros(n0 * n0 + 1, dtype=np.int32)
    np.cumsum(counts, out=ptr_arr[1:])
    flat = [pair for pl in pair_lists for pair in pl]
    pc_arr = np.array([pr[0] for pr in flat], dtype=np.int32)
    pa_arr = np.array([pr[1] for pr in flat], dtype=np.int32)
    cdef int[::1] ptr = ptr_arr
    cdef int[::1] pc = pc_arr
    cdef int[::1] pa = pa_arr
    for mid in range(n0):
        for top in range(n0):
            if ptr[mid * n0 + top] == ptr[mid * n0 + top + 1]:
                continue
            for bottom in range(n0):
                for p in range(ptr[mid * n0 + top], ptr[mid * n0 + top + 1]):
                    c = pc[p]
                    a = pa[p]
                    ca = v2[c, a]
                    for q in range(ptr[bottom * n0 + mid], ptr[bottom * n0 + mid + 1]):
                        d = pc[q]
                        b = pa[q]
                        db = v2[d, b]
                        if ca < 0 or db < 0:
                            found.append((INTERCHANGE, (c, a, d, b)))
                            continue
                        r = v2[h2[c, d], h2[a, b]]
                        if r < 0 or r != h2[ca, db]:
                            found.append((INTERCHANGE, (c, a, d, b)))
    return found


def monoidal_violations(src, tgt, comp, ident, tensor_obj, tensor_mor, int unit):
    cdef int m = len(src)
    cdef int n = len(ident)
    cdef int[::1] s = _as_i32(src)
    cdef int[::1] tg = _as_i32(tgt)
    cdef int[::1] idn = _as_i32(ident)
    cdef int[:, ::1] tab = _as_i32(comp).reshape(m, m) if m else np.zeros((0, 0), dtype=np.int32)
    cdef int[:, ::1] t = _as_i32(tensor_obj).reshape(n, n) if n else np.zeros((0, 0), dtype=np.int32)
    cdef int[:, ::1] tm = _as_i32(tensor_mor).reshape(m, m) if m else np.zeros((0, 0), dtype=np.int32)
    cdef int i, j, k, a, b, c, ab, u, p, q, a1, a2, b1, b2, npairs
    found = []
    for i in range(n):
        if t[unit, i] != i or t[i, unit] != i:
            found.append((OBJECT_UNIT, (i,)))
        for j in range(n):
            for k in range(n):
                if t[t[i, j], k] != t[i, t[j, k]]:
                    found.append((OBJECT_ASSOC, (i, j, k)))
    u = idn[unit] if n else -1
    for a in range(m):
        if tm[u, a] != a or tm[a, u] != a:
            found.append((UNIT, (a,)))
        for b in range(m):
            ab = tm[a, b]
            if s[ab] != t[s[a], s[b]] or tg[ab] != t[tg[a], tg[b]]:
                found.append((TYPING, (a, b)))
            for c in range(m):
                if tm[ab, c] != tm[a, tm[b, c]]:
                    found.append((ASSOC, (a, b, c)))
    for i in range(n):
        for j in range(n):
            if tm[idn[i], idn[j]] != idn[t[i, j]]:
                found.append((IDENTITY_PRESERVATION, (i, j)))
    left_arr = np.zeros(m * m, dtype=np.int32)
    right_arr = np.zeros(m * m, dtype=np.int32)
    cdef int[::1] left = left_arr
    cdef int[::1] right = right_arr
    npairs = 0
    for a in range(m):
        for b in range(m):
            if tab[a, b] >= 0:
                left[npairs] = a
                right[npairs] = b
                npairs += 1
    for p in range(npairs):
        a2 = left[p]
        a1 = right[p]
        ab = tab[a2, a1]
        for q in range(npairs):
            b2 = left[q]
            b1 = right[q]
            if tm[ab, tab[b2, b1]] != tab[tm[a2, b2], tm[a1, b1]]:
                found.append((INTERCHANGE, (a2, a1, b2, b1)))
    return found


def inverse_table(src, tgt, comp, ident):
    cdef int n = len(src)
    cdef int[::1] s = _as_i32(src)
    cdef int[::1] t = _as_i32(tgt)
    cdef int[::1] idn = _as_i32(ident)
    cdef int[:, ::1] tab = _as_i32(comp).reshape(n, n) if n else np.zeros((0, 0), dtype=np.int32)
    cdef int a, b, inv
    out = []
    for a in range(n):
        inv = -1
        for b in range(n):
            if s[b] == t[a] and t[b] == s[a] and tab[a, b] == idn[s[b]] and tab[b, a] == idn[s[a]]:
                inv = b
                break
        out.append(inv)
    return out
