"""Pure-Python table scans used when the compiled extension is unavailable.

Every function here has a twin in ``_kernels.pyx`` with the same signature and
the same output order. Tables are dense integer arrays where ``-1`` marks an
undefined composite. Violations come back as ``(code, cells)`` pairs; the
caller translates codes into axiom tags.
"""

COMPOSABILITY = 0
TYPING = 1
UNIT = 2
ASSOC = 3
DANGLING = 4
IDENTITY_PRESERVATION = 5
INTERCHANGE = 6
OBJECT_UNIT = 7
OBJECT_ASSOC = 8


def _rows(table):
    return [[int(v) for v in row] for row in table]


def _ints(values):
    return [int(v) for v in values]


def _buckets(keys, size):
    out = [[] for _ in range(size)]
    for i, k in enumerate(keys):
        out[k].append(i)
    return out


def category_violations(src, tgt, comp, ident):
    """Scan a category given by a dense composition table.

    ``comp[a, b]`` is ``a`` after ``b``; objects are ``0..len(ident)-1``.
    """
    src, tgt, ident = _ints(src), _ints(tgt), _ints(ident)
    table = _rows(comp)
    n = len(src)
    found = []
    for a in range(n):
        row = table[a]
        for b in range(n):
            r = row[b]
            if (tgt[b] == src[a]) != (r >= 0):
                found.append((COMPOSABILITY, (a, b)))
            elif r >= n:
                found.append((DANGLING, (a, b, r)))
            elif r >= 0 and (src[r] != src[b] or tgt[r] != tgt[a]):
                found.append((TYPING, (a, b, r)))
    if found:
        return found
    for a in range(n):
        if table[ident[tgt[a]]][a] != a or table[a][ident[src[a]]] != a:
            found.append((UNIT, (a,)))
    leaving = _buckets(src, len(ident))
    arriving = _buckets(tgt, len(ident))
    for b in range(n):
        row_b = table[b]
        for a in leaving[tgt[b]]:
            row_a = table[a]
            row_ab = table[row_a[b]]
            for c in arriving[src[b]]:
                if row_ab[c] != row_a[row_b[c]]:
                    found.append((ASSOC, (a, b, c)))
    return found


def horizontal_violations(src1, tgt1, hc1, unit1, src2, tgt2, hc2, vc, id2):
    """Scan horizontal 2-cell composition of a strict 2-category.

    Checks totality and typing, unit laws, preservation of identities,
    associativity and the interchange law.
    """
    src1, tgt1, unit1 = _ints(src1), _ints(tgt1), _ints(unit1)
    src2, tgt2, id2 = _ints(src2), _ints(tgt2), _ints(id2)
    h1, h2, v2 = _rows(hc1), _rows(hc2), _rows(vc)
    n0 = len(unit1)
    n1 = len(src1)
    n2 = len(src2)
    lo = [src1[src2[a]] for a in range(n2)]
    hi = [tgt1[src2[a]] for a in range(n2)]
    found = []
    for a in range(n2):
        row = h2[a]
        for b in range(n2):
            r = row[b]
            if (lo[a] == hi[b]) != (r >= 0):
                found.append((COMPOSABILITY, (a, b)))
            elif r >= n2:
                found.append((DANGLING, (a, b, r)))
            elif r >= 0 and (src2[r] != h1[src2[a]][src2[b]]
                             or tgt2[r] != h1[tgt2[a]][tgt2[b]]):
                found.append((TYPING, (a, b, r)))
    if found:
        return found
    for a in range(n2):
        if h2[id2[unit1[hi[a]]]][a] != a or h2[a][id2[unit1[lo[a]]]] != a:
            found.append((UNIT, (a,)))
    for x in range(n1):
        for y in range(n1):
            xy = h1[x][y]
            if xy >= 0 and h2[id2[x]][id2[y]] != id2[xy]:
                found.append((IDENTITY_PRESERVATION, (x, y)))
    by_hi = _buckets(hi, n0)
    for a in range(n2):
        row_a = h2[a]
        for b in by_hi[lo[a]]:
            row_ab = h2[row_a[b]]
            row_b = h2[b]
            for c in by_hi[lo[b]]:
                if row_ab[c] != row_a[row_b[c]]:
                    found.append((ASSOC, (a, b, c)))
    # vertically composable pairs (c after a), grouped by the hom they live in
    pairs = [[] for _ in range(n0 * n0)]
    for a in range(n2):
        row_to = tgt2[a]
        for c in range(n2):
            if src2[c] == row_to:
                pairs[lo[a] * n0 + hi[a]].append((c, a))
    for mid in range(n0):
        for top in range(n0):
            upper = pairs[mid * n0 + top]
            if not upper:
                continue
            for bottom in range(n0):
                lower = pairs[bottom * n0 + mid]
                for c, a in upper:
                    ca = v2[c][a]
                    row_c = h2[c]
                    row_a = h2[a]
                    for d, b in lower:
                        db = v2[d][b]
                        top_d, top_b = row_c[d], row_a[b]
                        # a missing vertical composite counts as a failure, never as an index
                        if ca < 0 or db < 0 or v2[top_d][top_b] < 0 or v2[top_d][top_b] != h2[ca][db]:
                            found.append((INTERCHANGE, (c, a, d, b)))
    return found


def monoidal_violations(src, tgt, comp, ident, tensor_obj, tensor_mor, unit):
    """Scan the tensor tables of a strict monoidal category.

    ``tensor_obj`` is ``n x n`` over objects and ``tensor_mor`` is ``m x m``
    over morphisms; ``comp`` is the dense composition table of the category.
    """
    src, tgt, ident = _ints(src), _ints(tgt), _ints(ident)
    table, t, tm = _rows(comp), _rows(tensor_obj), _rows(tensor_mor)
    n, m = len(ident), len(src)
    found = []
    for i in range(n):
        if t[unit][i] != i or t[i][unit] != i:
            found.append((OBJECT_UNIT, (i,)))
        for j in range(n):
            row = t[t[i][j]]
            for k in range(n):
                if row[k] != t[i][t[j][k]]:
                    found.append((OBJECT_ASSOC, (i, j, k)))
    u = ident[unit] if n else -1
    for a in range(m):
        if tm[u][a] != a or tm[a][u] != a:
            found.append((UNIT, (a,)))
        row_a = tm[a]
        for b in range(m):
            ab = row_a[b]
            if src[ab] != t[src[a]][src[b]] or tgt[ab] != t[tgt[a]][tgt[b]]:
                found.append((TYPING, (a, b)))
            row_ab = tm[ab]
            row_b = tm[b]
            for c in range(m):
                if row_ab[c] != row_a[row_b[c]]:
                    found.append((ASSOC, (a, b, c)))
    for i in range(n):
        for j in range(n):
            if tm[ident[i]][ident[j]] != ident[t[i][j]]:
                found.append((IDENTITY_PRESERVATION, (i, j)))
    pairs = [(x, y) for x in range(m) for y in range(m) if table[x][y] >= 0]
    for a2, a1 in pairs:
        a = table[a2][a1]
        row_a = tm[a]
        row_a2 = tm[a2]
        row_a1 = tm[a1]
        for b2, b1 in pairs:
            if row_a[table[b2][b1]] != table[row_a2[b2]][row_a1[b1]]:
                found.append((INTERCHANGE, (a2, a1, b2, b1)))
    return found


def inverse_table(src, tgt, comp, ident):
    """For each morphism, its two-sided inverse or ``-1``."""
    src, tgt, ident = _ints(src), _ints(tgt), _ints(ident)
    table = _rows(comp)
    by_pair = {}
    for b in range(len(src)):
        by_pair.setdefault((src[b], tgt[b]), []).append(b)
    out = []
    for a in range(len(src)):
        inv = -1
        for b in by_pair.get((tgt[a], src[a]), ()):
            if table[a][b] == ident[src[b]] and table[b][a] == ident[src[a]]:
                inv = b
                break
        out.append(inv)
    return out
