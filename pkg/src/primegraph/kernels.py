"""Hot inner loops, each in two flavours.

Every kernel exists as ``<name>_numba`` (explicit loops, compiled with
``numba.njit`` when available) and ``<name>_numpy`` (vectorised numpy).  The
unsuffixed name is bound to one of them according to
:data:`primegraph._accel.USE_NUMBA`.  Both flavours take and return the same
types and must agree exactly; ``tests/test_kernels.py`` checks that.

Conventions shared by all kernels:

* ring elements are integer indices in mixed radix, first factor most
  significant, so index order is tuple order and index 0 is the zero element;
* monomials are rows of an ``int64`` exponent matrix.
"""

from __future__ import annotations

import numpy as np

from ._accel import USE_NUMBA, njit

# Result codes of ideal_witness.
IDEAL_OK = 0
MISSING_ZERO = 1
NOT_PROPER = 2
NOT_ADDITIVE = 3
NOT_ABSORBING = 4
NOT_PRIME = 5


# --------------------------------------------------------------------------
# finite ring tables
# --------------------------------------------------------------------------


@njit
def _combine(coords, moduli, weights, x, y, multiply):
    idx = 0
    for t in range(coords.shape[1]):
        if multiply:
            c = (coords[x, t] * coords[y, t]) % moduli[t]
        else:
            c = (coords[x, t] + coords[y, t]) % moduli[t]
        idx += c * weights[t]
    return idx


@njit
def ideal_witness_numba(coords, moduli, weights, member):
    """Return ``(code, i, j)``; ``code == IDEAL_OK`` iff ``member`` is a proper prime ideal."""
    n = coords.shape[0]
    if not member[0]:
        return MISSING_ZERO, 0, 0
    size = 0
    for i in range(n):
        if member[i]:
            size += 1
    if size == n:
        return NOT_PROPER, 0, 0
    for x in range(n):
        if not member[x]:
            continue
        for y in range(x, n):
            if member[y] and not member[_combine(coords, moduli, weights, x, y, False)]:
                return NOT_ADDITIVE, x, y
    for x in range(n):
        if not member[x]:
            continue
        for r in range(n):
            if not member[_combine(coords, moduli, weights, r, x, True)]:
                return NOT_ABSORBING, r, x
    for x in range(n):
        if member[x]:
            continue
        for y in range(x, n):
            if not member[y] and member[_combine(coords, moduli, weights, x, y, True)]:
                return NOT_PRIME, x, y
    return IDEAL_OK, 0, 0


def _row_results(coords, moduli, weights, x, multiply):
    if multiply:
        return ((coords[x] * coords) % moduli) @ weights
    return ((coords[x] + coords) % moduli) @ weights


def ideal_witness_numpy(coords, moduli, weights, member):
    n = coords.shape[0]
    if not member[0]:
        return MISSING_ZERO, 0, 0
    if member.all():
        return NOT_PROPER, 0, 0
    inside = np.flatnonzero(member)
    for x in inside:
        bad = member & ~member[_row_results(coords, moduli, weights, x, False)]
        bad[:x] = False
        if bad.any():
            return NOT_ADDITIVE, int(x), int(np.argmax(bad))
    for x in inside:
        bad = ~member[_row_results(coords, moduli, weights, x, True)]
        if bad.any():
            return NOT_ABSORBING, int(np.argmax(bad)), int(x)
    outside = np.flatnonzero(~member)
    for x in outside:
        bad = ~member & member[_row_results(coords, moduli, weights, x, True)]
        bad[:x] = False
        if bad.any():
            return NOT_PRIME, int(x), int(np.argmax(bad))
    return IDEAL_OK, 0, 0


@njit
def product_in_set_numba(coords, moduli, weights, member):
    """Boolean matrix ``M[i, j] = member[i * j]`` over all ring elements."""
    n = coords.shape[0]
    out = np.zeros((n, n), dtype=np.bool_)
    for x in range(n):
        for y in range(x, n):
            hit = member[_combine(coords, moduli, weights, x, y, True)]
            out[x, y] = hit
            out[y, x] = hit
    return out


def product_in_set_numpy(coords, moduli, weights, member, chunk=512):
    n = coords.shape[0]
    out = np.empty((n, n), dtype=np.bool_)
    for start in range(0, n, chunk):
        block = coords[start:start + chunk]
        idx = np.zeros((block.shape[0], n), dtype=np.int64)
        for t in range(coords.shape[1]):
            idx += ((block[:, None, t] * coords[None, :, t]) % moduli[t]) * weights[t]
        out[start:start + chunk] = member[idx]
    return out


# --------------------------------------------------------------------------
# monomial exponent matrices
# --------------------------------------------------------------------------


@njit
def minimal_mask_numba(rows, degrees):
    """Mark rows not divisible by any other row.

    ``rows`` must be duplicate free and sorted by ascending ``degrees``; then
    only strictly lower-degree rows can divide a given row.
    """
    n, m = rows.shape
    keep = np.ones(n, dtype=np.bool_)
    for i in range(n):
        for j in range(n):
            if degrees[j] >= degrees[i]:
                break
            divides = True
            for t in range(m):
                if rows[j, t] > rows[i, t]:
                    divides = False
                    break
            if divides:
                keep[i] = False
                break
    return keep


def minimal_mask_numpy(rows, degrees, budget=4_000_000):
    n, m = rows.shape
    keep = np.ones(n, dtype=np.bool_)
    if n == 0:
        return keep
    starts = np.flatnonzero(np.r_[True, degrees[1:] != degrees[:-1]])
    ends = np.r_[starts[1:], n]
    for s, e in zip(starts, ends):
        if s == 0:
            continue
        lower = rows[:s]
        step = max(1, budget // max(1, s * m))
        for c in range(s, e, step):
            block = rows[c:min(e, c + step)]
            divided = (lower[None, :, :] <= block[:, None, :]).all(axis=2).any(axis=1)
            keep[c:c + block.shape[0]] = ~divided
    return keep


@njit
def _lex_less(a, b):
    for t in range(a.shape[0]):
        if a[t] != b[t]:
            return a[t] < b[t]
    return False


@njit
def _lex_contains(sorted_rows, row):
    lo = 0
    hi = sorted_rows.shape[0]
    while lo < hi:
        mid = (lo + hi) // 2
        if _lex_less(sorted_rows[mid], row):
            lo = mid + 1
        else:
            hi = mid
    if lo == sorted_rows.shape[0]:
        return False
    for t in range(row.shape[0]):
        if sorted_rows[lo, t] != row[t]:
            return False
    return True


@njit
def exchange_violation_numba(rows, sorted_rows):
    """First ``(u, v, p)`` violating the symmetric exchange property, else ``(-1, -1, -1)``.

    ``sorted_rows`` is ``rows`` in lexicographic order, used for membership.
    Scan order: ``u``, then ``v``, then ``p``, all ascending.
    """
    g, m = rows.shape
    swap_ok = np.zeros((m, m), dtype=np.bool_)
    w = np.empty(m, dtype=rows.dtype)
    for u in range(g):
        swap_ok[:, :] = False
        for t in range(m):
            w[t] = rows[u, t]
        for p in range(m):
            if rows[u, p] == 0:
                continue
            w[p] -= 1
            for q in range(m):
                if q == p:
                    continue
                w[q] += 1
                swap_ok[p, q] = _lex_contains(sorted_rows, w)
                w[q] -= 1
            w[p] += 1
        for v in range(g):
            for p in range(m):
                if rows[u, p] <= rows[v, p]:
                    continue
                found = False
                for q in range(m):
                    if rows[u, q] < rows[v, q] and swap_ok[p, q]:
                        found = True
                        break
                if not found:
                    return u, v, p
    return -1, -1, -1


def exchange_violation_numpy(rows, sorted_rows):
    g, m = rows.shape
    members = {r.tobytes() for r in sorted_rows}
    eye = np.eye(m, dtype=rows.dtype)
    for u in range(g):
        base = rows[u]
        swap_ok = np.zeros((m, m), dtype=np.bool_)
        for p in np.flatnonzero(base):
            cand = base - eye[p] + eye
            for q in range(m):
                if q != p:
                    swap_ok[p, q] = cand[q].tobytes() in members
        greater = base[None, :] > rows
        less = (base[None, :] < rows).astype(np.int64)
        rescued = (less @ swap_ok.T.astype(np.int64)) > 0
        bad = greater & ~rescued
        hit = bad.any(axis=1)
        if hit.any():
            v = int(np.argmax(hit))
            return u, v, int(np.argmax(bad[v]))
    return -1, -1, -1


@njit
def linear_quotient_ranks_numba(rows):
    """Colon ranks ``r_j`` for generators taken in the given row order.

    The colon ``(u_1, ..., u_{j-1}) : u_j`` is generated by the monomials
    ``u_i / gcd(u_i, u_j)``.  It is generated by variables iff each of them is
    divisible by one of those that are themselves single variables.  Returns
    ``(ranks, j)`` where ``j`` is the first failing position or -1.
    """
    g, m = rows.shape
    ranks = np.zeros(g, dtype=np.int64)
    in_colon = np.zeros(m, dtype=np.bool_)
    for j in range(1, g):
        in_colon[:] = False
        for i in range(j):
            deg = 0
            last = -1
            for t in range(m):
                d = rows[i, t] - rows[j, t]
                if d > 0:
                    deg += d
                    last = t
            if deg == 1:
                in_colon[last] = True
        count = 0
        for t in range(m):
            if in_colon[t]:
                count += 1
        for i in range(j):
            hit = False
            for t in range(m):
                if rows[i, t] > rows[j, t] and in_colon[t]:
                    hit = True
                    break
            if not hit:
                return ranks, j
        ranks[j] = count
    return ranks, -1


def linear_quotient_ranks_numpy(rows):
    g, m = rows.shape
    ranks = np.zeros(g, dtype=np.int64)
    for j in range(1, g):
        diff = np.maximum(rows[:j] - rows[j], 0)
        single = diff.sum(axis=1) == 1
        in_colon = diff[single].any(axis=0)
        if not (diff[:, in_colon] > 0).any(axis=1).all():
            return ranks, j
        ranks[j] = int(in_colon.sum())
    return ranks, -1


# --------------------------------------------------------------------------
# graphs on at most ~20 vertices
# --------------------------------------------------------------------------


@njit
def minimal_cover_masks_numba(n_vertices, edge_u, edge_v):
    """Bitmasks of all inclusion-minimal vertex covers, ascending."""
    total = 1 << n_vertices
    is_cover = np.zeros(total, dtype=np.bool_)
    for mask in range(total):
        ok = True
        for e in range(edge_u.shape[0]):
            if ((mask >> edge_u[e]) & 1) == 0 and ((mask >> edge_v[e]) & 1) == 0:
                ok = False
                break
        is_cover[mask] = ok
    keep = np.zeros(total, dtype=np.bool_)
    count = 0
    for mask in range(total):
        if not is_cover[mask]:
            continue
        minimal = True
        for v in range(n_vertices):
            if (mask >> v) & 1 and is_cover[mask ^ (1 << v)]:
                minimal = False
                break
        if minimal:
            keep[mask] = True
            count += 1
    out = np.empty(count, dtype=np.int64)
    k = 0
    for mask in range(total):
        if keep[mask]:
            out[k] = mask
            k += 1
    return out


def minimal_cover_masks_numpy(n_vertices, edge_u, edge_v):
    masks = np.arange(1 << n_vertices, dtype=np.int64)
    is_cover = np.ones(masks.shape[0], dtype=np.bool_)
    for u, v in zip(edge_u, edge_v):
        is_cover &= (((masks >> u) | (masks >> v)) & 1).astype(np.bool_)
    redundant = np.zeros_like(is_cover)
    for v in range(n_vertices):
        has_v = ((masks >> v) & 1).astype(np.bool_)
        redundant |= has_v & is_cover[masks ^ (1 << v)]
    return masks[is_cover & ~redundant]


KERNELS = {
    "ideal_witness": (ideal_witness_numba, ideal_witness_numpy),
    "product_in_set": (product_in_set_numba, product_in_set_numpy),
    "minimal_mask": (minimal_mask_numba, minimal_mask_numpy),
    "exchange_violation": (exchange_violation_numba, exchange_violation_numpy),
    "linear_quotient_ranks": (linear_quotient_ranks_numba, linear_quotient_ranks_numpy),
    "minimal_cover_masks": (minimal_cover_masks_numba, minimal_cover_masks_numpy),
}

_pick = 0 if USE_NUMBA else 1
ideal_witness = KERNELS["ideal_witness"][_pick]
product_in_set = KERNELS["product_in_set"][_pick]
minimal_mask = KERNELS["minimal_mask"][_pick]
exchange_violation = KERNELS["exchange_violation"][_pick]
linear_quotient_ranks = KERNELS["linear_quotient_ranks"][_pick]
minimal_cover_masks = KERNELS["minimal_cover_masks"][_pick]
