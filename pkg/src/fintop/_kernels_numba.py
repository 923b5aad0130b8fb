"""numba-compiled twins of :mod:`fintop._kernels_numpy`."""

import numpy as np
from numba import njit


@njit(cache=True)
def interior_table(nbhd, n):
    size = 1 << n
    out = np.zeros(size, dtype=np.int64)
    for a in range(size):
        r = 0
        for x in range(n):
            if nbhd[x] & ~a == 0:
                r |= 1 << x
        out[a] = r
    return out


@njit(cache=True)
def closure_table(nbhd, n):
    size = 1 << n
    out = np.zeros(size, dtype=np.int64)
    for a in range(size):
        r = 0
        for x in range(n):
            if nbhd[x] & a != 0:
                r |= 1 << x
        out[a] = r
    return out


@njit(cache=True)
def subset_union_table(member_mask, n):
    size = 1 << n
    out = np.zeros(size, dtype=np.int64)
    for a in range(size):
        if member_mask[a]:
            out[a] = a
    for i in range(n):
        bit = 1 << i
        for a in range(size):
            if a & bit:
                out[a] |= out[a ^ bit]
    return out


@njit(cache=True)
def superset_intersection_table(member_mask, n):
    size = 1 << n
    full = size - 1
    out = np.empty(size, dtype=np.int64)
    for a in range(size):
        out[a] = a if member_mask[a] else full
    for i in range(n):
        bit = 1 << i
        for a in range(size - 1, -1, -1):
            if a & bit == 0:
                out[a] &= out[a | bit]
    return out


@njit(cache=True)
def pair_intersection_mask(left, right, n):
    out = np.zeros(1 << n, dtype=np.bool_)
    for u in left:
        for v in right:
            out[u & v] = True
    return out


@njit(cache=True)
def sandwich_mask(lower, upper, n):
    out = np.zeros(1 << n, dtype=np.bool_)
    for k in range(lower.shape[0]):
        lo = lower[k]
        free = upper[k] & ~lo
        # walk every submask of the free bits
        sub = free
        while True:
            out[lo | sub] = True
            if sub == 0:
                break
            sub = (sub - 1) & free
    return out


@njit(cache=True)
def least_relabeling(opens, ranks, perms):
    k = opens.shape[0]
    n = perms.shape[1]
    best = -1
    best_seq = np.empty(k, dtype=ranks.dtype)
    seq = np.empty(k, dtype=ranks.dtype)
    for p in range(perms.shape[0]):
        for j in range(k):
            o = opens[j]
            img = 0
            for i in range(n):
                if (o >> i) & 1:
                    img |= 1 << perms[p, i]
            seq[j] = ranks[img]
        seq.sort()
        if best < 0:
            better = True
        else:
            better = False
            for j in range(k):
                if seq[j] != best_seq[j]:
                    better = seq[j] < best_seq[j]
                    break
        if better:
            best = p
            best_seq[:] = seq
    return best, best_seq
