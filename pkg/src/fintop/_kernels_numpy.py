"""Pure-numpy implementations of the subset-table kernels.

Every table is indexed by subset bitmask, so ``table[A]`` is the value for
subset ``A`` of an ``n``-point space.  Inputs and outputs are ``int64`` /
``bool`` arrays of length ``2**n`` unless noted.
"""

import numpy as np


def _universe(n):
    return np.arange(1 << n, dtype=np.int64)


def interior_table(nbhd, n):
    subsets = _universe(n)
    out = np.zeros(1 << n, dtype=np.int64)
    for x in range(n):
        inside = (nbhd[x] & ~subsets) == 0
        out |= inside.astype(np.int64) << x
    return out


def closure_table(nbhd, n):
    subsets = _universe(n)
    out = np.zeros(1 << n, dtype=np.int64)
    for x in range(n):
        meets = (nbhd[x] & subsets) != 0
        out |= meets.astype(np.int64) << x
    return out


def subset_union_table(member_mask, n):
    """``out[A]`` = union of all members contained in ``A``."""
    subsets = _universe(n)
    out = np.where(member_mask, subsets, 0)
    for i in range(n):
        bit = 1 << i
        has = subsets[(subsets & bit) != 0]
        out[has] |= out[has ^ bit]
    return out


def superset_intersection_table(member_mask, n):
    """``out[A]`` = intersection of all members containing ``A`` (full set if none)."""
    full = (1 << n) - 1
    subsets = _universe(n)
    out = np.where(member_mask, subsets, full)
    for i in range(n):
        bit = 1 << i
        lacks = subsets[(subsets & bit) == 0]
        out[lacks] &= out[lacks | bit]
    return out


def pair_intersection_mask(left, right, n, chunk=1024):
    """Mark every ``U & V`` with ``U`` in ``left`` and ``V`` in ``right``."""
    out = np.zeros(1 << n, dtype=np.bool_)
    if len(left) == 0 or len(right) == 0:
        return out
    for start in range(0, len(left), chunk):
        block = left[start:start + chunk, None] & right[None, :]
        out[block.ravel()] = True
    return out


def sandwich_mask(lower, upper, n):
    """Mark every ``A`` with ``lower[k] <= A <= upper[k]`` for some ``k``."""
    subsets = _universe(n)
    out = np.zeros(1 << n, dtype=np.bool_)
    for lo, hi in zip(lower, upper):
        out |= ((subsets & lo) == lo) & ((subsets & ~hi) == 0)
    return out


def least_relabeling(opens, ranks, perms, chunk=4096):
    """Index of the permutation whose image family has the least rank sequence.

    ``opens`` lists the family, ``ranks`` maps subset -> canonical rank and
    ``perms[p, i]`` is the image of point ``i`` under permutation ``p``.
    Returns ``(best_index, best_sorted_ranks)``; ties keep the first index.
    """
    n = perms.shape[1]
    bits = (opens[:, None] >> np.arange(n)) & 1  # (k, n)
    best, best_seq = -1, None
    for start in range(0, perms.shape[0], chunk):
        block = perms[start:start + chunk]
        images = (bits[None, :, :] << block[:, None, :]).sum(axis=2)  # (P, k)
        seqs = np.sort(ranks[images], axis=1)
        if best_seq is not None:
            seqs = np.vstack([best_seq[None, :], seqs])
        order = np.lexsort(seqs.T[::-1])
        top = int(order[0])
        if best_seq is None:
            best, best_seq = start + top, seqs[top]
        elif top != 0:
            best, best_seq = start + top - 1, seqs[top]
    return best, best_seq
