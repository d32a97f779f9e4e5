"""Exponential-time ground truth for feasibility profiles.

The profile enumerates all 2^n black sets with a bitset dynamic program:
dom[mask] = union of closed neighborhoods of the mask's vertices, built by
doubling, so f[b] = n - min |dom| over masks of popcount b.  The decision
variant enumerates only min(b, w)-subsets with monotone pruning, which is
what makes raised caps (small b, n up to 64) affordable.
"""

from __future__ import annotations

import numpy as np

from ._accel import njit, numba_enabled
from .graphs import BWProfile, Graph

DEFAULT_CAP = 22


class OracleCapExceeded(ValueError):
    """Graph too large for exhaustive enumeration; use a class solver."""


@njit
def _profile_kernel(nbr: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    dom = np.zeros(size, dtype=np.uint64)
    pc = np.zeros(size, dtype=np.int8)
    for i in range(n):
        bit = 1 << i
        m = nbr[i]
        for mask in range(bit, bit << 1):
            dom[mask] = dom[mask - bit] | m
            pc[mask] = pc[mask - bit] + 1
    mindom = np.full(n + 1, np.int64(64), dtype=np.int64)
    mindom[0] = 0
    m1 = np.uint64(0x5555555555555555)
    m2 = np.uint64(0x3333333333333333)
    m4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    h = np.uint64(0x0101010101010101)
    one = np.uint64(1)
    two = np.uint64(2)
    four = np.uint64(4)
    s56 = np.uint64(56)
    for mask in range(1, size):
        x = dom[mask]
        x = x - ((x >> one) & m1)
        x = (x & m2) + ((x >> two) & m2)
        x = (x + (x >> four)) & m4
        cnt = np.int64((x * h) >> s56)
        b = pc[mask]
        if cnt < mindom[b]:
            mindom[b] = cnt
    return mindom


def _profile_numpy(nbr: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    dom = np.zeros(size, dtype=np.uint64)
    for i in range(n):
        bit = 1 << i
        dom[bit : bit << 1] = dom[:bit] | nbr[i]
    pc_mask = np.bitwise_count(np.arange(size, dtype=np.uint64)).astype(np.int64)
    pc_dom = np.bitwise_count(dom).astype(np.int64)
    mindom = np.full(n + 1, np.int64(64), dtype=np.int64)
    np.minimum.at(mindom, pc_mask, pc_dom)
    return mindom


@njit
def _decide_kernel(nbr: np.ndarray, n: int, b: int, limit: int) -> bool:
    # Is there a b-subset whose closed neighborhood has size <= limit?
    m1 = np.uint64(0x5555555555555555)
    m2 = np.uint64(0x3333333333333333)
    m4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    h = np.uint64(0x0101010101010101)
    one = np.uint64(1)
    two = np.uint64(2)
    four = np.uint64(4)
    s56 = np.uint64(56)
    pos = np.full(b, -1, dtype=np.int64)
    doms = np.zeros(b + 1, dtype=np.uint64)
    i = 0
    while i >= 0:
        pos[i] += 1
        if pos[i] > n - (b - i):
            i -= 1
            continue
        x = doms[i] | nbr[pos[i]]
        y = x - ((x >> one) & m1)
        y = (y & m2) + ((y >> two) & m2)
        y = (y + (y >> four)) & m4
        if np.int64((y * h) >> s56) > limit:
            continue
        if i == b - 1:
            return True
        doms[i + 1] = x
        i += 1
        pos[i] = pos[i - 1]
    return False


def _decide_python(adj_masks: list[int], n: int, b: int, limit: int) -> bool:
    doms = [0] * (b + 1)
    pos = [-1] * b
    i = 0
    while i >= 0:
        pos[i] += 1
        if pos[i] > n - (b - i):
            i -= 1
            continue
        x = doms[i] | adj_masks[pos[i]]
        if x.bit_count() > limit:
            continue
        if i == b - 1:
            return True
        doms[i + 1] = x
        i += 1
        pos[i] = pos[i - 1]
    return False


def brute_profile(g: Graph, cap: int = DEFAULT_CAP) -> BWProfile:
    """Exact profile by exhaustive enumeration of black sets (n <= cap)."""
    if g.n > cap:
        raise OracleCapExceeded(f"graph has {g.n} > cap={cap} vertices")
    if g.n == 0:
        return BWProfile([0])
    nbr = g.closed_nbr_bits()
    if numba_enabled():
        mindom = _profile_kernel(nbr, g.n)
    else:
        mindom = _profile_numpy(nbr, g.n)
    return BWProfile([g.n - int(mindom[b]) for b in range(g.n + 1)])


def decide_oracle(g: Graph, b: int, w: int, cap: int = DEFAULT_CAP) -> bool:
    """Exact feasibility of (b, w) black/white counts on g."""
    if b < 0 or w < 0:
        raise ValueError("counts must be nonnegative")
    if g.n > cap:
        raise OracleCapExceeded(f"graph has {g.n} > cap={cap} vertices")
    if b + w > g.n:
        return False
    b, w = min(b, w), max(b, w)  # color-swap symmetry; enumerate the small side
    if b == 0:
        return True  # w <= n already guaranteed
    if numba_enabled():
        return bool(_decide_kernel(g.closed_nbr_bits(), g.n, b, g.n - w))
    masks = [int(x) for x in g.closed_nbr_bits()]
    return _decide_python(masks, g.n, b, g.n - w)
