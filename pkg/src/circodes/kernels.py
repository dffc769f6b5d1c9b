"""Hot enumeration kernels, JIT-compiled with numba.

All kernels work on the generator matrix of a graph code in packed
form: row i of the adjacency matrix as one or two uint64 words.  The b
plane of any codeword equals its GF(2) message, so a codeword's weight
is popcount((message*A) | message) and never drops below the message's
bit weight; the census kernels rely on that bound.

Message space conventions:
  * gray_histogram walks all 2^n messages, one generator XOR per step;
  * census_fixed_weight enumerates all weight-k messages (optionally
    only those containing position 0) in lexicographic order with an
    odometer of prefix XORs, amortized one row XOR per combination;
  * anneal_search is a seeded simulated-annealing walk over weight-k
    messages with single swap moves.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_ONE = np.uint64(1)


@njit(inline="always")
def _popcount(x):
    x = x - ((x >> _ONE) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True)
def gray_histogram(rows, n, shard_bits):
    """Weight histogram over all 2^n codewords via a sharded Gray walk.

    Shard s covers the messages whose top shard_bits equal s; within a
    shard the low bits sweep in Gray-code order, so each step XORs a
    single generator row into the accumulator.  Requires n <= 63.
    """
    low = n - shard_bits
    nshards = 1 << shard_bits
    hist = np.zeros(n + 1, np.int64)
    for s in range(nshards):
        acc_a = np.uint64(0)
        acc_b = np.uint64(0)
        m = s
        bitpos = low
        while m:
            if m & 1:
                acc_a ^= rows[bitpos]
                acc_b ^= _ONE << np.uint64(bitpos)
            m >>= 1
            bitpos += 1
        hist[_popcount(acc_a | acc_b)] += 1
        steps = np.int64(1) << low
        gray_prev = np.int64(0)
        for i in range(np.int64(1), steps):
            gray = i ^ (i >> np.int64(1))
            diff = gray ^ gray_prev
            gray_prev = gray
            j = np.int64(0)
            d = diff
            while (d & np.int64(1)) == 0:
                d >>= np.int64(1)
                j += 1
            acc_a ^= rows[j]
            acc_b ^= _ONE << np.uint64(j)
            hist[_popcount(acc_a | acc_b)] += 1
    return hist


@njit(cache=True)
def census_subsets(rows_lo, rows_hi, msg_lo, msg_hi, n, k, fix_first, abort_below):
    """Visit every k-subset of a generator family and tally codeword weights.

    Generator t contributes rows_*[t] to the a plane and msg_*[t] to the
    b plane.  For the plain message-weight census the family is the
    generator matrix itself (msg bit t for generator t); derived
    families (reflection pairs, rotation orbits) reuse the same loop.
    With fix_first=True only subsets containing generator 0 are visited.

    Returns (hist, best_w, best_msg_lo, best_msg_hi, aborted).  If any
    codeword of weight < abort_below is seen, stops immediately with
    aborted=True and that codeword's message as the witness.
    """
    m = len(rows_lo)
    hist = np.zeros(n + 1, np.int64)
    best_w = np.int64(n + 1)
    best_lo = np.uint64(0)
    best_hi = np.uint64(0)
    if k <= 0 or k > m:
        return hist, best_w, best_lo, best_hi, False

    idx = np.empty(k, np.int64)
    pa_lo = np.empty(k, np.uint64)
    pa_hi = np.empty(k, np.uint64)
    pb_lo = np.empty(k, np.uint64)
    pb_hi = np.empty(k, np.uint64)
    for t in range(k):
        idx[t] = t
    t_min = 1 if fix_first else 0  # k == 1 then visits only subset {0}

    # build full prefix stack
    for t in range(k):
        j = idx[t]
        if t == 0:
            pa_lo[0] = rows_lo[j]
            pa_hi[0] = rows_hi[j]
            pb_lo[0] = msg_lo[j]
            pb_hi[0] = msg_hi[j]
        else:
            pa_lo[t] = pa_lo[t - 1] ^ rows_lo[j]
            pa_hi[t] = pa_hi[t - 1] ^ rows_hi[j]
            pb_lo[t] = pb_lo[t - 1] ^ msg_lo[j]
            pb_hi[t] = pb_hi[t - 1] ^ msg_hi[j]

    last = k - 1
    while True:
        w = _popcount(pa_lo[last] | pb_lo[last]) + _popcount(pa_hi[last] | pb_hi[last])
        hist[w] += 1
        if w < best_w:
            best_w = w
            best_lo = pb_lo[last]
            best_hi = pb_hi[last]
            if best_w < abort_below:
                return hist, best_w, best_lo, best_hi, True
        # lexicographic successor
        t = last
        while t >= t_min and idx[t] == m - k + t:
            t -= 1
        if t < t_min:
            break
        idx[t] += 1
        for u in range(t, k):
            if u > t:
                idx[u] = idx[u - 1] + 1
            j = idx[u]
            if u == 0:
                pa_lo[0] = rows_lo[j]
                pa_hi[0] = rows_hi[j]
                pb_lo[0] = msg_lo[j]
                pb_hi[0] = msg_hi[j]
            else:
                pa_lo[u] = pa_lo[u - 1] ^ rows_lo[j]
                pa_hi[u] = pa_hi[u - 1] ^ rows_hi[j]
                pb_lo[u] = pb_lo[u - 1] ^ msg_lo[j]
                pb_hi[u] = pb_hi[u - 1] ^ msg_hi[j]
    return hist, best_w, best_lo, best_hi, False


def identity_messages(m: int):
    """Message-bit patterns for the plain census: bit t for generator t."""
    lo = np.zeros(m, np.uint64)
    hi = np.zeros(m, np.uint64)
    for t in range(m):
        if t < 64:
            lo[t] = np.uint64(1) << np.uint64(t)
        else:
            hi[t] = np.uint64(1) << np.uint64(t - 64)
    return lo, hi


def census_fixed_weight(rows_lo, rows_hi, n, k, fix_first, abort_below):
    """Plain message-weight census over all weight-k messages."""
    msg_lo, msg_hi = identity_messages(len(rows_lo))
    return census_subsets(
        rows_lo, rows_hi, msg_lo, msg_hi, n, k, fix_first, abort_below
    )


@njit(inline="always")
def _xorshift(state):
    state ^= state << np.uint64(13)
    state ^= state >> np.uint64(7)
    state ^= state << np.uint64(17)
    return state


@njit(cache=True)
def anneal_search(rows_lo, rows_hi, n, k, iters, seed, target, block, t0):
    """Simulated annealing over weight-k messages, swap neighbourhood.

    Runs in blocks of `block` iterations; within a block the temperature
    decays geometrically from t0, and each block restarts from a fresh
    random weight-k subset.  Deterministic for a fixed seed.  Returns
    (best_w, best_msg_lo, best_msg_hi); stops early once best_w <= target.
    """
    state = np.uint64(seed) * np.uint64(2685821657736338717) | _ONE
    idx = np.empty(k, np.int64)
    perm = np.empty(n, np.int64)
    best_w = np.int64(n + 1)
    best_lo = np.uint64(0)
    best_hi = np.uint64(0)
    if k <= 0 or k > n:
        return best_w, best_lo, best_hi

    in_set = np.zeros(n, np.bool_)
    acc_lo = np.uint64(0)
    acc_hi = np.uint64(0)
    x_lo = np.uint64(0)
    x_hi = np.uint64(0)
    it = np.int64(0)
    decay = np.exp(np.log(0.02 / t0) / block) if t0 > 0 else 1.0
    while it < iters:
        # restart: random k-subset via partial Fisher-Yates
        for u in range(n):
            perm[u] = u
            in_set[u] = False
        acc_lo = np.uint64(0)
        acc_hi = np.uint64(0)
        x_lo = np.uint64(0)
        x_hi = np.uint64(0)
        for t in range(k):
            state = _xorshift(state)
            r = t + np.int64(state % np.uint64(n - t))
            perm[t], perm[r] = perm[r], perm[t]
            j = perm[t]
            idx[t] = j
            in_set[j] = True
            acc_lo ^= rows_lo[j]
            acc_hi ^= rows_hi[j]
            if j < 64:
                x_lo ^= _ONE << np.uint64(j)
            else:
                x_hi ^= _ONE << np.uint64(j - 64)
        cur_w = _popcount(acc_lo | x_lo) + _popcount(acc_hi | x_hi)
        temp = t0
        for _ in range(block):
            it += 1
            if it >= iters:
                break
            state = _xorshift(state)
            o = np.int64(state % np.uint64(k))
            p = idx[o]
            while True:
                state = _xorshift(state)
                q = np.int64(state % np.uint64(n))
                if not in_set[q]:
                    break
            p_lo = _ONE << np.uint64(p) if p < 64 else np.uint64(0)
            p_hi = _ONE << np.uint64(p - 64) if p >= 64 else np.uint64(0)
            q_lo = _ONE << np.uint64(q) if q < 64 else np.uint64(0)
            q_hi = _ONE << np.uint64(q - 64) if q >= 64 else np.uint64(0)
            na_lo = acc_lo ^ rows_lo[p] ^ rows_lo[q]
            na_hi = acc_hi ^ rows_hi[p] ^ rows_hi[q]
            nx_lo = x_lo ^ p_lo ^ q_lo
            nx_hi = x_hi ^ p_hi ^ q_hi
            w = _popcount(na_lo | nx_lo) + _popcount(na_hi | nx_hi)
            dw = w - cur_w
            accept = dw <= 0
            if not accept and temp > 0:
                state = _xorshift(state)
                u = np.float64(state >> np.uint64(11)) / 9007199254740992.0
                accept = u < np.exp(-np.float64(dw) / temp)
            if accept:
                acc_lo = na_lo
                acc_hi = na_hi
                x_lo = nx_lo
                x_hi = nx_hi
                idx[o] = q
                in_set[p] = False
                in_set[q] = True
                cur_w = w
                if w < best_w:
                    best_w = w
                    best_lo = x_lo
                    best_hi = x_hi
                    if best_w <= target:
                        return best_w, best_lo, best_hi
            temp *= decay
    return best_w, best_lo, best_hi


def pack_rows(rows: list[int] | tuple[int, ...], n: int):
    """Split adjacency rows (Python int bitsets) into lo/hi uint64 arrays."""
    if n > 128:
        raise ValueError("rows beyond 128 bits not supported")
    lo = np.empty(len(rows), np.uint64)
    hi = np.empty(len(rows), np.uint64)
    m64 = (1 << 64) - 1
    for i, r in enumerate(rows):
        lo[i] = r & m64
        hi[i] = r >> 64
    return lo, hi


def unpack_message(lo: int, hi: int) -> int:
    return int(lo) | (int(hi) << 64)
