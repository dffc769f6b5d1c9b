"""Minimum-weight and weight-distribution engines.

Three routes, all built on the identity that the b plane of a codeword
equals its GF(2) message (so codeword weight >= message bit weight):

  * full Gray walk over all 2^n messages (exact distribution, n <= 40);
  * message-weight census: enumerating all messages of bit weight <= w
    visits every codeword of weight <= w, giving exact counts A_i for
    i <= w and an exact minimum weight whenever the minimum found is
    <= w;
  * seeded heuristic search for upper-bound witnesses at large n.

For circulant codes the census can enumerate only messages containing
position 0: rotating a message rotates its codeword, so each weight-k
orbit is counted with multiplicity k*orbit_size/n and the full tally is
recovered by the exact integer scaling count * n / k (per message
weight k).
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field

from . import kernels
from .code import GraphCode, codeword_weight, encode
from .gf4 import hamming_weight

FULL_WALK_CAP = 40
DEFAULT_WORK_CAP = 2 * 10**10


class WorkCapExceeded(Exception):
    """Raised when an enumeration's estimated step count exceeds its cap."""


@dataclass(frozen=True)
class Certification:
    """How trustworthy a reported minimum weight is.

    kind: 'exact', 'lower_bound_certified' (no codeword of weight <
    limit exists; d_min, if set, is only an upper bound), or
    'upper_bound_only' (a witness was found, nothing ruled out below).
    """

    kind: str
    limit: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("exact", "lower_bound_certified", "upper_bound_only"):
            raise ValueError(f"unknown certification kind: {self.kind}")
        if (self.kind == "lower_bound_certified") != (self.limit is not None):
            raise ValueError("limit set iff lower_bound_certified")

    def describe(self) -> str:
        if self.kind == "lower_bound_certified":
            return f"lower_bound_certified(>= {self.limit})"
        return self.kind


EXACT = Certification("exact")
UPPER_BOUND_ONLY = Certification("upper_bound_only")


@dataclass(frozen=True)
class WeightReport:
    """Minimum weight plus (possibly partial) weight distribution."""

    n: int
    d_min: int | None
    certification: Certification
    distribution: dict[int, int] = field(default_factory=dict)
    covered_up_to: int | None = None  # A_i exact for all i <= this
    census_count: int = 0
    witness: int | None = None  # message bitset of a d_min codeword
    wall_time: float = 0.0
    shards: int = 1

    def to_json(self, support=None) -> str:
        payload = {
            "n": self.n,
            "d_min": self.d_min,
            "certification": self.certification.describe(),
            "distribution": {str(i): c for i, c in sorted(self.distribution.items())},
            "covered_up_to": self.covered_up_to,
            "census_count": self.census_count,
            "witness": format(self.witness, "b")[::-1] if self.witness is not None else None,
            "wall_time": round(self.wall_time, 3),
            "shards": self.shards,
        }
        if support is not None:
            payload["support"] = support.format()
        return json.dumps(payload)


@dataclass(frozen=True)
class EnumerationPlan:
    """How to enumerate: full_gray | message_weight_census | heuristic."""

    strategy: str = "full_gray"
    w_max: int | None = None
    seed: int = 1
    budget: int = 10**7
    thread_shards: int = 1
    early_abort_threshold: int | None = None
    use_orbits: bool = True
    work_cap: int = DEFAULT_WORK_CAP

    def __post_init__(self) -> None:
        if self.strategy not in ("full_gray", "message_weight_census", "heuristic"):
            raise ValueError(f"unknown strategy: {self.strategy}")
        if self.thread_shards < 1:
            raise ValueError("shards must be >= 1")


def census_steps(n: int, w_max: int, use_orbits: bool = False) -> int:
    """Number of messages a census up to weight w_max will visit."""
    if use_orbits:
        return sum(math.comb(n - 1, k - 1) for k in range(1, w_max + 1))
    return sum(math.comb(n, k) for k in range(1, w_max + 1))


def _rows_lo64(code: GraphCode):
    lo, hi = kernels.pack_rows(code.graph.rows, code.n)
    if int(hi.max()) != 0:
        raise ValueError("length beyond 64 requires the two-word census path")
    return lo


def full_weight_distribution(code: GraphCode, shards: int = 1,
                             cap: int = FULL_WALK_CAP) -> WeightReport:
    """Exact A_i for all i by a Gray-code walk over all 2^n messages."""
    n = code.n
    if n > cap:
        raise WorkCapExceeded(f"full walk over 2^{n} messages exceeds cap 2^{cap}")
    shard_bits = max(0, min(n - 1, (shards - 1).bit_length()))
    t0 = time.monotonic()
    hist = kernels.gray_histogram(_rows_lo64(code), n, shard_bits)
    dist = {i: int(c) for i, c in enumerate(hist) if c}
    d_min = min(i for i in dist if i > 0)
    return WeightReport(
        n=n, d_min=d_min, certification=EXACT, distribution=dist,
        covered_up_to=n, census_count=2**n,
        wall_time=time.monotonic() - t0, shards=1 << shard_bits,
    )


def _census(code: GraphCode, w_max: int, use_orbits: bool,
            early_abort: int | None, work_cap: int):
    """Shared census loop: returns (dist, min_w, witness, steps, aborted)."""
    n = code.n
    use_orbits = use_orbits and code.graph.is_circulant()
    steps = census_steps(n, w_max, use_orbits)
    if steps > work_cap:
        raise WorkCapExceeded(
            f"census to weight {w_max} needs ~{steps:.3e} steps (cap {work_cap:.3e})"
        )
    rows_lo, rows_hi = kernels.pack_rows(code.graph.rows, n)
    abort_below = 0 if early_abort is None else early_abort
    dist: dict[int, int] = {0: 1}
    min_w = None
    witness = None
    visited = 0
    for k in range(1, w_max + 1):
        hist, best_w, m_lo, m_hi, aborted = kernels.census_fixed_weight(
            rows_lo, rows_hi, n, k, use_orbits, abort_below
        )
        if aborted:
            return dist, int(best_w), kernels.unpack_message(m_lo, m_hi), visited, True
        visited += int(hist.sum())
        for i, c in enumerate(hist):
            if not c:
                continue
            c = int(c)
            if use_orbits:
                total = c * n
                if total % k:
                    raise AssertionError("orbit scaling not integral")
                c = total // k
            dist[i] = dist.get(i, 0) + c
        if best_w <= n and (min_w is None or int(best_w) < min_w):
            min_w = int(best_w)
            witness = kernels.unpack_message(m_lo, m_hi)
        # early exit: once min_w <= k, heavier messages cannot beat it
        # and all A_i for i <= w_max still need the remaining k... only
        # stop early when the caller just wants the minimum
    return dist, min_w, witness, visited, False


def min_weight_exact(code: GraphCode, plan: EnumerationPlan) -> WeightReport:
    """Exact minimum weight via full walk or message-weight census.

    Census route: enumerate messages of bit weight <= w_max; if the
    minimum codeword weight found is <= w_max it is exact, otherwise no
    codeword of weight <= w_max exists (lower_bound_certified).
    """
    n = code.n
    t0 = time.monotonic()
    if plan.strategy == "full_gray":
        return full_weight_distribution(code, shards=plan.thread_shards)
    if plan.strategy == "heuristic":
        raise ValueError("heuristic plans cannot certify exact minimum weight")
    w_max = plan.w_max if plan.w_max is not None else n
    w_max = min(w_max, n)
    use_orbits = plan.use_orbits and code.graph.is_circulant()
    rows_lo, rows_hi = kernels.pack_rows(code.graph.rows, n)
    abort_below = plan.early_abort_threshold or 0
    min_w = None
    witness = None
    visited = 0
    for k in range(1, w_max + 1):
        if min_w is not None and min_w <= k:
            break  # any lighter codeword would use a lighter message
        if census_steps(n, k, use_orbits) - census_steps(n, k - 1, use_orbits) > plan.work_cap:
            raise WorkCapExceeded(f"census layer k={k} exceeds work cap")
        hist, best_w, m_lo, m_hi, aborted = kernels.census_fixed_weight(
            rows_lo, rows_hi, n, k, use_orbits, abort_below
        )
        visited += int(hist.sum())
        if aborted:
            return WeightReport(
                n=n, d_min=int(best_w), certification=UPPER_BOUND_ONLY,
                census_count=visited, witness=kernels.unpack_message(m_lo, m_hi),
                wall_time=time.monotonic() - t0,
            )
        if best_w <= n and (min_w is None or int(best_w) < min_w):
            min_w = int(best_w)
            witness = kernels.unpack_message(m_lo, m_hi)
    if min_w is not None and min_w <= w_max:
        cert = EXACT
    else:
        cert = Certification("lower_bound_certified", w_max + 1)
    return WeightReport(
        n=n, d_min=min_w, certification=cert, census_count=visited,
        witness=witness, wall_time=time.monotonic() - t0,
    )


def partial_distribution_census(code: GraphCode, w_max: int,
                                use_orbits: bool = True,
                                work_cap: int = DEFAULT_WORK_CAP) -> WeightReport:
    """Exact counts A_i for all i <= w_max by the message-weight census."""
    t0 = time.monotonic()
    dist, min_w, witness, visited, _ = _census(
        code, w_max, use_orbits, early_abort=None, work_cap=work_cap
    )
    dist = {i: c for i, c in dist.items() if i <= w_max}
    if min_w is not None and min_w <= w_max:
        cert = EXACT
        d_min = min_w
    else:
        cert = Certification("lower_bound_certified", w_max + 1)
        d_min = min_w
    return WeightReport(
        n=code.n, d_min=d_min, certification=cert, distribution=dist,
        covered_up_to=w_max, census_count=visited, witness=witness,
        wall_time=time.monotonic() - t0,
    )


def _pack_family(rows: list[int], msgs: list[int]):
    import numpy as np

    m64 = (1 << 64) - 1
    m = len(rows)
    rl = np.empty(m, np.uint64)
    rh = np.empty(m, np.uint64)
    ml = np.empty(m, np.uint64)
    mh = np.empty(m, np.uint64)
    for i in range(m):
        rl[i] = rows[i] & m64
        rh[i] = rows[i] >> 64
        ml[i] = msgs[i] & m64
        mh[i] = msgs[i] >> 64
    return rl, rh, ml, mh


def _reflection_family(code: GraphCode, axis: int):
    """Generators spanning the messages fixed by the reflection x -> axis-x.

    Each pair {i, axis-i} becomes one derived generator (XOR of the two
    rows, both message bits); reflection fixed points contribute their
    single row.  Subsets of this family are exactly the symmetric
    messages.
    """
    n = code.n
    rows, msgs = [], []
    seen = set()
    for i in range(n):
        j = (axis - i) % n
        if i in seen or j in seen:
            continue
        seen.add(i)
        seen.add(j)
        if i == j:
            rows.append(code.graph.rows[i])
            msgs.append(1 << i)
        else:
            rows.append(code.graph.rows[i] ^ code.graph.rows[j])
            msgs.append((1 << i) | (1 << j))
    return rows, msgs


def _rotation_family(code: GraphCode, q: int):
    """Generators spanning the messages of period q (q a divisor of n)."""
    n = code.n
    reps = n // q
    rows, msgs = [], []
    for j in range(q):
        r = 0
        m = 0
        for t in range(reps):
            r ^= code.graph.rows[j + t * q]
            m |= 1 << (j + t * q)
        rows.append(r)
        msgs.append(m)
    return rows, msgs


def _census_family(code: GraphCode, rows: list[int], msgs: list[int],
                   sizes, best: tuple[int, int] | None, target: int):
    """Run census_subsets over subset sizes; fold results into best."""
    rl, rh, ml, mh = _pack_family(rows, msgs)
    for t in sizes:
        _, bw, w_lo, w_hi, _ = kernels.census_subsets(
            rl, rh, ml, mh, code.n, t, False, 0
        )
        if bw <= code.n:
            msg = kernels.unpack_message(w_lo, w_hi)
            w = verify_witness(code, msg)
            if w != bw:
                raise AssertionError("kernel witness failed re-verification")
            if best is None or w < best[1]:
                best = (msg, w)
            if best[1] <= target:
                return best
    return best


def _weight_parities(code: GraphCode) -> tuple[int, ...]:
    """Possible codeword-weight parities per message-weight parity.

    wt(c) = wt(x) + wt(xA) - wt(x & xA) and wt(x & xA) = x A x^T = 0
    (mod 2), so wt(c) is congruent to wt(x) + wt(xA) mod 2.  With even
    valency wt(c) has the message's parity; with odd valency all
    codeword weights are even (the Type II case).
    """
    if code.graph.degree(0) % 2 == 1:
        return (0,)  # even weights from both message parities
    return (0, 1)  # parity of message carries over


def low_weight_search(code: GraphCode, target: int, budget: int = 10**7,
                      seed: int = 1, layer_cap: int = 10**10) -> tuple[int, int] | None:
    """Heuristic hunt for a codeword of weight <= target.

    Deterministic escalating phases followed by seeded annealing:

      1. plain message-weight census over low message weights (parity
         filtered: with even valency a weight-w codeword needs a
         message of the same parity), each layer capped at layer_cap;
      2. census over rotation-periodic messages (composite n only);
      3. census over reflection-symmetric messages, one axis class for
         odd n, two for even n;
      4. simulated annealing sweeps over message weights near target.

    Returns (message, weight) for a witness of weight <= target, or
    None.  Witnesses re-verify independently via encode + weight.
    """
    n = code.n
    if target >= n:
        # any single generator row already qualifies (weight <= n)
        return (1, codeword_weight(code, 1))
    even_valency = code.graph.degree(0) % 2 == 0
    circ = code.graph.is_circulant()

    def done(b):
        return b is not None and b[1] <= target

    best: tuple[int, int] | None = None
    rows_lo, rows_hi = kernels.pack_rows(code.graph.rows, n)

    def plain_layers(cap_lo, cap_hi, best):
        for k in range(1, min(n, target) + 1):
            if even_valency and (k - target) % 2 != 0:
                continue
            steps = math.comb(n - 1, k - 1) if circ else math.comb(n, k)
            if steps <= cap_lo or steps > cap_hi:
                continue
            _, bw, w_lo, w_hi, _ = kernels.census_fixed_weight(
                rows_lo, rows_hi, n, k, circ, 0
            )
            if bw <= n:
                msg = kernels.unpack_message(w_lo, w_hi)
                w = verify_witness(code, msg)
                if best is None or w < best[1]:
                    best = (msg, w)
                if done(best):
                    return best
        return best

    # phase 1: plain census, cheap layers only
    cheap_cap = min(layer_cap, 10**8)
    best = plain_layers(0, cheap_cap, best)
    if done(best):
        return best

    # phase 2: rotation-periodic messages
    if circ:
        for q in range(2, n):
            if n % q or q == n:
                continue
            rows, msgs = _rotation_family(code, q)
            max_t = min(q, (target * q) // n)
            best = _census_family(code, rows, msgs, range(1, max_t + 1), best, target)
            if done(best):
                return best

    # phase 3: reflection-symmetric messages
    axes = (0,) if n % 2 else (0, 1)
    for axis in axes:
        rows, msgs = _reflection_family(code, axis)
        sizes = []
        for t in range(1, (target + 3) // 2 + 1):
            if math.comb(len(rows), t) <= layer_cap:
                sizes.append(t)
        best = _census_family(code, rows, msgs, sizes, best, target)
        if done(best):
            return best

    # phase 1 again, deeper layers
    best = plain_layers(cheap_cap, layer_cap, best)
    if done(best):
        return best

    # phase 4: annealing
    ks = [k for k in range(max(1, target // 2), min(n, target) + 1)
          if not even_valency or (k - target) % 2 == 0]
    slice_budget = max(10_000, budget // max(1, 2 * len(ks)))
    for round_no in (1, 2):
        for k in ks:
            bw, m_lo, m_hi = kernels.anneal_search(
                rows_lo, rows_hi, n, k, slice_budget,
                seed + 7919 * k + 104729 * round_no, target,
                max(2000, slice_budget // 20), 4.0,
            )
            if bw <= n:
                msg = kernels.unpack_message(m_lo, m_hi)
                w = verify_witness(code, msg)
                if w != bw:
                    raise AssertionError("kernel witness failed re-verification")
                if best is None or w < best[1]:
                    best = (msg, w)
                if done(best):
                    return best
    return best if done(best) else None


def verify_witness(code: GraphCode, message: int) -> int:
    """Independent re-check of a witness message: encode and weigh it."""
    return hamming_weight(encode(code, message))


def write_report(path, report: WeightReport, support=None) -> None:
    with open(path, "w") as fh:
        fh.write(report.to_json(support) + "\n")
