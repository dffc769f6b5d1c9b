"""Searches over circulant supports maximizing code minimum weight.

Exhaustive search iterates every symmetric support of a given order
(optionally restricted to Type I or Type II), evaluating each candidate
with an early-abort census: a candidate is discarded as soon as any
codeword lighter than the current best minimum weight appears.
Multiplier pruning keeps only supports that are lexicographically
minimal among their images under unit multiplications, which preserve
the weight distribution (isomorphic graphs).

The randomized campaign hunts large orders with seeded random supports
plus hill climbing on symmetric bit flips.
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field
from math import gcd

from . import kernels
from .code import GraphCode, TypeClass, from_support, type_of_by_support
from .graphs import CirculantSupport, support_from_generators
from .weights import EXACT, UPPER_BOUND_ONLY, Certification, census_steps, low_weight_search


@dataclass(frozen=True)
class CampaignEntry:
    support: CirculantSupport
    d_found: int
    certification: Certification


@dataclass(frozen=True)
class SearchResult:
    n: int
    best_d: int
    witnesses: tuple[CirculantSupport, ...]
    exhaustive: bool
    type_restriction: TypeClass | None
    explored: int
    entries: tuple[CampaignEntry, ...] = field(default_factory=tuple)
    seed: int | None = None


def free_positions(n: int) -> list[int]:
    """Positions whose bits determine a symmetric support of order n."""
    return list(range(2, n // 2 + 2))


def iter_symmetric_supports(n: int, type_restriction: TypeClass | None = None):
    """All symmetric supports by increasing size, then lexicographically."""
    fp = free_positions(n)
    self_paired = n // 2 + 1 if n % 2 == 0 else None
    masks = []
    for mask in range(1 << len(fp)):
        half = [fp[i] for i in range(len(fp)) if (mask >> i) & 1]
        if type_restriction is not None and self_paired is not None:
            has_self = self_paired in half
            if type_restriction is TypeClass.TYPE_II and not has_self:
                continue
            if type_restriction is TypeClass.TYPE_I and has_self:
                continue
        s = support_from_generators(n, half)
        masks.append(s)
    if type_restriction is TypeClass.TYPE_II and n % 2 == 1:
        return iter(())  # odd length cannot be Type II
    masks.sort(key=lambda s: (s.size, s.positions))
    return iter(masks)


def canonical_under_multipliers(support: CirculantSupport) -> bool:
    """True iff the support is lex-minimal among its unit-multiplier images."""
    n = support.n
    pos = support.positions
    offs = [i - 1 for i in pos]
    for a in range(2, n):
        if gcd(a, n) != 1:
            continue
        image = tuple(sorted((a * o) % n + 1 for o in offs))
        if image < pos:
            return False
    return True


def _min_weight_screen(code: GraphCode, abort_below: int) -> tuple[int, bool]:
    """Minimum weight of a circulant code with early abort.

    Returns (weight, certified): certified=True means weight is the
    exact minimum; False means a codeword of weight < abort_below was
    found (weight is just that witness's weight).
    """
    n = code.n
    rows_lo, rows_hi = kernels.pack_rows(code.graph.rows, n)
    fix0 = code.graph.is_circulant()
    min_w = n + 1
    for k in range(1, n + 1):
        if min_w <= k:
            break
        _, bw, _, _, aborted = kernels.census_fixed_weight(
            rows_lo, rows_hi, n, k, fix0, abort_below
        )
        if aborted:
            return int(bw), False
        if bw < min_w:
            min_w = int(bw)
            if min_w < abort_below:
                return min_w, False
    return min_w, True


def exhaustive_dmax(
    n: int,
    type_restriction: TypeClass | None = None,
    prune_multipliers: bool = True,
    support_cap: int | None = None,
    exhaustive_limit: int = 30,
    force: bool = False,
    checkpoint_path=None,
    checkpoint_every: int = 1024,
) -> SearchResult:
    """Largest minimum weight over all circulant codes of order n.

    Iterates all 2^(n//2) (even n) or 2^((n-1)//2) (odd n) symmetric
    supports; candidates are screened with an early-abort census against
    the best minimum weight so far.  Orders above exhaustive_limit are
    refused unless force=True.
    """
    if n > exhaustive_limit and not force:
        raise ValueError(
            f"n={n} above exhaustive limit {exhaustive_limit}; pass force=True"
        )
    best_d = 0
    witnesses: list[CirculantSupport] = []
    explored = 0
    skipped = 0
    start_index = 0
    supports = list(iter_symmetric_supports(n, type_restriction))
    if checkpoint_path is not None:
        state = _load_checkpoint(checkpoint_path)
        if state is not None and state["n"] == n:
            start_index = state["index"]
            best_d = state["best_d"]
            witnesses = [CirculantSupport(n, tuple(p)) for p in state["witnesses"]]
            explored = state.get("explored", start_index)
    for pos, support in enumerate(supports):
        if pos < start_index:
            continue
        if support_cap is not None and explored >= support_cap:
            return SearchResult(
                n, best_d, tuple(witnesses), False, type_restriction, explored
            )
        if prune_multipliers and not canonical_under_multipliers(support):
            skipped += 1
            continue
        explored += 1
        code = from_support(support)
        d, certified = _min_weight_screen(code, abort_below=best_d)
        if certified:
            if d > best_d:
                best_d = d
                witnesses = [support]
            elif d == best_d:
                witnesses.append(support)
        if checkpoint_path is not None and explored % checkpoint_every == 0:
            _save_checkpoint(checkpoint_path, n, pos + 1, best_d, witnesses, explored)
    return SearchResult(
        n, best_d, tuple(witnesses), True, type_restriction, explored
    )


def _load_checkpoint(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (FileNotFoundError, json.JSONDecodeError):
        return None


def _save_checkpoint(path, n, index, best_d, witnesses, explored) -> None:
    state = {
        "n": n,
        "index": index,
        "best_d": best_d,
        "witnesses": [list(w.positions) for w in witnesses],
        "explored": explored,
    }
    with open(path, "w") as fh:
        json.dump(state, fh)


def verify_type_gap(n: int, **kwargs) -> tuple[int, int]:
    """(d_max, d_max restricted to Type I) for an even order n."""
    if n % 2:
        raise ValueError("type gap defined for even length only")
    d_all = exhaustive_dmax(n, None, **kwargs).best_d
    d_type1 = exhaustive_dmax(n, TypeClass.TYPE_I, **kwargs).best_d
    return d_all, d_type1


def _random_support(n: int, rng: random.Random) -> CirculantSupport:
    fp = free_positions(n)
    half = [p for p in fp if rng.random() < 0.5]
    return support_from_generators(n, half)


def _toggle(support: CirculantSupport, position: int) -> CirculantSupport:
    """Flip one symmetric pair (or the self-paired bit) of the support."""
    n = support.n
    half = {p for p in support.positions if p <= n // 2 + 1}
    if position in half:
        half.remove(position)
    else:
        half.add(position)
    return support_from_generators(n, half)


def _screen_support(support: CirculantSupport, target_d: int, budget: int,
                    seed: int, exact_cap: int):
    """Evaluate one candidate: (d_found, certification) or None if a
    codeword below target was discovered."""
    code = from_support(support)
    n = support.n
    if census_steps(n, target_d, use_orbits=True) <= exact_cap:
        d, certified = _min_weight_screen(code, abort_below=target_d)
        if not certified:
            return None
        return d, EXACT
    found = low_weight_search(code, target_d, budget=budget, seed=seed,
                              layer_cap=max(10**6, exact_cap // target_d))
    if found is None:
        # nothing at or below target discovered: not refuted, no witness
        return target_d, UPPER_BOUND_ONLY
    msg, w = found
    if w < target_d:
        return None
    return w, UPPER_BOUND_ONLY


def randomized_campaign(
    n: int,
    target_d: int,
    budget: int = 200,
    seed: int = 1,
    search_budget: int = 2 * 10**6,
    exact_cap: int = 2 * 10**9,
    log_path=None,
) -> SearchResult:
    """Seeded random + hill-climbing hunt for supports reaching target_d.

    Each candidate is screened by low-weight search (or an exact census
    when cheap); candidates with any discovered codeword below target_d
    are rejected.  Hill climbing toggles one symmetric pair at a time
    and restarts from a fresh random support on stagnation.  Returns all
    accepted supports with their certification level; reproducible for a
    fixed seed.
    """
    rng = random.Random(seed)
    entries: list[CampaignEntry] = []
    log_lines: list[str] = []
    explored = 0
    best_d = 0
    current = _random_support(n, rng)
    stagnation = 0
    while explored < budget:
        explored += 1
        t0 = time.monotonic()
        outcome = _screen_support(current, target_d, search_budget,
                                  seed + explored, exact_cap)
        dt = time.monotonic() - t0
        if outcome is None:
            log_lines.append(f"{current.format()} | abort | - | {dt:.2f}")
            # climb: toggle a random pair and try again
            current = _toggle(current, rng.choice(free_positions(n)))
            stagnation += 1
        else:
            d_found, cert = outcome
            log_lines.append(
                f"{current.format()} | {d_found} | {cert.describe()} | {dt:.2f}"
            )
            entries.append(CampaignEntry(current, d_found, cert))
            best_d = max(best_d, d_found)
            current = _toggle(current, rng.choice(free_positions(n)))
            stagnation = 0
        if stagnation >= 8:
            current = _random_support(n, rng)
            stagnation = 0
    if log_path is not None:
        with open(log_path, "a") as fh:
            fh.write(f"# campaign n={n} target={target_d} seed={seed}\n")
            for line in log_lines:
                fh.write(line + "\n")
    witnesses = tuple(e.support for e in entries)
    return SearchResult(
        n, best_d, witnesses, False, None, explored,
        entries=tuple(entries), seed=seed,
    )
