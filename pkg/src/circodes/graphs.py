"""Circulant supports, bit-matrix graphs, and graph invariants.

A circulant adjacency matrix is determined by its first row
(r_1, ..., r_n); the support S is the set of 1-indexed positions i with
r_i = 1.  Simple circulant graphs satisfy r_1 = 0 and r_i = r_{n+2-i},
so S is closed under i -> n + 2 - i and 1 is never in S.

Adjacency rows are stored as int bitsets (bit j of row i set iff
vertices i and j are adjacent, 0-indexed).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class CirculantSupport:
    """Order n plus the 1-indexed support of the first adjacency row."""

    n: int
    positions: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n <= 0:
            raise ValueError("order must be positive")
        pos = tuple(sorted(set(self.positions)))
        object.__setattr__(self, "positions", pos)
        for i in pos:
            if i == 1:
                raise ValueError("position 1 not allowed (no loops)")
            if not 2 <= i <= self.n:
                raise ValueError(f"position {i} out of range 2..{self.n}")
            if self.n + 2 - i not in pos:
                raise ValueError(
                    f"support not symmetric: {i} present, {self.n + 2 - i} missing"
                )
        if self.n % 2 == 1 and len(pos) % 2 == 1:
            raise ValueError("odd order forces even support size")

    @property
    def size(self) -> int:
        return len(self.positions)

    def offsets(self) -> tuple[int, ...]:
        """0-indexed offsets j with r_{j+1} = 1."""
        return tuple(i - 1 for i in self.positions)

    def first_row(self) -> int:
        """First adjacency row as a bitset."""
        row = 0
        for j in self.offsets():
            row |= 1 << j
        return row

    def format(self) -> str:
        """One-line form `n: i1,i2,...` matching the printed tables."""
        return f"{self.n}: {','.join(str(i) for i in self.positions)}"

    @staticmethod
    def parse(line: str) -> "CirculantSupport":
        head, _, tail = line.partition(":")
        n = int(head.strip())
        tail = tail.strip()
        pos = tuple(int(t) for t in tail.replace(",", " ").split()) if tail else ()
        return CirculantSupport(n, pos)


def support_from_generators(n: int, half) -> CirculantSupport:
    """Close a set of positions in {2, ..., floor(n/2)+1} under i -> n+2-i."""
    limit = n // 2 + 1
    full: set[int] = set()
    for i in half:
        if not 2 <= i <= limit:
            raise ValueError(f"generator position {i} outside 2..{limit}")
        full.add(i)
        full.add(n + 2 - i)
    return CirculantSupport(n, tuple(full))


def multiplier_image(support: CirculantSupport, a: int) -> CirculantSupport:
    """Map offsets by multiplication with a unit a mod n.

    The resulting circulant graph is isomorphic to the original one via
    the vertex map x -> a*x, so its code has the same weight distribution.
    """
    n = support.n
    if gcd(a % n, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    pos = tuple((a * (i - 1)) % n + 1 for i in support.positions)
    return CirculantSupport(n, pos)


@dataclass(frozen=True)
class BitGraph:
    """Simple undirected graph on vertices 0..v-1, rows as int bitsets."""

    v: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.v <= 0:
            raise ValueError("graph must have at least one vertex")
        if len(self.rows) != self.v:
            raise ValueError("row count does not match vertex count")
        mask = (1 << self.v) - 1
        for i, row in enumerate(self.rows):
            if row & ~mask:
                raise ValueError(f"row {i} has bits beyond vertex count")
            if (row >> i) & 1:
                raise ValueError(f"loop at vertex {i}")
        for i in range(self.v):
            for j in range(i + 1, self.v):
                if ((self.rows[i] >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def edge_count(self) -> int:
        return sum(self.degree(i) for i in range(self.v)) // 2

    def is_regular(self) -> bool:
        return len({self.degree(i) for i in range(self.v)}) == 1

    def is_circulant(self) -> bool:
        """True iff every row is the first row rotated right by its index."""
        r0 = self.rows[0]
        return all(self.rows[k] == _rotate(r0, k, self.v) for k in range(self.v))


def _rotate(row: int, k: int, n: int) -> int:
    """Cyclic right rotation of an n-bit row by k."""
    k %= n
    mask = (1 << n) - 1
    return ((row << k) | (row >> (n - k))) & mask


def adjacency(support: CirculantSupport) -> BitGraph:
    """Circulant adjacency matrix: row j is the first row rotated by j."""
    r0 = support.first_row()
    n = support.n
    return BitGraph(n, tuple(_rotate(r0, k, n) for k in range(n)))


INFINITE = math.inf


@dataclass(frozen=True)
class GraphInvariants:
    """Invariants reported per graph: k, d, g, clique number, |Aut|."""

    valency: int
    diameter: int | float
    girth: int | float
    clique_number: int
    aut_order: int
    aut_exact: bool = True  # False: aut_order is a lower bound only


def _bfs_distances(g: BitGraph, start: int) -> list[int]:
    dist = [-1] * g.v
    dist[start] = 0
    frontier = 1 << start
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            u = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= g.rows[u]
        nxt &= ~seen
        seen |= nxt
        f = nxt
        while f:
            u = (f & -f).bit_length() - 1
            f &= f - 1
            dist[u] = d
        frontier = nxt
    return dist


def diameter(g: BitGraph, all_pairs: bool = True) -> int | float:
    """Longest shortest path; INFINITE if disconnected.

    For vertex-transitive graphs (all circulants) the eccentricity of
    vertex 0 already equals the diameter; all_pairs=False uses that.
    """
    worst = 0
    for start in range(g.v) if all_pairs else (0,):
        dist = _bfs_distances(g, start)
        if min(dist) < 0:
            return INFINITE
        worst = max(worst, max(dist))
    return worst


def girth(g: BitGraph) -> int | float:
    """Length of a shortest cycle; INFINITE for forests."""
    best = INFINITE
    for start in range(g.v):
        dist = [-1] * g.v
        parent = [-1] * g.v
        dist[start] = 0
        queue = [start]
        while queue:
            nxt = []
            for u in queue:
                if 2 * dist[u] + 1 >= best:
                    continue
                row = g.rows[u]
                while row:
                    w = (row & -row).bit_length() - 1
                    row &= row - 1
                    if w == parent[u]:
                        continue
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    else:
                        best = min(best, dist[u] + dist[w] + 1)
            queue = nxt
    return best


def clique_number(g: BitGraph) -> int:
    """Maximum clique size by branch and bound with greedy colouring."""
    n = g.v
    order = _degeneracy_order(g)
    rank = [0] * n
    for r, u in enumerate(order):
        rank[u] = r
    best = 0

    def colour_bound(cand: int) -> list[tuple[int, int]]:
        # Greedy colouring of candidates; returns (vertex, colour) sorted
        # by colour so the strongest bound is branched last.
        colours: list[int] = []  # bitset of vertices per colour class
        out: list[tuple[int, int]] = []
        c = cand
        verts = []
        while c:
            u = (c & -c).bit_length() - 1
            c &= c - 1
            verts.append(u)
        verts.sort(key=lambda u: rank[u])
        for u in verts:
            for ci, cls in enumerate(colours):
                if not (cls & g.rows[u]):
                    colours[ci] |= 1 << u
                    out.append((u, ci + 1))
                    break
            else:
                colours.append(1 << u)
                out.append((u, len(colours)))
        out.sort(key=lambda t: t[1])
        return out

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        coloured = colour_bound(cand)
        for u, colour in reversed(coloured):
            if size + colour <= best:
                return
            expand(cand & g.rows[u], size + 1)
            cand &= ~(1 << u)

    expand((1 << n) - 1, 0)
    return best


def _degeneracy_order(g: BitGraph) -> list[int]:
    remaining = (1 << g.v) - 1
    order = []
    while remaining:
        u = min(
            (v for v in range(g.v) if (remaining >> v) & 1),
            key=lambda v: (g.rows[v] & remaining).bit_count(),
        )
        order.append(u)
        remaining &= ~(1 << u)
    order.reverse()
    return order


class AutBudgetExpired(Exception):
    pass


def automorphism_order(g: BitGraph, budget: float = 60.0) -> int:
    """Order of the automorphism group by adjacency-consistent backtracking.

    Vertices are mapped in a BFS-ish order; candidate images for the
    next vertex are kept consistent with all previously mapped vertices
    via bitset intersections.  Raises AutBudgetExpired past the budget.
    """
    n = g.v
    deadline = time.monotonic() + budget
    full = (1 << n) - 1

    # Map vertices in an order that keeps each new vertex adjacent to the
    # mapped prefix where possible (forces candidates quickly).
    order = [0]
    placed = 1
    while len(order) < n:
        nxt = None
        for u in range(n):
            if (placed >> u) & 1:
                continue
            if g.rows[u] & placed:
                nxt = u
                break
        if nxt is None:  # disconnected: start a new component
            nxt = next(u for u in range(n) if not (placed >> u) & 1)
        order.append(nxt)
        placed |= 1 << nxt
    degs = [g.degree(u) for u in range(n)]
    same_degree = [0] * n
    for u in range(n):
        for w in range(n):
            if degs[w] == degs[u]:
                same_degree[u] |= 1 << w

    count = 0

    def extend(level: int, image: list[int], used: int) -> None:
        nonlocal count
        if time.monotonic() > deadline:
            raise AutBudgetExpired
        if level == n:
            count += 1
            return
        u = order[level]
        cand = same_degree[u] & ~used
        for j in range(level):
            w = order[j]
            if (g.rows[u] >> w) & 1:
                cand &= g.rows[image[j]]
            else:
                cand &= ~g.rows[image[j]] & full
            if not cand:
                return
        c = cand
        while c:
            img = (c & -c).bit_length() - 1
            c &= c - 1
            image.append(img)
            extend(level + 1, image, used | (1 << img))
            image.pop()

    extend(0, [], 0)
    return count


def invariants(
    g: BitGraph,
    aut_budget: float = 60.0,
    circulant: bool = True,
) -> GraphInvariants:
    """Valency, diameter, girth, clique number and |Aut| of a graph.

    If the automorphism search exceeds its budget and the graph is
    circulant, the dihedral lower bound 2n is returned with
    aut_exact=False (rotations and the reflection are always
    automorphisms of a circulant graph).
    """
    if not g.is_regular():
        raise ValueError("graph is not regular; circulant invariants undefined")
    val = g.degree(0)
    diam = diameter(g, all_pairs=not circulant)
    try:
        aut = automorphism_order(g, budget=aut_budget)
        exact = True
    except AutBudgetExpired:
        if not circulant:
            raise
        aut = 2 * g.v
        exact = False
    return GraphInvariants(
        valency=val,
        diameter=diam,
        girth=girth(g),
        clique_number=clique_number(g),
        aut_order=aut,
        aut_exact=exact,
    )


def read_supports(path) -> list[CirculantSupport]:
    """Read supports from a file, one `n: i1,i2,...` line per graph."""
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                out.append(CirculantSupport.parse(line))
    return out


def write_supports(path, supports) -> None:
    with open(path, "w") as fh:
        for s in supports:
            fh.write(s.format() + "\n")
