"""Shared fixtures and a deliberately naive reference implementation.

The oracle below works element-by-element on dense lists over
GF(4) = {0, 1, w, W} with W = w^2 = w + 1, with no bit planes and no
shared code with the optimized kernels, so the two can only agree by
computing the same thing.
"""

from __future__ import annotations

import itertools

import pytest

from circodes.graphs import CirculantSupport, support_from_generators

# GF(4) multiplication table indexed by (x, y) with 0,1,w,W = 0,1,2,3
_MUL = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
]


def naive_mul(x: int, y: int) -> int:
    return _MUL[x][y]


def naive_add(x: int, y: int) -> int:
    # addition in GF(4) is XOR of the (a, b) coordinate pairs, which the
    # 0,1,2,3 labelling makes literal
    return x ^ y


def naive_square(x: int) -> int:
    return _MUL[x][x]


def naive_trace_inner(u: list[int], v: list[int]) -> int:
    """Trace inner product sum_i (u_i v_i^2 + u_i^2 v_i) as an element
    of GF(2) -- GF(4) arithmetic throughout, reduced at the end."""
    total = 0
    for x, y in zip(u, v):
        total = naive_add(total, naive_add(naive_mul(x, naive_square(y)),
                                           naive_mul(naive_square(x), y)))
    assert total in (0, 1), "trace form must land in GF(2)"
    return total


def naive_generator_rows(adj: list[list[int]]) -> list[list[int]]:
    """Rows of A + w*I as dense GF(4) element lists."""
    n = len(adj)
    rows = []
    for i in range(n):
        row = [1 if adj[i][j] else 0 for j in range(n)]
        row[i] = naive_add(row[i], 2)  # + w on the diagonal
        rows.append(row)
    return rows


def naive_all_codewords(adj: list[list[int]]):
    """Every GF(2)-combination of the generator rows, as element lists."""
    rows = naive_generator_rows(adj)
    n = len(adj)
    for bits in itertools.product((0, 1), repeat=n):
        cw = [0] * n
        for i, b in enumerate(bits):
            if b:
                cw = [naive_add(c, r) for c, r in zip(cw, rows[i])]
        yield bits, cw


def naive_weight_distribution(adj: list[list[int]]) -> dict[int, int]:
    dist: dict[int, int] = {}
    for _, cw in naive_all_codewords(adj):
        w = sum(1 for e in cw if e)
        dist[w] = dist.get(w, 0) + 1
    return dist


def support_to_dense(sup: CirculantSupport) -> list[list[int]]:
    """Adjacency matrix built straight from the circulant definition."""
    n = sup.n
    first = [0] * n
    for i in sup.positions:
        first[i - 1] = 1
    return [[first[(j - i) % n] for j in range(n)] for i in range(n)]


def all_symmetric_supports(n: int):
    """Every valid support of order n, including the empty one."""
    free = list(range(2, n // 2 + 2))
    for r in range(len(free) + 1):
        for half in itertools.combinations(free, r):
            yield support_from_generators(n, half)


@pytest.fixture
def pentagon() -> CirculantSupport:
    return CirculantSupport(5, (2, 5))


# one line per acceptance criterion, printed after the test summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
