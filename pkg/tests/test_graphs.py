"""Circulant supports, adjacency construction, and graph invariants."""

import math

import pytest

from circodes.graphs import (
    BitGraph,
    CirculantSupport,
    adjacency,
    automorphism_order,
    clique_number,
    diameter,
    girth,
    invariants,
    multiplier_image,
    read_supports,
    support_from_generators,
    write_supports,
)
from circodes.code import from_support
from circodes.weights import full_weight_distribution
from conftest import all_symmetric_supports, support_to_dense


def test_support_validation():
    with pytest.raises(ValueError):
        CirculantSupport(5, (1, 5))  # loops forbidden
    with pytest.raises(ValueError):
        CirculantSupport(5, (2,))  # 2 present but 5 = n+2-2 missing
    with pytest.raises(ValueError):
        CirculantSupport(7, (2, 4, 7))  # would close to odd size... wrong pairs
    CirculantSupport(5, ())  # empty graph is fine


def test_support_from_generators_closes_symmetry():
    s = support_from_generators(10, [2, 3])
    assert s.positions == (2, 3, 9, 10)
    # the self-paired position for even n closes to itself
    s2 = support_from_generators(10, [6])
    assert s2.positions == (6,)


def test_adjacency_matches_dense_definition():
    for n in range(2, 9):
        for sup in all_symmetric_supports(n):
            g = adjacency(sup)
            dense = support_to_dense(sup)
            for i in range(n):
                for j in range(n):
                    assert ((g.rows[i] >> j) & 1) == dense[i][j]
                assert ((g.rows[i] >> i) & 1) == 0


def test_bitgraph_rejects_asymmetry_and_loops():
    with pytest.raises(ValueError):
        BitGraph(2, (0b10, 0b00))
    with pytest.raises(ValueError):
        BitGraph(1, (0b1,))


def test_pentagon_invariants():
    inv = invariants(adjacency(CirculantSupport(5, (2, 5))))
    assert (inv.valency, inv.diameter, inv.girth) == (2, 2, 5)
    assert inv.clique_number == 2
    assert inv.aut_order == 10 and inv.aut_exact


def test_complete_graph_invariants():
    k4 = adjacency(CirculantSupport(4, (2, 3, 4)))
    inv = invariants(k4, circulant=False)
    assert (inv.valency, inv.diameter, inv.girth) == (3, 1, 3)
    assert inv.clique_number == 4
    assert inv.aut_order == math.factorial(4)


def test_disconnected_graph_has_infinite_diameter():
    g = adjacency(CirculantSupport(6, (4,)))  # three disjoint edges
    assert diameter(g) == math.inf
    assert girth(g) == math.inf  # forest


def test_girth_square_vs_triangle():
    assert girth(adjacency(CirculantSupport(4, (2, 4)))) == 4
    assert girth(adjacency(CirculantSupport(6, (2, 3, 5, 6)))) == 3


def test_clique_number_against_bruteforce():
    import itertools

    def brute(g):
        best = 1
        for r in range(2, g.v + 1):
            for vs in itertools.combinations(range(g.v), r):
                if all((g.rows[u] >> v) & 1 for u, v in itertools.combinations(vs, 2)):
                    best = r
        return best

    for n in range(3, 9):
        for sup in all_symmetric_supports(n):
            if sup.size == 0:
                continue
            g = adjacency(sup)
            assert clique_number(g) == brute(g), sup.format()


def test_circulant_automorphisms_contain_dihedral():
    for sup in (CirculantSupport(7, (2, 7)), CirculantSupport(8, (2, 5, 8))):
        order = automorphism_order(adjacency(sup), budget=30.0)
        assert order % (2 * sup.n) == 0


def test_multiplier_image_preserves_weight_distribution():
    # multiplying offsets by a unit permutes coordinates, so the codes
    # are equivalent and the full distributions agree
    n = 13
    sup = support_from_generators(n, [2, 4, 7])
    base = full_weight_distribution(from_support(sup)).distribution
    for a in (2, 5, 6):
        image = multiplier_image(sup, a)
        assert full_weight_distribution(from_support(image)).distribution == base


def test_multiplier_image_requires_unit():
    with pytest.raises(ValueError):
        multiplier_image(CirculantSupport(10, (2, 10)), 5)


def test_support_file_roundtrip(tmp_path):
    sups = [CirculantSupport(5, (2, 5)), CirculantSupport(6, (2, 4, 6))]
    path = tmp_path / "sups.txt"
    write_supports(path, sups)
    assert read_supports(path) == sups


def test_table_row_adjacency_is_regular():
    sup = CirculantSupport(34, (2, 3, 6, 8, 9, 27, 28, 30, 33, 34))
    g = adjacency(sup)
    assert all(row.bit_count() == 10 for row in g.rows)
