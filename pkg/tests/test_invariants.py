import itertools

import pytest

from bananatree.generators import mycielski
from bananatree.graphs import Graph, complete_graph, cycle_graph, empty_graph, petersen_graph
from bananatree.invariants import (
    BudgetExhausted, chi, chi_rho, chromatic_number, clique_number, list_colouring,
    ramsey_bound, ramsey_split, stable_number,
)


def brute_chi(g):
    for k in range(g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in g.edges()):
                return k
    return g.n


def test_chi_examples():
    assert chi(complete_graph(5)) == 5
    assert chi(cycle_graph(5)) == 3
    assert chi(Graph(0)) == 0


def test_petersen_chi_oracle():
    g = petersen_graph()
    k2 = any(all(c[u] != c[v] for u, v in g.edges()) for c in itertools.product(range(2), repeat=10))
    k3 = any(all(c[u] != c[v] for u, v in g.edges()) for c in itertools.product(range(3), repeat=10))
    assert not k2 and k3
    assert chi(g) == 3
    k, col = chromatic_number(g)
    assert col.is_proper(g) and k == 3


def test_omega_examples():
    assert clique_number(complete_graph(5))[0] == 5
    assert clique_number(cycle_graph(5))[0] == 2
    pet = petersen_graph()
    assert not any(pet.has_edge(a, b) and pet.has_edge(b, c) and pet.has_edge(a, c)
                   for a, b, c in itertools.combinations(range(10), 3))
    assert clique_number(pet)[0] == 2
    assert stable_number(cycle_graph(5))[0] == 2


def test_chi_rho_examples():
    assert chi_rho(Graph(0), 1) == 0
    assert chi_rho(cycle_graph(5), 1) == 2
    assert chi_rho(cycle_graph(5), 2) == 3


def test_chi_matches_brute_force():
    for g in (mycielski(1), cycle_graph(7), complete_graph(3), empty_graph(3)):
        assert chi(g) == brute_chi(g)


def test_list_colouring():
    p = Graph(3, [(0, 1), (1, 2)])
    col = list_colouring(p, p.all, 2, {0: {1}})
    assert col[0] == 2 and col[1] == 1
    assert list_colouring(p, p.all, 2, {0: {1}, 1: {2}, 2: {1}}) is not None
    assert list_colouring(p, p.all, 2, {0: {1}, 1: {1}}) is None


def test_ramsey_split():
    assert sorted(ramsey_split(complete_graph(3), 3, 3).vertices) == [0, 1, 2]
    r = ramsey_split(empty_graph(4), 3, 4)
    assert r.kind == "stable" and len(r.vertices) == 4
    # C_5 has neither a triangle nor a stable triple, and 5 < R(3, 3) = 6
    assert ramsey_split(cycle_graph(5), 3, 3).kind == "too_small"
    assert ramsey_bound(3, 3) == 6


def test_budget():
    with pytest.raises(BudgetExhausted):
        chromatic_number(mycielski(3), budget=2)
