import random
from collections import Counter

import pytest

from toricirc.circuits import Binomial, enumerate_circuits
from toricirc.classify import has_square_free_term, is_balanced
from toricirc.corpus import GRAPHS
from toricirc.graphs import (
    BALANCED_MAX_TWO,
    EVEN_CYCLE,
    ODD_PAIR_JOINED_BY_PATH,
    ODD_PAIR_SHARED_VERTEX,
    SQUARE_FREE_TERM,
    Multigraph,
    classify_graph_circuit,
    enumerate_graph_circuits,
    incidence_configuration,
    odd_cycle_condition,
    parse_graph,
    simple_cycles,
    verify_edge_ring_theorem,
    walk_binomial,
    walk_is_minimal,
    walk_vertices,
)


def random_multigraph(rng, n_max=7, q_max=9):
    n = rng.randint(1, n_max)
    q = rng.randint(1, q_max)
    return Multigraph(n, tuple((rng.randint(1, n), rng.randint(1, n)) for _ in range(q)))


def test_incidence_examples():
    C = incidence_configuration(GRAPHS["c4"])
    assert C.vectors == ((1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1))
    assert incidence_configuration(Multigraph(3, ((1, 1),))).vectors == ((2, 0, 0),)
    assert incidence_configuration(GRAPHS["triangle"]).vectors == ((1, 1, 0), (0, 1, 1), (1, 0, 1))
    with pytest.raises(ValueError):
        incidence_configuration(Multigraph(2, ()))


def test_parse_graph():
    G = parse_graph("# loop and parallel\nvertices 2\n1 1\n1 2\n2 1\n")
    assert G == Multigraph(2, ((1, 1), (1, 2), (1, 2)))
    assert parse_graph(G.to_text()) == G
    for bad in ("", "vertices x\n", "vertices 2\n1 3\n", "vertices 2\n1\n", "vertex 2\n"):
        with pytest.raises(ValueError):
            parse_graph(bad)


def test_c4_circuits():
    (gc,) = enumerate_graph_circuits(GRAPHS["c4"])
    assert gc.kind == EVEN_CYCLE
    assert gc.binomial.format() == "T1*T3 - T2*T4"
    assert classify_graph_circuit(gc) == SQUARE_FREE_TERM


def test_triangle_plus_loop():
    G = GRAPHS["triangle_loop"]  # edges 12, 23, 13, loop at 1
    (gc,) = enumerate_graph_circuits(G)
    assert gc.kind == ODD_PAIR_SHARED_VERTEX
    C = incidence_configuration(G)
    # l*a2 - a1*a3 with v_l + v_a2 = 2e1 + e2 + e3 = v_a1 + v_a3
    assert gc.binomial.normalized() == Binomial((0, 1, 0, 1), (1, 0, 1, 0)).normalized()
    assert C.image(gc.binomial.plus) == C.image(gc.binomial.minus) == (2, 1, 1)
    assert walk_vertices(G, gc.walk)[0] == walk_vertices(G, gc.walk)[-1] == 1


def test_two_triangles_bridge():
    G = GRAPHS["bridge2"]
    (gc,) = enumerate_graph_circuits(G)
    assert gc.kind == ODD_PAIR_JOINED_BY_PATH
    assert classify_graph_circuit(gc) == BALANCED_MAX_TWO
    # walk a1,a2,b1,b2,c1,c2,c3,b2,b1,a3 with a = triangle, b = path, c = triangle
    a1, a2, a3, b1, b2, c1, c2, c3 = range(8)
    walk = (a1, a2, b1, b2, c1, c2, c3, b2, b1, a3)
    wb = walk_binomial(G, walk)
    assert wb.plus == (1, 0, 0, 2, 0, 1, 0, 1)
    assert wb.minus == (0, 1, 1, 0, 2, 0, 1, 0)
    assert wb.normalized() == gc.binomial
    assert max(wb.plus) == max(wb.minus) == 2 and not has_square_free_term(wb)


def test_two_triangles_joined_by_an_edge_is_square_free():
    G = GRAPHS["bridge1"]
    (gc,) = enumerate_graph_circuits(G)
    assert gc.kind == ODD_PAIR_JOINED_BY_PATH and len(gc.bridge) == 1
    assert classify_graph_circuit(gc) == SQUARE_FREE_TERM
    assert has_square_free_term(gc.binomial)
    # the bridge edge carries exponent 2 on one side only
    assert sorted((gc.binomial.plus[3], gc.binomial.minus[3])) == [0, 2]


def test_walk_binomial_examples_and_errors():
    G = GRAPHS["c4"]
    assert walk_binomial(G, (0, 1, 2, 3)) == Binomial((1, 0, 1, 0), (0, 1, 0, 1))
    twice = walk_binomial(G, (0, 1, 2, 3) * 2)
    assert twice == Binomial((2, 0, 2, 0), (0, 2, 0, 2))
    assert walk_is_minimal(G, (0, 1, 2, 3)) and not walk_is_minimal(G, (0, 1, 2, 3) * 2)
    with pytest.raises(ValueError, match="even length"):
        walk_binomial(GRAPHS["triangle"], (0, 1, 2))
    with pytest.raises(ValueError, match="closed walk"):
        walk_binomial(G, (0, 2))


def test_loops():
    G = GRAPHS["double_loop"]
    (gc,) = enumerate_graph_circuits(G)
    assert gc.binomial == Binomial((1, 0), (0, 1))
    apart = Multigraph(2, ((1, 1), (2, 2)))
    assert enumerate_graph_circuits(apart) == [] == enumerate_circuits(incidence_configuration(apart))
    joined = GRAPHS["loops_joined"]
    (gc,) = enumerate_graph_circuits(joined)
    assert gc.binomial.normalized() == Binomial((1, 1, 0), (0, 0, 2))


def test_parallel_edges_are_two_cycles():
    (gc,) = enumerate_graph_circuits(GRAPHS["digon"])
    assert gc.kind == EVEN_CYCLE and gc.binomial == Binomial((1, 0), (0, 1))
    assert len(simple_cycles(GRAPHS["digon"])) == 1


def multiset(binomials):
    return Counter(b.normalized() for b in binomials)


def check_graph(G):
    C = incidence_configuration(G)
    gcs = enumerate_graph_circuits(G)
    mats = enumerate_circuits(C)
    assert multiset(gc.binomial for gc in gcs) == multiset(c.binomial for c in mats)
    for gc in gcs:
        b = walk_binomial(G, gc.walk)
        assert b.normalized() == gc.binomial
        assert C.contains(b)
        assert len(gc.walk) % 2 == 0
        f = gc.binomial
        assert has_square_free_term(f) or (max(f.plus) == max(f.minus) == 2)
        tag = classify_graph_circuit(gc)
        assert (tag == SQUARE_FREE_TERM) == has_square_free_term(f)
        if tag == BALANCED_MAX_TWO:
            assert is_balanced(f)
        if gc.kind == ODD_PAIR_JOINED_BY_PATH:
            counts = Counter(gc.walk)
            assert all(counts[k] == 2 for k in gc.bridge)


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_bijection_and_classification_on_corpus(name):
    check_graph(GRAPHS[name])


def test_bijection_on_random_multigraphs(rng):
    for _ in range(60):
        G = random_multigraph(rng)
        check_graph(G)


def test_odd_cycle_heuristic():
    assert not odd_cycle_condition(GRAPHS["bridge2"])
    assert odd_cycle_condition(GRAPHS["bridge1"])
    assert odd_cycle_condition(GRAPHS["k4"])
    assert not odd_cycle_condition(GRAPHS["loops_path2"])


def test_edge_ring_examples():
    for name in ("k4", "c6"):
        r = verify_edge_ring_theorem(GRAPHS[name])
        assert (r.normal, r.generated_by_sqfree_circuits) == (True, True)
        assert r.consistent_with_theorem_3_2
    r = verify_edge_ring_theorem(GRAPHS["bridge2"], 4)
    assert (r.normal, r.generated_by_sqfree_circuits) == (False, False)
    assert r.witness == (1, 1, 1, 0, 1, 1, 1)
    assert r.consistent_with_theorem_3_2
    (c6,) = enumerate_circuits(incidence_configuration(GRAPHS["c6"]))
    assert c6.binomial.format() == "T1*T3*T5 - T2*T4*T6"


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_edge_ring_consistency_on_corpus(name):
    assert verify_edge_ring_theorem(GRAPHS[name]).consistent_with_theorem_3_2
