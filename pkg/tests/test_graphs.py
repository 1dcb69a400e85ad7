import random

import networkx as nx
import pytest

from zfalpha.graphs import (Graph, Graph6Error, GraphError, bits, bipartition,
                            claw_centers, classify_degrees, complete_bipartite,
                            complete_graph, connected_components, cycle_graph,
                            disjoint_union, graph_from_edges, induced_subgraph,
                            is_acyclic, is_connected, mask_of,
                            maximum_matching_bipartite, minimum_edge_cover,
                            parse_graph6, path_graph, petersen_graph,
                            prism_graph, star_graph, write_graph6)

from oracles import brute_is_acyclic, nx_graph, random_edge_graph


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, (0b1,))  # self loop
    with pytest.raises(GraphError):
        graph_from_edges(2, [(0, 2)])  # endpoint out of range
    with pytest.raises(GraphError):
        graph_from_edges(2, [(1, 1)])


def test_bits_and_masks():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert mask_of([0, 3]) == 0b1001
    assert list(bits(0)) == []


def test_basic_accessors():
    g = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.degree(1) == 2
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.full_mask == 0b1111


def test_graph6_known_encodings():
    assert write_graph6(complete_graph(4)) == b"C~"
    assert write_graph6(path_graph(3)) == b"Bg"
    assert parse_graph6("C~").edges() == complete_graph(4).edges()
    # the optional format prefix is accepted
    assert parse_graph6(">>graph6<<C~").n == 4


def test_graph6_round_trip_vs_networkx():
    rng = random.Random(42)
    for _ in range(100):
        n = rng.randint(1, 20)
        g = random_edge_graph(graph_from_edges, n, rng.random(), rng)
        encoded = write_graph6(g)
        # cross-check the encoding against an independent implementation
        expect = nx.to_graph6_bytes(nx_graph(g), header=False).strip()
        assert encoded == expect
        back = parse_graph6(encoded)
        assert back.n == g.n and back.adj == g.adj


def test_graph6_rejects_bad_input():
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error):
        parse_graph6("~???")  # long form
    with pytest.raises(Graph6Error):
        parse_graph6("C")  # truncated payload
    with pytest.raises(Graph6Error):
        parse_graph6("C~~")  # trailing bytes
    with pytest.raises(Graph6Error):
        parse_graph6("C" + chr(20))  # byte out of range


def test_components_and_connectivity():
    g = disjoint_union(path_graph(3), cycle_graph(4))
    comps = connected_components(g)
    assert len(comps) == 2
    assert comps[0] == 0b0000111
    assert not is_connected(g)
    assert is_connected(petersen_graph())
    empty = graph_from_edges(3, [])
    assert len(connected_components(empty)) == 3


def test_acyclicity_matches_dfs_oracle():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 12)
        g = random_edge_graph(graph_from_edges, n, rng.uniform(0, 0.3), rng)
        assert is_acyclic(g) == brute_is_acyclic(g)


def test_induced_subgraph():
    g = cycle_graph(5)
    sub, keep = induced_subgraph(g, 0b01011)
    assert keep == [0, 1, 3]
    assert sub.edges() == [(0, 1)]


def test_degree_profile():
    p = classify_degrees(petersen_graph())
    assert p.is_cubic and p.is_subcubic and p.max_degree == 3
    q = classify_degrees(path_graph(4))
    assert not q.is_cubic and q.is_subcubic
    assert classify_degrees(complete_graph(5)).max_degree == 4


def test_claw_centers():
    assert claw_centers(star_graph(3)) == 0b0001
    assert claw_centers(complete_graph(4)) == 0
    # every vertex of K_{3,3} is a claw center
    assert claw_centers(complete_bipartite(3, 3)) == 0b111111
    assert claw_centers(prism_graph()) == 0


def test_bipartition():
    left, right = bipartition(complete_bipartite(2, 3))
    assert left == 0b00011 and right == 0b11100
    from zfalpha.graphs import NotBipartiteError
    with pytest.raises(NotBipartiteError):
        bipartition(cycle_graph(5))


def test_matching_and_edge_cover_vs_networkx():
    rng = random.Random(13)
    for _ in range(100):
        nl, nr = rng.randint(1, 6), rng.randint(1, 6)
        edges = [(u, nl + v) for u in range(nl) for v in range(nr)
                 if rng.random() < 0.5]
        # edge cover needs no isolated vertices
        for u in range(nl):
            if not any(e[0] == u for e in edges):
                edges.append((u, nl))
        for v in range(nl, nl + nr):
            if not any(e[1] == v for e in edges):
                edges.append((0, v))
        g = graph_from_edges(nl + nr, sorted(set(edges)))
        matching = maximum_matching_bipartite(g)
        expect = len(nx.max_weight_matching(nx_graph(g), maxcardinality=True))
        assert len(matching) == expect
        cover = minimum_edge_cover(g)
        assert len(cover) == g.n - expect  # Gallai
        covered = set()
        for a, b in cover:
            assert g.has_edge(a, b)
            covered.update((a, b))
        assert covered == set(range(g.n))


def test_minimum_edge_cover_rejects_isolated():
    from zfalpha.graphs import IsolatedVertexError
    with pytest.raises(IsolatedVertexError):
        minimum_edge_cover(graph_from_edges(3, [(0, 1)]))


def test_named_graphs():
    assert petersen_graph().n == 10
    assert prism_graph().edges() == graph_from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
            (0, 3), (1, 4), (2, 5)]).edges()
    assert star_graph(5).degree(0) == 5
    assert cycle_graph(3).edges() == complete_graph(3).edges()
