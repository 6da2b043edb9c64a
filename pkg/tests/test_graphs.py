"""Graph families, queries, canonical codes, and small-graph enumeration."""

import random
from itertools import combinations, permutations

import pytest

from grundydom.errors import CapacityError, ParameterError
from grundydom.graphs import (
    FamilySpec,
    Graph,
    ball,
    bit_indices,
    boundary,
    canonical_code,
    caterpillar,
    complete,
    connected_components,
    cycle,
    delete_vertex,
    disjoint_union,
    enumerate_connected_graphs,
    graph_from_code,
    has_isolated_vertex,
    independence_number,
    is_caterpillar,
    is_connected,
    is_simplicial,
    make_graph,
    mask_of,
    neighborhood,
    path,
    star,
    substitute_clique,
)

# the tree with alpha = 5: a path u-v where v carries two cherries
TREE8_EDGES = [(0, 1), (1, 2), (1, 5), (2, 3), (2, 4), (5, 6), (5, 7)]


def test_bit_helpers():
    assert bit_indices(0) == []
    assert bit_indices(0b101001) == [0, 3, 5]
    assert mask_of([0, 3, 5]) == 0b101001
    assert mask_of([]) == 0


def test_family_shapes():
    p = path(4)
    assert p.n == 4 and p.m == 3 and p.name == "P4"
    assert p.edges() == [(0, 1), (1, 2), (2, 3)]
    c = cycle(5)
    assert c.n == 5 and c.m == 5 and c.name == "C5"
    assert c.has_edge(0, 4) and c.has_edge(0, 1) and not c.has_edge(0, 2)
    k = complete(4)
    assert k.m == 6 and all(k.degree(v) == 3 for v in range(4))
    s = star(4)
    assert s.n == 4 and s.degree(0) == 3 and s.m == 3 and s.name == "S4"
    assert path(1).n == 1 and path(1).m == 0
    assert complete(1).m == 0


def test_family_errors():
    with pytest.raises(ParameterError):
        path(0)
    with pytest.raises(ParameterError):
        cycle(2)
    with pytest.raises(ParameterError):
        star(0)
    with pytest.raises(ParameterError):
        Graph(3, [(0, 0)])
    with pytest.raises(ParameterError):
        Graph(3, [(0, 5)])
    with pytest.raises(ParameterError):
        Graph(-1)


def test_caterpillar_layout():
    g = caterpillar(3, [1, 0, 2])
    # spine 0-1-2 first, then legs grouped by spine vertex
    assert g.n == 6
    assert g.has_edge(0, 1) and g.has_edge(1, 2)
    assert g.has_edge(0, 3) and g.has_edge(2, 4) and g.has_edge(2, 5)
    assert g.name == "cat(3;1,0,2)"
    with pytest.raises(ParameterError):
        caterpillar(2, [1])  # one leg count per spine vertex
    with pytest.raises(ParameterError):
        caterpillar(0, [])


def test_make_graph_families():
    assert make_graph(FamilySpec("path", (4,))) == path(4)
    assert make_graph(FamilySpec("cycle", (5,))) == cycle(5)
    assert make_graph(FamilySpec("caterpillar", (2, 1, 1))) == caterpillar(2, [1, 1])
    g = make_graph(FamilySpec("custom", (3, 0, 1, 1, 2)))
    assert g == path(3)
    with pytest.raises(ParameterError):
        make_graph(FamilySpec("nope", (3,)))
    with pytest.raises(ParameterError):
        make_graph(FamilySpec("custom", (3, 0)))  # dangling endpoint


def test_neighborhoods_boundary_ball():
    p = path(4)
    assert neighborhood(p, 1, "closed") == 0b0111
    assert neighborhood(p, 1, "open") == 0b0101
    with pytest.raises(ParameterError):
        neighborhood(p, 1, "weird")
    assert boundary(p, mask_of([0])) == mask_of([1])
    assert boundary(p, mask_of([1, 2])) == mask_of([0, 3])
    assert boundary(p, p.full_mask) == 0
    c = cycle(6)
    assert ball(c, 0, 0) == mask_of([0])
    assert ball(c, 0, 1) == mask_of([0, 1, 5])
    assert ball(c, 0, 2) == mask_of([0, 1, 2, 4, 5])
    assert ball(c, 0, 99) == c.full_mask


def test_connectivity():
    assert is_connected(path(5)) and is_connected(complete(1))
    two = disjoint_union(path(2), path(3))
    assert not is_connected(two)
    comps = connected_components(two)
    assert sorted(c.bit_count() for c in comps) == [2, 3]
    assert has_isolated_vertex(disjoint_union(path(2), complete(1)))
    assert not has_isolated_vertex(path(2))


def test_independence_number():
    assert independence_number(path(5)) == 3
    assert independence_number(cycle(5)) == 2
    assert independence_number(cycle(6)) == 3
    assert independence_number(complete(6)) == 1
    assert independence_number(star(4)) == 3
    assert independence_number(Graph(3)) == 3
    tree8 = Graph(8, TREE8_EDGES)
    assert independence_number(tree8) == 5


def test_independence_number_brute():
    rng = random.Random(11)
    for trial in range(40):
        n = rng.randrange(1, 8)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.4]
        g = Graph(n, edges)
        best = 0
        for size in range(n, 0, -1):
            for sub in combinations(range(n), size):
                if all(not g.has_edge(u, v) for u, v in combinations(sub, 2)):
                    best = size
                    break
            if best:
                break
        assert independence_number(g) == best


def test_simplicial():
    assert is_simplicial(path(4), 0) and not is_simplicial(path(4), 1)
    assert all(is_simplicial(complete(4), v) for v in range(4))
    assert not any(is_simplicial(cycle(5), v) for v in range(5))
    assert is_simplicial(Graph(1), 0)  # empty neighborhood is a clique


def test_caterpillar_recognition():
    assert is_caterpillar(path(6))
    assert is_caterpillar(star(5))
    assert is_caterpillar(caterpillar(3, [2, 1, 2]))
    assert is_caterpillar(complete(1)) and is_caterpillar(path(2))
    assert not is_caterpillar(cycle(4))
    assert not is_caterpillar(disjoint_union(path(2), path(2)))
    # the spider with three legs of length 2 is the smallest non-caterpillar tree
    spider = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert not is_caterpillar(spider)


def test_substitute_clique():
    g = substitute_clique(path(3), 1, 2)
    # vertex 1 doubled into a true-twin pair: 4 vertices, twins adjacent
    assert g.n == 4
    twins = [1, 3]
    assert g.has_edge(*twins)
    for t in twins:
        assert g.has_edge(0, t) and g.has_edge(2, t)
    assert substitute_clique(path(3), 1, 1) == path(3)
    with pytest.raises(ParameterError):
        substitute_clique(path(3), 5, 2)
    with pytest.raises(ParameterError):
        substitute_clique(path(3), 0, 0)


def test_delete_vertex():
    g = delete_vertex(cycle(4), 0)
    assert g == path(3)
    g = delete_vertex(path(3), 1)
    assert g.n == 2 and g.m == 0
    with pytest.raises(ParameterError):
        delete_vertex(path(2), 4)


def test_disjoint_union():
    g = disjoint_union(path(2), cycle(3))
    assert g.n == 5 and g.m == 4
    assert g.has_edge(0, 1) and g.has_edge(2, 3) and g.has_edge(2, 4)
    assert not g.has_edge(1, 2)


def test_canonical_code_invariance():
    rng = random.Random(5)
    for trial in range(60):
        n = rng.randrange(1, 8)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.4]
        g = Graph(n, edges)
        code = canonical_code(g)
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = Graph(n, [(perm[u], perm[v]) for u, v in edges])
        assert canonical_code(relabeled) == code
        # decode gives back an isomorphic graph: same code again
        assert canonical_code(graph_from_code(n, code)) == code


def test_canonical_code_separates_nonisomorphic():
    # all labeled graphs on 4 vertices, grouped by brute-force min-perm code
    def brute_code(g):
        best = None
        for perm in permutations(range(g.n)):
            bits = 0
            pos = 0
            for i in range(g.n):
                for j in range(i + 1, g.n):
                    if g.has_edge(perm.index(i), perm.index(j)):
                        bits |= 1 << pos
                    pos += 1
            best = bits if best is None else min(best, bits)
        return best

    n = 4
    pairs = list(combinations(range(n), 2))
    by_brute = {}
    by_mine = {}
    for bits in range(1 << len(pairs)):
        g = Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])
        by_brute.setdefault(brute_code(g), set()).add(bits)
        by_mine.setdefault(canonical_code(g), set()).add(bits)
    # identical partitions of the labeled graphs into isomorphism classes
    assert sorted(map(sorted, by_brute.values())) == sorted(map(sorted, by_mine.values()))


def test_enumeration_counts():
    expected = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}
    for n, count in expected.items():
        graphs = list(enumerate_connected_graphs(n))
        assert len(graphs) == count
        assert all(g.n == n and is_connected(g) for g in graphs)
        codes = {canonical_code(g) for g in graphs}
        assert len(codes) == count  # pairwise non-isomorphic
    names = [g.name for g in enumerate_connected_graphs(3)]
    assert names == ["g3_0", "g3_1"]


def test_enumeration_guard():
    with pytest.raises(ParameterError):
        list(enumerate_connected_graphs(9))
    with pytest.raises(ParameterError):
        list(enumerate_connected_graphs(0))


def test_enumeration_matches_independent_count_n5():
    # independent check: connected labeled graphs on 5 vertices, bucketed by
    # brute-force canonical form, must give exactly the 21 classes
    n = 5
    pairs = list(combinations(range(n), 2))
    classes = set()
    for bits in range(1 << len(pairs)):
        g = Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])
        if is_connected(g):
            classes.add(canonical_code(g))
    assert len(classes) == 21
    enum_codes = {canonical_code(g) for g in enumerate_connected_graphs(5)}
    assert enum_codes == classes
