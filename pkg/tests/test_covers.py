import itertools
import random

import pytest

from oriented_ideals.covers import (
    block_graph,
    enumerate_minimal_covers,
    enumerate_strong_covers,
    full_vertex_set_strong,
    is_minimal_cover,
    is_strong_cover,
    is_unicycle_oriented,
    is_vertex_cover,
    l_partition,
    unicycle_partition,
)
from oriented_ideals.errors import NotACover, SizeCap
from oriented_ideals.fixtures import example1, example2
from oriented_ideals.graph import build_graph, connected_components, disjoint_union, neighborhoods

from families import names, random_graph, small_family


def subsets(vs):
    for k in range(len(vs) + 1):
        for c in itertools.combinations(vs, k):
            yield frozenset(c)


def brute_covers(g):
    return [c for c in subsets(g.vertices) if all(a in c or b in c for a, b in g.edges)]


def brute_l_sets(g, c):
    # straight from the definitions, on vertex names
    l1 = {x for x in c if neighborhoods(g, x)[0] - c}
    l2 = {x for x in c if x not in l1 and neighborhoods(g, x)[1] - c}
    return l1, l2, set(c) - l1 - l2


def brute_strong(g, c):
    _, l2, l3 = brute_l_sets(g, c)
    return all(any(g.weight(y) != 1 and y in l2 | l3 for y in neighborhoods(g, x)[1]) for x in l3)


def test_is_vertex_cover():
    g = example2()
    assert is_vertex_cover(g, {"x1", "x3"})
    assert not is_vertex_cover(g, {"x1", "x4"})
    assert is_vertex_cover(g, g.vertices)


def test_l_partition_examples():
    a = l_partition(example1(), example1().vertices)
    assert a.l1 == a.l2 == frozenset() and a.l3 == frozenset(example1().vertices)
    a = l_partition(example2(), {"x1", "x3"})
    assert (a.l1, a.l2, a.l3) == ({"x1", "x3"}, set(), set())
    a = l_partition(example2(), {"x2", "x3", "x4"})
    assert (a.l1, a.l2, a.l3) == (set(), {"x2"}, {"x3", "x4"})
    with pytest.raises(NotACover):
        l_partition(example2(), {"x1", "x4"})


def test_minimality_examples():
    assert is_minimal_cover(example2(), {"x1", "x3"})
    assert not is_minimal_cover(example2(), example2().vertices)
    assert l_partition(example1(), {"x1", "x3", "x4", "x5"}).l3 == {"x4", "x5"}
    assert not is_minimal_cover(example1(), {"x1", "x3", "x4", "x5"})
    with pytest.raises(NotACover):
        is_minimal_cover(example2(), {"x2"})


def test_strong_examples():
    g = example1()
    a = l_partition(g, g.vertices)
    assert a.is_strong and set(a.strong_witness) == set(g.vertices)
    # smallest qualifying in-neighbour in canonical order
    assert a.strong_witness == {"x1": "x2", "x2": "x3", "x3": "x4", "x4": "x5", "x5": "x3"}
    assert not is_strong_cover(example2(), example2().vertices)
    for c in enumerate_minimal_covers(g):
        assert is_strong_cover(g, c)


def test_enumerate_minimal_covers():
    edge = build_graph({"x1": 1, "x2": 1}, [("x1", "x2")])
    assert enumerate_minimal_covers(edge) == [{"x1"}, {"x2"}]
    assert set(map(frozenset, enumerate_minimal_covers(example2()))) == {
        frozenset({"x1", "x3"}), frozenset({"x2", "x3"}), frozenset({"x2", "x4"})}
    vs = names(5)
    c5 = build_graph(dict.fromkeys(vs, 1), [(vs[i], vs[(i + 1) % 5]) for i in range(5)])
    expected = [c for c in brute_covers(c5) if not any(d < c for d in brute_covers(c5))]
    assert len(expected) == 5
    assert set(map(frozenset, enumerate_minimal_covers(c5))) == set(expected)


def test_enumerate_strong_covers_examples():
    supports = [a.cover for a in enumerate_strong_covers(example2())]
    assert supports == [{"x1", "x3"}, {"x2", "x3"}, {"x2", "x4"}, {"x1", "x3", "x4"}, {"x2", "x3", "x4"}]
    assert len(enumerate_strong_covers(example1())) == 9
    edge = build_graph({"x1": 1, "x2": 3}, [("x1", "x2")])
    assert [a.cover for a in enumerate_strong_covers(edge)] == [{"x1"}, {"x2"}]


def test_size_caps():
    vs = names(21)
    big = build_graph(dict.fromkeys(vs, 1), [(vs[i], vs[i + 1]) for i in range(20)])
    with pytest.raises(SizeCap):
        enumerate_strong_covers(big)
    with pytest.raises(SizeCap):
        enumerate_minimal_covers(big, max_n=20)
    assert len(enumerate_minimal_covers(big)) > 0


def test_against_definitions():
    for g in small_family(4, weights=(1, 2)):
        covers = brute_covers(g)
        minimal = {c for c in covers if not any(d < c for d in covers)}
        assert set(map(frozenset, enumerate_minimal_covers(g))) == minimal
        strong = {c for c in covers if brute_strong(g, c)}
        assert {a.cover for a in enumerate_strong_covers(g)} == strong
        for c in covers:
            a = l_partition(g, c)
            assert (a.l1, a.l2, a.l3) == tuple(map(frozenset, brute_l_sets(g, c)))
            assert a.l1 | a.l2 | a.l3 == c
            assert not (a.l1 & a.l2 or a.l1 & a.l3 or a.l2 & a.l3)
            assert is_minimal_cover(g, c) == (c in minimal)


def test_canonical_order_and_superset():
    for g in small_family(4):
        strong = [a.cover for a in enumerate_strong_covers(g)]
        keys = [(len(c), sorted(g.index(v) for v in c)) for c in strong]
        assert keys == sorted(keys)
        assert set(map(frozenset, enumerate_minimal_covers(g))) <= set(strong)


def test_components_of_covers():
    rng = random.Random(7)
    for _ in range(40):
        g = disjoint_union(random_graph(rng, 3, prefix="a"), random_graph(rng, 3, prefix="b"))
        comps = connected_components(g)
        for c in brute_covers(g):
            a = l_partition(g, c)
            parts = [l_partition(h, c & set(h.vertices)) for h in comps]
            assert a.l3 == frozenset().union(*(p.l3 for p in parts))
            assert a.is_strong == all(p.is_strong for p in parts)


def test_full_vertex_set_strong():
    assert full_vertex_set_strong(example1())
    assert not full_vertex_set_strong(example2())
    tri = build_graph({"a": 2, "b": 2, "c": 2}, [("a", "b"), ("b", "c"), ("c", "a")])
    assert full_vertex_set_strong(tri)


def test_unicycle_partition_examples():
    p = unicycle_partition(example1())
    assert len(p.blocks) == 1 and p.blocks[0].vertices == set(example1().vertices)
    assert set(p.blocks[0].cycle) == {"x3", "x4", "x5"}
    assert unicycle_partition(example2()) is None
    tri = build_graph({"a": 2, "b": 2, "c": 2}, [("a", "b"), ("b", "c"), ("c", "a")])
    assert unicycle_partition(tri).blocks[0].vertices == {"a", "b", "c"}


def test_is_unicycle_oriented():
    tri = build_graph({"a": 2, "b": 2, "c": 2}, [("a", "b"), ("b", "c"), ("c", "a")])
    assert is_unicycle_oriented(tri)
    tail = build_graph({"a": 2, "b": 2, "c": 2, "d": 1}, [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")])
    assert is_unicycle_oriented(tail)
    assert not is_unicycle_oriented(example2())
    # pendant edge pointing into the cycle cannot be reached from it
    inward = build_graph({"a": 2, "b": 2, "c": 2, "d": 1}, [("a", "b"), ("b", "c"), ("c", "a"), ("d", "c")])
    assert not is_unicycle_oriented(inward)


def test_three_way_equivalence():
    for g in small_family(4):
        full = full_vertex_set_strong(g)
        assert full == is_strong_cover(g, g.vertices)
        p = unicycle_partition(g)
        assert (p is not None) == full
        if p is not None:
            seen = set()
            for block in p.blocks:
                assert not seen & block.vertices
                seen |= block.vertices
                assert is_unicycle_oriented(block_graph(g, block))
            assert seen == set(g.vertices)
