import pytest

from oriented_ideals.errors import (
    AntiparallelPair,
    DuplicateVertex,
    LoopEdge,
    NonpositiveWeight,
    NotStableSet,
    UnknownVertex,
)
from oriented_ideals.fixtures import example1, example2
from oriented_ideals.graph import (
    build_graph,
    c_minor,
    classify_shape,
    connected_components,
    disjoint_union,
    is_connected,
    neighborhoods,
    underlying_graph,
)

from families import small_family


def test_source_weight_normalized():
    g = build_graph({"x1": 5, "x2": 2}, [("x1", "x2")])
    assert g.weights == {"x1": 1, "x2": 2}
    assert g.normalized == ("x1",)


def test_already_normalized_graph_unchanged():
    g = build_graph({"x1": 1, "x2": 2}, [("x1", "x2")])
    assert g.weights == {"x1": 1, "x2": 2}
    assert g.normalized == ()


def test_example2_accepted_as_is():
    g = example2()
    assert g.weights == {"x1": 1, "x2": 2, "x3": 5, "x4": 7}
    assert g.sorted_edges() == [("x1", "x2"), ("x2", "x3"), ("x3", "x4")]


@pytest.mark.parametrize(
    "vertices, edges, exc",
    [
        ([("a", 1), ("a", 2)], [], DuplicateVertex),
        ({"a": 1}, [("a", "a")], LoopEdge),
        ({"a": 1, "b": 1}, [("a", "b"), ("b", "a")], AntiparallelPair),
        ({"a": 0}, [], NonpositiveWeight),
        ({"a": 2.5}, [], NonpositiveWeight),
        ({"a": 1}, [("a", "b")], UnknownVertex),
    ],
)
def test_validation(vertices, edges, exc):
    with pytest.raises(exc):
        build_graph(vertices, edges)


def test_neighborhoods():
    assert neighborhoods(example2(), "x2") == ({"x3"}, {"x1"}, {"x1", "x3"})
    n_plus, n_minus, _ = neighborhoods(example1(), "x3")
    assert n_plus == {"x2", "x5"} and n_minus == {"x4"}
    lone = build_graph({"a": 1}, [])
    assert neighborhoods(lone, "a") == (set(), set(), set())
    with pytest.raises(UnknownVertex):
        neighborhoods(lone, "b")


def test_underlying_graph():
    path = underlying_graph(example2())
    assert path.edges == {frozenset(e) for e in [("x1", "x2"), ("x2", "x3"), ("x3", "x4")]}
    assert underlying_graph(build_graph({"a": 1, "b": 1}, [])).edges == frozenset()
    # a triangle on x3, x4, x5 with the tail x3 - x2 - x1
    tri = underlying_graph(example1())
    assert tri.edges == {frozenset(e) for e in [("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x3", "x5"), ("x4", "x5")]}


def test_c_minor():
    g = example2()
    assert c_minor(g, set()) == g
    minor = c_minor(g, {"x1"})
    assert minor.vertices == ("x3", "x4") and minor.sorted_edges() == [("x3", "x4")]
    # x3 became a source, so its weight drops to 1
    assert minor.weight("x3") == 1
    assert c_minor(example1(), {"x1"}).vertices == ("x3", "x4", "x5")
    with pytest.raises(NotStableSet):
        c_minor(g, {"x1", "x2"})


def test_c_minor_iterates():
    for g in small_family(4):
        vs = g.vertices
        for i, a in enumerate(vs):
            for b in vs[i + 1:]:
                if b in neighborhoods(g, a)[2]:
                    continue
                step = c_minor(c_minor(g, {a}), {b} & set(c_minor(g, {a}).vertices))
                assert c_minor(g, {a, b}) == step
                simple = underlying_graph(c_minor(g, {a, b}))
                ug = underlying_graph(g)
                closed = {a, b} | ug.neighbors(a) | ug.neighbors(b)
                assert set(simple.vertices) == set(vs) - closed
                assert simple.edges == {e for e in ug.edges if not e & closed}


def test_connected_components():
    g = example1()
    assert connected_components(g) == [g]
    other = example2().relabel({f"x{i}": f"y{i}" for i in range(1, 5)})
    union = disjoint_union(g, other)
    comps = connected_components(union)
    assert [c.vertices for c in comps] == [g.vertices, other.vertices]
    edgeless = build_graph({"a": 1, "b": 1, "c": 1}, [])
    assert [c.vertices for c in connected_components(edgeless)] == [("a",), ("b",), ("c",)]
    assert not is_connected(edgeless)


def test_classify_shape():
    shape = classify_shape(example2())
    assert shape["path"] == ("x1", "x2", "x3", "x4")
    assert shape["bipartite"] == (("x1", "x3"), ("x2", "x4"))
    assert "cycle" not in shape
    assert classify_shape(example1()) == {"general": None}
    for edges in ([("a", "b"), ("b", "c"), ("c", "a")], [("a", "b"), ("b", "c"), ("a", "c")]):
        shape = classify_shape(build_graph({"a": 1, "b": 2, "c": 2}, edges))
        assert "complete" in shape and "cycle" in shape and "bipartite" not in shape


def test_neighborhood_invariants():
    for g in small_family(4):
        for x in g.vertices:
            n_plus, n_minus, n = neighborhoods(g, x)
            assert x not in n and n == n_plus | n_minus
            for y in n_plus:
                assert (x, y) in g.edges and x in neighborhoods(g, y)[1]
            if not n_minus:
                assert g.weight(x) == 1


def test_json_roundtrip_and_hash():
    g = example1()
    again = build_graph([(v["name"], v["weight"]) for v in g.to_json()["vertices"]], g.to_json()["edges"])
    assert again == g and hash(again) == hash(g)
