"""Built-in graphs: the two worked decompositions, the eleven-vertex graph and
the five-cycle templates."""

from .graph import build_graph
from .unmixed import template_graph


def example1():
    # I(D) = (x1^3 x2, x2^4 x3, x3^5 x4, x3 x5^2, x4^2 x5)
    return build_graph(
        {"x1": 3, "x2": 4, "x3": 5, "x4": 2, "x5": 2},
        [("x2", "x1"), ("x3", "x2"), ("x4", "x3"), ("x3", "x5"), ("x5", "x4")],
    )


def example2():
    # I(D) = (x1 x2^2, x2 x3^5, x3 x4^7)
    return build_graph(
        {"x1": 1, "x2": 2, "x3": 5, "x4": 7},
        [("x1", "x2"), ("x2", "x3"), ("x3", "x4")],
    )


def eleven_vertex():
    """x1, x2, x3 have weight 2 and are sinks; every other weight is 1."""
    weights = {f"x{i}": 2 if i <= 3 else 1 for i in range(1, 12)}
    edges = [
        (4, 1), (8, 1), (5, 1), (9, 1),
        (10, 2), (5, 2), (11, 2), (8, 2), (6, 2),
        (7, 3), (10, 3), (6, 3), (9, 3),
        (4, 8), (7, 4), (4, 11),
        (10, 5), (11, 5), (9, 5),
        (9, 6), (6, 8), (6, 11),
        (10, 7), (11, 7),
        (11, 9),
    ]
    return build_graph(weights, [(f"x{a}", f"x{b}") for a, b in edges])


FIXTURES = {
    "example1": example1,
    "example2": example2,
    "eleven-vertex": eleven_vertex,
    "d1": lambda: template_graph("D1"),
    "d2": lambda: template_graph("D2"),
    "d3": lambda: template_graph("D3"),
    "d4": lambda: template_graph("D4"),
}


def fixture(name):
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}") from None
