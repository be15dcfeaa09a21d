"""Edge ideals of weighted oriented graphs and their irreducible decompositions.

The edge ideal has one generator ``x * y^w(y)`` per edge ``(x, y)``.  Its
irredundant irreducible decomposition is the intersection of the ideals
``I_C`` over the strong vertex covers ``C``, where ``I_C`` uses exponent 1
on ``L1(C)`` and ``w(x)`` on ``L2(C) | L3(C)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .covers import (
    STRONG_COVER_CAP,
    CoverAnalysis,
    enumerate_strong_covers,
    l_partition,
)
from .errors import VerificationFailure
from .graph import WeightedOrientedGraph
from .monomials import (
    IrreducibleIdeal,
    MonomialIdeal,
    ideal_contains,
    ideal_equals,
    intersect_all,
    irreducible_decomposition_oracle,
)


@dataclass(frozen=True)
class DecompositionReport:
    graph: WeightedOrientedGraph
    edge_ideal: MonomialIdeal
    components: tuple  # of (CoverAnalysis, IrreducibleIdeal)
    associated_primes: tuple  # of frozenset
    verified: bool | None = None  # None when verification did not run

    @property
    def ideals(self) -> list:
        return [q for _, q in self.components]

    def render(self) -> str:
        """Components joined by an intersection sign, e.g. ``(x1,x3) ∩ (x2^2,x3)``."""
        return " ∩ ".join(q.render() for q in self.ideals)

    def to_json(self) -> dict:
        g = self.graph
        out = {
            "edge_ideal": self.edge_ideal.render(),
            "components": [
                {
                    "cover": g.ordered(c.cover),
                    "ideal": q.render_cas(),
                    "L1": g.ordered(c.l1),
                    "L2": g.ordered(c.l2),
                    "L3": g.ordered(c.l3),
                }
                for c, q in self.components
            ],
            "ass": [g.ordered(p) for p in self.associated_primes],
        }
        if self.verified is not None:
            out["verified"] = self.verified
        return out


def edge_ideal(g: WeightedOrientedGraph) -> MonomialIdeal:
    gens = []
    for tail, head in g.sorted_edges():
        m = [0] * len(g)
        m[g.index(tail)] = 1
        m[g.index(head)] = g.weight(head)
        gens.append(tuple(m))
    return MonomialIdeal(g.vertices, gens)


def _ideal_of_analysis(g: WeightedOrientedGraph, analysis: CoverAnalysis) -> IrreducibleIdeal:
    exps = [0] * len(g)
    for x in analysis.l1:
        exps[g.index(x)] = 1
    for x in analysis.l2 | analysis.l3:
        exps[g.index(x)] = g.weight(x)
    return IrreducibleIdeal(g.vertices, tuple(exps))


def irreducible_ideal_of_cover(g: WeightedOrientedGraph, cover) -> IrreducibleIdeal:
    """The irreducible ideal ``I_C`` attached to a vertex cover."""
    q = _ideal_of_analysis(g, l_partition(g, cover))
    if not ideal_contains(q.to_ideal(), edge_ideal(g)):
        raise VerificationFailure("edge ideal is not contained in I_C", q)
    return q


def strong_cover_decomposition(g: WeightedOrientedGraph, verify: bool = False,
                               max_n: int = STRONG_COVER_CAP) -> DecompositionReport:
    """Decompose the edge ideal through the strong vertex covers.

    With ``verify`` the result is checked twice: the intersection of the
    components must give back the edge ideal, and the component set must
    equal the one produced by the splitting oracle.
    """
    ideal = edge_ideal(g)
    comps = []
    seen = {}
    for analysis in enumerate_strong_covers(g, max_n):
        q = _ideal_of_analysis(g, analysis)
        if q.support in seen:
            raise VerificationFailure("two strong covers produced the same radical", q)
        seen[q.support] = analysis
        comps.append((analysis, q))
    primes = tuple(c.cover for c, _ in comps)
    verified = None
    if verify:
        verify_decomposition(ideal, [q for _, q in comps])
        verified = True
    return DecompositionReport(g, ideal, tuple(comps), primes, verified)


def verify_decomposition(ideal: MonomialIdeal, components: list) -> None:
    """Raise VerificationFailure unless ``components`` is the decomposition of ``ideal``."""
    if ideal.is_zero():
        # (0) is prime, so it is its own decomposition
        if [q.support for q in components] != [frozenset()]:
            raise VerificationFailure("the zero ideal is its own only component")
        return
    back = intersect_all(q.to_ideal() for q in components)
    if not ideal_equals(back, ideal):
        raise VerificationFailure(f"intersection {back.render()} differs from {ideal.render()}")
    expected = set(irreducible_decomposition_oracle(ideal))
    got = set(components)
    for q in got - expected:
        raise VerificationFailure(f"component {q.render()} not produced by the oracle", q)
    for q in expected - got:
        raise VerificationFailure(f"oracle component {q.render()} missing", q)


def associated_primes(g: WeightedOrientedGraph, max_n: int = STRONG_COVER_CAP) -> list:
    """Supports of the strong covers, i.e. the associated primes of the edge ideal."""
    return [c.cover for c in enumerate_strong_covers(g, max_n)]
