"""Unmixedness of edge ideals and the combinatorial characterizations built on it.

The generic test compares three equivalent conditions:

1. every strong vertex cover has the same size;
2. the underlying graph is unmixed and no strong cover has an ``L3`` vertex;
3. the underlying graph is unmixed and every strong cover is a minimal cover.

Shape-specific results (whiskers, bipartite graphs, cycles) and the
Cohen-Macaulay criteria for paths and complete graphs are exposed as
separate checks so they can be compared against the generic one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .covers import (
    STRONG_COVER_CAP,
    enumerate_minimal_covers,
    full_vertex_set_strong,
    l_masks,
    strong_cover_masks,
    unicycle_partition,
)
from .errors import (
    CriteriaDisagreement,
    NotACycle,
    NotAPath,
    NotAWhisker,
    NotBipartite,
    NotComplete,
    ValidationError,
)
from .graph import (
    WeightedOrientedGraph,
    _bits,
    bipartition,
    build_graph,
    c_minor,
    classify_shape,
    connected_components,
    cycle_order,
    is_complete,
    path_order,
    whisker_structure,
)

CAS_REQUIRED = "requires external CAS"


@dataclass(frozen=True)
class UnmixedReport:
    criterion_strong_cardinality: bool
    criterion_graph_unmixed_and_L3: bool
    criterion_minimal_strong_and_G: bool
    graph_unmixed: bool
    minimal_strong: bool
    certificates: dict = field(default_factory=dict, compare=False)

    @property
    def unmixed(self) -> bool:
        return self.criterion_strong_cardinality

    @property
    def agreement(self) -> bool:
        return (self.criterion_strong_cardinality == self.criterion_graph_unmixed_and_L3
                == self.criterion_minimal_strong_and_G)

    def to_json(self) -> dict:
        return {
            "unmixed": self.unmixed,
            "minimal_strong": self.minimal_strong,
            "graph_unmixed": self.graph_unmixed,
            "criteria": {
                "strong_cardinality": self.criterion_strong_cardinality,
                "graph_unmixed_and_L3_empty": self.criterion_graph_unmixed_and_L3,
                "graph_unmixed_and_minimal_strong": self.criterion_minimal_strong_and_G,
            },
            "agreement": self.agreement,
            "certificates": self.certificates,
        }


@dataclass(frozen=True)
class CharacterizationResult:
    applicable: bool
    verdict: bool
    clause: str | None  # clause number of the theorem that decided the verdict
    witness: object = None

    def to_json(self) -> dict:
        return {"applicable": self.applicable, "verdict": self.verdict,
                "clause": self.clause, "witness": self.witness}


def is_unmixed(g: WeightedOrientedGraph, max_n: int = STRONG_COVER_CAP) -> UnmixedReport:
    strong = strong_cover_masks(g, max_n)
    sizes = {m.bit_count() for m in strong}
    c1 = len(sizes) <= 1

    minimal = {g.to_mask(c) for c in enumerate_minimal_covers(g, max(max_n, len(g)))}
    graph_unmixed = len({m.bit_count() for m in minimal}) <= 1
    with_l3 = [m for m in strong if l_masks(g, m)[2]]
    c2 = graph_unmixed and not with_l3
    minimal_strong = all(m in minimal for m in strong)
    c3 = graph_unmixed and minimal_strong

    certs = {}
    if not c1:
        small = min(strong, key=lambda m: m.bit_count())
        big = max(strong, key=lambda m: m.bit_count())
        certs["different_sizes"] = [g.ordered(g.from_mask(small)), g.ordered(g.from_mask(big))]
    if with_l3:
        m = with_l3[0]
        certs["strong_cover_with_L3"] = {
            "cover": g.ordered(g.from_mask(m)),
            "L3": g.ordered(g.from_mask(l_masks(g, m)[2])),
        }
    if not graph_unmixed:
        small = min(minimal, key=lambda m: (m.bit_count(), m))
        big = max(minimal, key=lambda m: (m.bit_count(), -m))
        certs["graph_minimal_covers"] = [g.ordered(g.from_mask(small)), g.ordered(g.from_mask(big))]

    report = UnmixedReport(c1, c2, c3, graph_unmixed, minimal_strong, certs)
    if not report.agreement:
        raise CriteriaDisagreement(f"unmixedness criteria disagree on {g!r}: {c1}, {c2}, {c3}")
    return report


def has_minimal_strong_property(g: WeightedOrientedGraph, max_n: int = STRONG_COVER_CAP) -> bool:
    """Every strong cover is minimal, i.e. no strong cover has an L3 vertex."""
    return not any(l_masks(g, m)[2] for m in strong_cover_masks(g, max_n))


def mixedness_fast_certificates(g: WeightedOrientedGraph):
    """Certificate of mixedness found without enumerating covers, or None.

    None is inconclusive.
    """
    if not len(g):
        return None
    if g.vplus_mask == g.full_mask:
        return {"reason": "all vertices have weight != 1"}
    if full_vertex_set_strong(g):
        witness = {}
        for i, v in enumerate(g.vertices):
            preds = g.in_mask[i] & g.vplus_mask
            witness[v] = g.vertices[(preds & -preds).bit_length() - 1]
        return {"reason": "the full vertex set is a strong cover", "witness": witness}
    return None


def check_c_minor_closure(g: WeightedOrientedGraph, stable, max_n: int = STRONG_COVER_CAP) -> bool:
    """For unmixed ``g``, report whether the c-minor by ``stable`` is unmixed too."""
    if not is_unmixed(g, max_n).unmixed:
        raise ValidationError("c-minor closure applies to unmixed graphs only")
    return is_unmixed(c_minor(g, stable), max_n).unmixed


def check_minimal_strong_closure(g: WeightedOrientedGraph, vertex, max_n: int = STRONG_COVER_CAP) -> bool:
    """For ``g`` with the minimal-strong property, check it survives deleting ``N[vertex]``."""
    if not has_minimal_strong_property(g, max_n):
        raise ValidationError("graph lacks the minimal-strong property")
    return has_minimal_strong_property(c_minor(g, [vertex]), max_n)


def unmixed_by_components(g: WeightedOrientedGraph, max_n: int = STRONG_COVER_CAP) -> bool:
    return all(is_unmixed(c, max_n).unmixed for c in connected_components(g))


# -- whiskers ----------------------------------------------------------------

def characterize_whisker(g: WeightedOrientedGraph) -> CharacterizationResult:
    """Unmixed iff every base -> pendant edge leaves a base vertex of weight 1."""
    pendants = whisker_structure(g)
    if pendants is None:
        raise NotAWhisker("underlying graph is not a whisker")
    bad = [[x, y] for x, y in pendants.items() if (x, y) in g.edges and g.weight(x) != 1]
    return CharacterizationResult(True, not bad, "2", bad or pendants)


# -- bipartite graphs ------------------------------------------------------------

def _perfect_matchings(g, left, right):
    """Yield perfect matchings between ``left`` and ``right`` as ``{l: r}`` dicts."""
    if len(left) != len(right):
        return
    right_set = set(right)

    def rec(k, used, match):
        if k == len(left):
            yield dict(match)
            return
        x = left[k]
        for i in _bits(g.nbr_mask[g.index(x)]):
            y = g.vertices[i]
            if y in right_set and y not in used:
                match[x] = y
                used.add(y)
                yield from rec(k + 1, used, match)
                used.discard(y)
                del match[x]

    yield from rec(0, set(), {})


def _transitive(g, match) -> bool:
    # {a, match[b]} and {b, match[c]} edges force {a, match[c]}
    adj = {a: {b for b in match if g.nbr_mask[g.index(a)] >> g.index(match[b]) & 1} for a in match}
    return all(adj[b] <= adj[a] for a in match for b in adj[a])


def _clause_two_violations(g, partner) -> list:
    bad = []
    for x in g.vertices:
        if g.weight(x) == 1:
            continue
        i = g.index(x)
        out = g.out_mask[i]
        for j in _bits(out):
            z = partner[g.vertices[j]]
            k = g.index(z)
            if g.nbr_mask[k] & ~out or g.in_mask[k] & g.vplus_mask:
                bad.append([x, z])
    return bad


def characterize_bipartite(g: WeightedOrientedGraph) -> CharacterizationResult:
    """Perfect-matching characterization of unmixed bipartite graphs.

    Clause 1: a perfect matching ``{a_i, b_i}`` between the two stable parts
    such that edges ``{a_j, b_i}`` and ``{a_i, b_k}`` force ``{a_j, b_k}``.
    Clause 2: for ``x`` of weight != 1 and every out-neighbour ``y`` of ``x``,
    the partner ``z`` of ``y`` has ``N(z) <= N+(x)`` and no in-neighbour of
    weight != 1.  Isolated vertices lie in no cover and are ignored.
    """
    parts = bipartition(g)
    if parts is None:
        raise NotBipartite("underlying graph has an odd cycle")
    left = [v for v in parts[0] if g.degree(v)]
    right = [v for v in parts[1] if g.degree(v)]
    found_matching = False
    clause_one = None
    for match in _perfect_matchings(g, left, right):
        found_matching = True
        if not _transitive(g, match):
            continue
        partner = dict(match)
        partner.update({b: a for a, b in match.items()})
        bad = _clause_two_violations(g, partner)
        if not bad:
            return CharacterizationResult(True, True, None, [[a, b] for a, b in match.items()])
        if clause_one is None:
            clause_one = bad
    if clause_one is not None:
        return CharacterizationResult(True, False, "2", clause_one)
    reason = "no transitive perfect matching" if found_matching else "no perfect matching"
    return CharacterizationResult(True, False, "1", reason)


# -- cycles ------------------------------------------------------------------

# Five-cycle templates x1-x2-x3-x4-x5-x1.  Weight flags mark w != 1; an edge
# with orientation None was drawn without an arrow and matches either way.
CYCLE_TEMPLATES = {
    "D1": {
        "heavy": (False, False, True, False, True),
        "edges": [(2, 1, True), (5, 1, True), (4, 5, True), (4, 3, True), (3, 2, True)],
    },
    "D2": {
        "heavy": (True, True, False, False, False),
        "edges": [(1, 5, True), (5, 4, None), (2, 1, True), (4, 3, None), (3, 2, True)],
    },
    "D3": {
        "heavy": (False, False, True, True, True),
        "edges": [(2, 1, None), (1, 5, True), (5, 4, True), (4, 3, True), (3, 2, None)],
    },
    "D4": {
        "heavy": (False, True, True, False, True),
        "edges": [(1, 2, True), (2, 3, True), (4, 3, True), (4, 5, True), (5, 1, None)],
    },
}


def match_cycle_template(g: WeightedOrientedGraph, name: str):
    """Return a ``{template vertex: graph vertex}`` isomorphism, or None."""
    order = cycle_order(g)
    if order is None or len(order) != 5:
        return None
    tpl = CYCLE_TEMPLATES[name]
    for start in range(5):
        for step in (1, -1):
            f = {k + 1: order[(start + step * k) % 5] for k in range(5)}
            if any((g.weight(f[k + 1]) != 1) != heavy for k, heavy in enumerate(tpl["heavy"])):
                continue
            if all(oriented is None or (f[a], f[b]) in g.edges for a, b, oriented in tpl["edges"]):
                return {f"x{k}": f[k] for k in range(1, 6)}
    return None


def characterize_cycle(g: WeightedOrientedGraph) -> CharacterizationResult:
    """Closed-form unmixedness test for graphs whose underlying graph is a cycle."""
    order = cycle_order(g)
    if order is None:
        raise NotACycle("underlying graph is not a cycle")
    n = len(order)
    light = [v for v in order if g.weight(v) == 1]
    if n == 3 and light:
        return CharacterizationResult(True, True, "1", light[0])
    heavy_nonsinks = [v for v in order if g.weight(v) != 1 and not g.is_sink(v)]
    if n in (4, 5, 7) and not heavy_nonsinks:
        return CharacterizationResult(True, True, "2", None)
    if n == 5:
        light_edges = [[t, h] for t, h in g.sorted_edges() if g.weight(t) == 1 and g.weight(h) == 1]
        excluded = {k: match_cycle_template(g, k) for k in ("D1", "D2", "D3")}
        excluded = {k: f for k, f in excluded.items() if f is not None}
        if light_edges and not excluded:
            return CharacterizationResult(True, True, "3", light_edges[0])
        iso = match_cycle_template(g, "D4")
        if iso is not None:
            return CharacterizationResult(True, True, "4", iso)
        if excluded:
            return CharacterizationResult(True, False, "3", excluded)
    if n not in (3, 4, 5, 7):
        return CharacterizationResult(True, False, None, f"C{n} is not unmixed")
    if n == 3:
        return CharacterizationResult(True, False, "1", "all weights differ from 1")
    return CharacterizationResult(True, False, "2", heavy_nonsinks)


# -- Cohen-Macaulay criteria -------------------------------------------------------

def cm_path(g: WeightedOrientedGraph) -> CharacterizationResult:
    """Paths: Cohen-Macaulay iff unmixed iff k = 2, or k = 4 with end conditions.

    For ``x1 - x2 - x3 - x4``: an edge ``x2 -> x1`` needs ``w(x2) = 1`` and an
    edge ``x3 -> x4`` needs ``w(x3) = 1``.
    """
    order = path_order(g)
    if order is None:
        raise NotAPath("underlying graph is not a path")
    k = len(order)
    if k == 2:
        return CharacterizationResult(True, True, "3", list(order))
    if k != 4:
        return CharacterizationResult(True, False, "3", f"path on {k} vertices")
    x1, x2, x3, x4 = order
    bad = [[t, h] for t, h in ((x2, x1), (x3, x4)) if (t, h) in g.edges and g.weight(t) != 1]
    return CharacterizationResult(True, not bad, "3", bad or list(order))


def cm_complete(g: WeightedOrientedGraph) -> CharacterizationResult:
    """Complete graphs: Cohen-Macaulay iff unmixed iff V has no unicycle partition."""
    if not is_complete(g):
        raise NotComplete("underlying graph is not complete")
    partition = unicycle_partition(g)
    strong = full_vertex_set_strong(g)
    if strong != (partition is not None):
        raise CriteriaDisagreement("unicycle partition disagrees with the strong full vertex set")
    if partition is None:
        return CharacterizationResult(True, True, "3", None)
    blocks = [{"vertices": g.ordered(b.vertices), "cycle": list(b.cycle)} for b in partition.blocks]
    return CharacterizationResult(True, False, "3", blocks)


def cm_report(g: WeightedOrientedGraph, max_n: int = STRONG_COVER_CAP) -> dict:
    """Cohen-Macaulay verdict where a combinatorial criterion exists.

    Other shapes report :data:`CAS_REQUIRED` together with the unmixed flag
    and the minimal-strong flag, the two quantities the open problem relates.
    """
    report = is_unmixed(g, max_n)
    out = {"unmixed": report.unmixed, "minimal_strong": report.minimal_strong}
    shapes = classify_shape(g)
    if "path" in shapes:
        res = cm_path(g)
        out.update(shape="path", cm=res.verdict, clause=res.clause, witness=res.witness)
    elif "complete" in shapes:
        res = cm_complete(g)
        out.update(shape="complete", cm=res.verdict, clause=res.clause, witness=res.witness)
    else:
        out.update(shape=None, cm=CAS_REQUIRED)
    return out


def characterize(g: WeightedOrientedGraph) -> dict:
    """Run every shape characterization that applies."""
    shapes = classify_shape(g)
    results = {}
    if "whisker" in shapes:
        results["whisker"] = characterize_whisker(g)
    if "bipartite" in shapes:
        results["bipartite"] = characterize_bipartite(g)
    if "cycle" in shapes:
        results["cycle"] = characterize_cycle(g)
    if "path" in shapes:
        results["path_cm"] = cm_path(g)
    if "complete" in shapes:
        results["complete_cm"] = cm_complete(g)
    return results


def template_graph(name: str, heavy_weight: int = 2, free_reversed=False):
    """Concrete graph for a cycle template; unoriented edges follow the drawn order.

    With ``free_reversed`` those edges are reversed instead.
    """
    tpl = CYCLE_TEMPLATES[name]
    weights = {f"x{k + 1}": heavy_weight if h else 1 for k, h in enumerate(tpl["heavy"])}
    edges = []
    for a, b, oriented in tpl["edges"]:
        if oriented is None and free_reversed:
            a, b = b, a
        edges.append((f"x{a}", f"x{b}"))
    return build_graph(weights, edges)


__all__ = [
    "CAS_REQUIRED", "CYCLE_TEMPLATES", "CharacterizationResult", "UnmixedReport",
    "characterize", "characterize_bipartite", "characterize_cycle", "characterize_whisker",
    "check_c_minor_closure", "check_minimal_strong_closure", "cm_complete", "cm_path",
    "cm_report", "has_minimal_strong_property", "is_unmixed", "match_cycle_template",
    "mixedness_fast_certificates", "template_graph", "unmixed_by_components",
]
