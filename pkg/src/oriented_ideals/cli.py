"""Command-line front end and graph JSON serialization.

Graph JSON::

    {"vertices": [{"name": "x1", "weight": 3}, ...], "edges": [["x2", "x1"], ...]}

Exit status is 0 on success, 2 for unreadable or invalid input and 3 when an
enumeration would exceed the size cap.  Text output is deterministic so it
can be compared byte for byte.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .covers import STRONG_COVER_CAP, enumerate_strong_covers
from .decomposition import strong_cover_decomposition
from .errors import OrientedIdealError, ParseError, SizeCap, ValidationError, VerificationFailure
from .fixtures import FIXTURES, fixture
from .graph import WeightedOrientedGraph, build_graph
from .unmixed import characterize, cm_report, is_unmixed

COMMANDS = ("decompose", "ass", "unmixed", "covers", "characterize", "verify", "cm")
MAX_N_ENV = "ORIENTED_IDEAL_MAX_N"
AUTO_VERIFY_MAX = 8

EXIT_OK, EXIT_FAILURE, EXIT_INVALID, EXIT_SIZE = 0, 1, 2, 3


# -- graph JSON ----------------------------------------------------------------

def graph_from_json(data) -> WeightedOrientedGraph:
    if not isinstance(data, dict) or not isinstance(data.get("vertices"), list):
        raise ValidationError("graph JSON needs a 'vertices' list")
    vertices = []
    for entry in data["vertices"]:
        if not isinstance(entry, dict) or not isinstance(entry.get("name"), str) or "weight" not in entry:
            raise ValidationError(f"bad vertex entry {entry!r}; expected {{'name': str, 'weight': int}}")
        vertices.append((entry["name"], entry["weight"]))
    edges = []
    for edge in data.get("edges", []):
        if not isinstance(edge, list) or len(edge) != 2:
            raise ValidationError(f"bad edge entry {edge!r}; expected [tail, head]")
        edges.append(tuple(edge))
    return build_graph(vertices, edges)


def graph_to_json(g: WeightedOrientedGraph) -> dict:
    return g.to_json()


def parse_graph(text: str) -> WeightedOrientedGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return graph_from_json(data)


def load_graph(path) -> WeightedOrientedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# -- text rendering ------------------------------------------------------------

def _flag(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _vset(g, vertices) -> str:
    return "{" + ",".join(g.ordered(vertices)) + "}"


def _prime(g, vertices) -> str:
    return "(" + ",".join(g.ordered(vertices)) + ")"


def _witness(value) -> str:
    return json.dumps(value, ensure_ascii=False, separators=(",", ":"))


def _decompose(g, args, force_verify=False):
    verify = args.verify
    if verify is None:
        verify = len(g) <= AUTO_VERIFY_MAX
    report = strong_cover_decomposition(g, verify=verify or force_verify, max_n=args.max_n)
    if args.format == "json":
        return report.to_json()
    lines = [f"I(D) = {report.edge_ideal.render()}", f"components={len(report.components)}",
             report.render()]
    if report.verified is not None:
        lines.append(f"verified={_flag(report.verified)}")
    return lines


def _ass(g, args):
    primes = [c.cover for c in enumerate_strong_covers(g, args.max_n)]
    if args.format == "json":
        return {"ass": [g.ordered(p) for p in primes]}
    return [f"associated_primes={len(primes)}"] + [_prime(g, p) for p in primes]


def _unmixed(g, args):
    report = is_unmixed(g, args.max_n)
    if args.format == "json":
        return report.to_json()
    data = report.to_json()
    lines = [f"unmixed={_flag(report.unmixed)}", f"minimal_strong={_flag(report.minimal_strong)}",
             f"graph_unmixed={_flag(report.graph_unmixed)}"]
    lines += [f"criterion.{k}={_flag(v)}" for k, v in data["criteria"].items()]
    lines.append(f"agreement={_flag(report.agreement)}")
    lines += [f"certificate.{k}={_witness(v)}" for k, v in report.certificates.items()]
    return lines


def _covers(g, args):
    analyses = enumerate_strong_covers(g, args.max_n)
    if args.format == "json":
        return {"strong_covers": [a.to_json(g) for a in analyses]}
    lines = [f"strong_covers={len(analyses)}"]
    for a in analyses:
        wit = ",".join(f"{x}<-{a.strong_witness[x]}" for x in g.ordered(a.strong_witness))
        lines.append(f"{_vset(g, a.cover)} L1={_vset(g, a.l1)} L2={_vset(g, a.l2)} "
                     f"L3={_vset(g, a.l3)} minimal={_flag(a.is_minimal)} "
                     f"strong={_flag(a.is_strong)} witness={{{wit}}}")
    return lines


def _characterize(g, args):
    results = characterize(g)
    unmixed = is_unmixed(g, args.max_n).unmixed
    if args.format == "json":
        return {"unmixed": unmixed, "characterizations": {k: r.to_json() for k, r in results.items()}}
    lines = [f"unmixed={_flag(unmixed)}"]
    if not results:
        lines.append("no characterization applies")
    for name, r in results.items():
        lines.append(f"{name}: verdict={_flag(r.verdict)} clause={r.clause} witness={_witness(r.witness)}")
    return lines


def _verify(g, args):
    report = strong_cover_decomposition(g, verify=True, max_n=args.max_n)
    if args.format == "json":
        return {"verified": report.verified, "components": len(report.components)}
    return [f"verified={_flag(report.verified)}", f"components={len(report.components)}"]


def _cm(g, args):
    out = cm_report(g, args.max_n)
    if args.format == "json":
        return out
    lines = [f"cm={_flag(out['cm'])}", f"unmixed={_flag(out['unmixed'])}",
             f"minimal_strong={_flag(out['minimal_strong'])}"]
    if out["shape"] is not None:
        lines += [f"shape={out['shape']}", f"clause={out['clause']}"]
    return lines


HANDLERS = {
    "decompose": _decompose, "ass": _ass, "unmixed": _unmixed, "covers": _covers,
    "characterize": _characterize, "verify": _verify, "cm": _cm,
}


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oriented-ideals",
        description="Irreducible decomposition and unmixedness of edge ideals of weighted oriented graphs.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("input", nargs="?", help="graph JSON file")
    parser.add_argument("--fixture", choices=sorted(FIXTURES), help="use a built-in graph")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--verify", action=argparse.BooleanOptionalAction, default=None,
                        help=f"check the decomposition against the oracle (default: on for <= {AUTO_VERIFY_MAX} vertices)")
    parser.add_argument("--max-n", type=int, default=None, help="enumeration size cap")
    return parser


def _max_n(value):
    if value is not None:
        return value
    env = os.environ.get(MAX_N_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValidationError(f"{MAX_N_ENV} must be an integer, got {env!r}") from None
    return STRONG_COVER_CAP


def run(argv=None, stdout=None, stderr=None) -> int:
    """Execute one command; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        args.max_n = _max_n(args.max_n)
        if (args.fixture is None) == (args.input is None):
            raise ValidationError("give exactly one of an input file or --fixture")
        if args.fixture is not None:
            g = fixture(args.fixture)
        else:
            try:
                g = load_graph(args.input)
            except OSError as exc:
                raise ValidationError(f"cannot read {args.input}: {exc.strerror}") from None
        result = HANDLERS[args.command](g, args)
    except SizeCap as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_SIZE
    except ValidationError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    except (VerificationFailure, OrientedIdealError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_FAILURE
    if args.format == "json":
        stdout.write(json.dumps(result, ensure_ascii=False, indent=2) + "\n")
    else:
        stdout.write("\n".join(result) + "\n")
    return EXIT_OK


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
