"""``codetops`` command line.

Exit codes: 0 ok, 1 parse/input error, 2 degenerate input, 3 size cap exceeded,
64 usage error.  Failed verification also exits 1.
"""
from __future__ import annotations

import argparse
import sys
import time

from . import autos, io
from .errors import CodeTopsError, TooLarge
from .field import field_of_order
from .fixtures import FIXTURES
from .grassmann import build_graph
from .matspace import row_space
from .tops import analyze

EXIT_OK, EXIT_PARSE, EXIT_DEGENERATE, EXIT_TOO_LARGE, EXIT_USAGE = 0, 1, 2, 3, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _analyze(args, out):
    M = io.read_matrix(args.matrix)
    t0 = time.perf_counter()
    a = analyze(M, args.k)
    elapsed = time.perf_counter() - t0
    if args.pretty:
        out.write(io.pretty_analysis(a))
    else:
        out.write(io.analysis_json(a, elapsed if args.timing else None))
    return EXIT_DEGENERATE if a.degenerate else EXIT_OK


def _group(args, out, full_list: bool):
    M = io.read_matrix(args.matrix)
    U = row_space(M)
    if full_list:
        stab = autos.stabilizer(U, args.semilinear)
        order = len(stab)
    else:
        order = autos.stabilizer_order(U, args.semilinear)
    group = autos.group_order(U.ambient_dim, U.spec, args.semilinear)
    orbit = group // order
    assert orbit * order == group, "orbit-stabilizer identity failed"
    doc = {"order": order, "orbit_size": orbit, "group_order": group, "semilinear": args.semilinear}
    if full_list:
        doc["elements"] = [
            {"delta": list(f.delta), "scales": [U.spec.format_code(s) for s in f.scales], "frob": f.frob}
            for f in sorted(stab, key=lambda f: (f.frob, f.delta, f.scales))
        ]
    out.write(io.dumps(doc))
    return EXIT_OK


def _verify(args, out):
    from .verify import run_suite
    results = run_suite(args.suite, args.seed)
    for r in results:
        out.write(r.line() + "\n")
    passed = sum(r.ok for r in results)
    out.write(f"{passed}/{len(results)} passed\n")
    return EXIT_OK if passed == len(results) else 1


def _graph(args, out):
    G = build_graph(args.n, args.k, field_of_order(args.q), restrict_nondegenerate=args.nondegenerate)
    out.write(io.graph_dot(G) if args.format == "dot" else io.graph_json(G))
    return EXIT_OK


def _fixture(args, out):
    builder = FIXTURES[args.name]
    kw = {}
    if args.q is not None:
        if args.name != "example4":
            raise CodeTopsError("--q only applies to example4")
        kw["q"] = args.q
    text = io.format_matrix(builder(**kw).M)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="codetops", description="Tops of the graph of non-degenerate linear codes.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="classify the top of a code")
    a.add_argument("--matrix", required=True)
    a.add_argument("--k", type=int)
    fmt = a.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--pretty", action="store_true")
    a.add_argument("--timing", action="store_true", help="include elapsed seconds in JSON")

    for name in ("orbit", "stabilizer"):
        g = sub.add_parser(name, help=f"{name} of a code under monomial maps")
        g.add_argument("--matrix", required=True)
        g.add_argument("--semilinear", action="store_true")

    v = sub.add_parser("verify", help="run acceptance checks")
    v.add_argument("--suite", required=True, choices=["paper-examples", "properties", "all"])
    v.add_argument("--seed", type=int, default=42)

    gr = sub.add_parser("graph", help="export the Grassmann graph")
    gr.add_argument("--n", type=int, required=True)
    gr.add_argument("--k", type=int, required=True)
    gr.add_argument("--q", type=int, required=True)
    gr.add_argument("--nondegenerate", action="store_true")
    gr.add_argument("--format", choices=["dot", "json"], default="json")

    fx = sub.add_parser("fixture", help="print a built-in example matrix")
    fx.add_argument("name", choices=sorted(FIXTURES))
    fx.add_argument("--q", type=int)
    fx.add_argument("-o", "--output")
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    handlers = {
        "analyze": _analyze,
        "orbit": lambda a, o: _group(a, o, False),
        "stabilizer": lambda a, o: _group(a, o, True),
        "verify": _verify,
        "graph": _graph,
        "fixture": _fixture,
    }
    try:
        return handlers[args.cmd](args, out)
    except TooLarge as exc:
        sys.stderr.write(f"codetops: too large: {exc}\n")
        return EXIT_TOO_LARGE
    except (CodeTopsError, OSError) as exc:
        sys.stderr.write(f"codetops: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
