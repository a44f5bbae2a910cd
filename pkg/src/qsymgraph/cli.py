"""Command-line entry point: qsymgraph VERB [GRAPH] [options].

Exit codes: 0 success or verdict found, 2 Inconclusive, 1 input error or
failed check.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import __version__
from .analysis import (
    AnalyzeOptions,
    analyze,
    enumerate_prime_type,
    enumerate_symbol_unions,
    load_certificate,
    replay,
    reproduce_paper_report,
    spec_string,
)
from .analysis.render import (
    render_enumeration,
    render_gamma,
    render_orbitals,
    render_report,
    render_reproduction,
    render_table,
)
from .errors import GraphValidationError, QSymError
from .graphs import (
    Graph,
    cartesian_product_with_edge,
    complete,
    cyclic_shift_is_automorphism,
    empty,
    from_circulant_spec,
    path,
    read_graph_file,
)
from .orbital_algebra import circulant_gamma, gamma_base_pair, gamma_matrix
from .residue_groups import circulant_type_data, is_prime
from .symmetry import DEFAULT_AUT_CAP, circulant_orbitals, orbitals

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2

_NAMED = re.compile(r"^\s*([KEP])\s*(\d+)\s*$")
_CIRC = re.compile(r"^\s*[cC]\s*\d")


def parse_graph_input(source: str) -> Graph:
    """Spec string (Cn(...), prism:Cn, Kn, En, Pn) or a path to an edge-list/adjacency file."""
    text = source.strip()
    if text.lower().startswith("prism:"):
        inner = parse_graph_input(text[len("prism:"):])
        g = cartesian_product_with_edge(inner)
        return g
    m = _NAMED.match(text)
    if m:
        kind, n = m.group(1), int(m.group(2))
        build = {"K": complete, "E": empty, "P": path}[kind]
        return build(n)
    if _CIRC.match(text) and not Path(text).exists():
        return from_circulant_spec(text)
    p = Path(text)
    if p.is_file():
        return read_graph_file(p)
    raise GraphValidationError(
        f"{source!r} is neither a graph spec (Cn(...), prism:Cn, Kn, En, Pn) nor a readable file",
        source="graph-input")


def _circulant_data(g: Graph):
    if g.n >= 2 and is_prime(g.n) and cyclic_shift_is_automorphism(g) \
            and not (g.is_complete() or g.is_empty()):
        return circulant_type_data(g.neighbors(0), g.n)
    return None


def _orbitals_and_gamma(g: Graph, aut_cap: int):
    data = _circulant_data(g)
    if data is not None:
        return circulant_orbitals(data), circulant_gamma(data), True
    orb = orbitals(g, aut_cap)
    return orb, gamma_matrix(orb, gamma_base_pair(orb, g)), False


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _figures(args, g: Graph, orb=None, gam=None) -> None:
    if not getattr(args, "figures", None):
        return
    from .plotting import write_figures

    for p in write_figures(args.figures, g.label(), orb, gam):
        print(f"wrote {p}", file=sys.stderr)


def _options(args) -> AnalyzeOptions:
    return AnalyzeOptions(aut_cap=args.aut_cap, full_verify=args.full_verify,
                          per_orbital_sample=args.sample)


# --- verbs -----------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    g = parse_graph_input(args.graph)
    rep = analyze(g, _options(args))
    if args.format == "json":
        _emit(_dump(rep.to_dict()), args.out)
    else:
        _emit(render_report(rep), args.out)
    if args.figures:
        try:
            orb, gam, _ = _orbitals_and_gamma(g, args.aut_cap)
        except QSymError as exc:
            print(f"figures skipped: {exc}", file=sys.stderr)
        else:
            _figures(args, g, orb, gam)
    return EXIT_OK if rep.conclusive else EXIT_INCONCLUSIVE


def cmd_orbitals(args) -> int:
    g = parse_graph_input(args.graph)
    orb, gam, circ = _orbitals_and_gamma(g, args.aut_cap)
    if args.format == "json":
        d = orb.to_dict()
        d["graph"] = g.label()
        d["table"] = [[list(c) for c in row] for row in orb.table()]
        _emit(_dump(d), args.out)
    else:
        _emit(render_orbitals(orb, translate=circ), args.out)
    _figures(args, g, orb, gam)
    return EXIT_OK


def cmd_gamma(args) -> int:
    g = parse_graph_input(args.graph)
    orb, gam, _ = _orbitals_and_gamma(g, args.aut_cap)
    if args.format == "json":
        d = gam.to_dict()
        d["graph"] = g.label()
        d["ones"] = [list(x) for x in gam.ones()]
        _emit(_dump(d), args.out)
    else:
        _emit(render_gamma(gam), args.out)
    _figures(args, g, orb, gam)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.prime is not None:
        sets = enumerate_symbol_unions(args.prime, args.type)
        if args.format == "json":
            _emit(_dump([{"graph": spec_string(S, args.prime), "symbol_set": list(S)}
                         for S in sets]), args.out)
        else:
            rows = [[i + 1, spec_string(S, args.prime), len(S)] for i, S in enumerate(sets)]
            _emit(render_table(["#", "graph", "|S|"], rows), args.out)
        return EXIT_OK
    datas = enumerate_prime_type(args.type, args.bound)
    if args.format == "json":
        _emit(_dump([dict(d.to_dict(), graph=spec_string(d.symbol_set, d.p)) for d in datas]),
              args.out)
    else:
        _emit(render_enumeration(datas), args.out)
    return EXIT_OK


def cmd_certify(args) -> int:
    g = parse_graph_input(args.graph)
    rep = analyze(g, _options(args))
    if rep.certificate is None:
        print(f"no certificate: Inconclusive ({rep.verdict.reason})", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    _emit(_dump(rep.certificate), args.out)
    return EXIT_OK


def cmd_replay(args) -> int:
    cert = load_certificate(args.certificate)
    res = replay(cert, full_verify=args.full_verify, aut_cap=args.aut_cap)
    if args.format == "json":
        _emit(_dump(res.to_dict()), args.out)
    else:
        status = "ok" if res.ok else "REJECTED"
        lines = [f"replay     {status}", f"kind       {res.kind}", f"verdict    {res.verdict}"]
        lines += [f"           {m}" for m in res.messages]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if res.ok else EXIT_ERROR


def cmd_verify_paper(args) -> int:
    rep = reproduce_paper_report()
    if args.format == "json":
        _emit(_dump(rep.to_dict()), args.out)
    else:
        _emit(render_reproduction(rep), args.out)
    return EXIT_OK if rep.ok else EXIT_ERROR


# --- parser ----------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    # argparse uses exit status 2, which here means Inconclusive
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["table", "json"], default="table")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--aut-cap", type=int, default=DEFAULT_AUT_CAP, metavar="N",
                        help="largest vertex count for automorphism search (default %(default)s)")
    common.add_argument("--full-verify", action="store_true",
                        help="check the flip map on all n^2 basis pairs at any size")
    common.add_argument("--sample", type=int, default=3, metavar="N",
                        help="pairs per orbital and start vertex when sampling (default 3)")
    figs = _Parser(add_help=False)
    figs.add_argument("--figures", metavar="DIR", help="write Gamma and orbital PNGs to DIR")

    parser = _Parser(prog="qsymgraph",
                     description="Quantum symmetry checks for vertex-transitive graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    graph_help = "Cn(j1,...), prism:Cn, Kn, En, Pn, or a graph file"
    p = sub.add_parser("analyze", parents=[common, figs], help="run all criteria on a graph")
    p.add_argument("graph", help=graph_help)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("orbitals", parents=[common, figs], help="print the orbital table")
    p.add_argument("graph", help=graph_help)
    p.set_defaults(func=cmd_orbitals)

    p = sub.add_parser("gamma", parents=[common, figs], help="print the Gamma matrix")
    p.add_argument("graph", help=graph_help)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("enumerate", parents=[common],
                       help="list S = E circulant p-graphs of one type")
    p.add_argument("--type", type=int, required=True, metavar="K")
    p.add_argument("--bound", type=int, metavar="N", help="largest p (default 6^phi(K))")
    p.add_argument("--prime", type=int, metavar="P",
                   help="instead list the symbol sets on Z_P with stabilizer of order K")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("certify", parents=[common], help="analyze and emit only the certificate")
    p.add_argument("graph", help=graph_help)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("replay", parents=[common], help="re-check a saved certificate")
    p.add_argument("certificate", help="certificate or analyze --format json output")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("verify-paper", parents=[common],
                       help="recompute the published worked examples")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (QSymError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


run = main

if __name__ == "__main__":
    sys.exit(main())
