"""Command-line front end: ``partpoly <subcommand> ...``.

Exit codes: 0 success, 1 malformed input, 2 resource cap exceeded,
3 usage error (unknown flag or subcommand), 4 ``verify`` found a mismatch.
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from . import closed_forms, invariants, lattice, recurrences, scanner, splitting
from .errors import PartpolyError, ResourceCapError
from .families import complete, cycle, path, random_tree
from .formats import iter_graph6, parse_edgelist, parse_graph6
from .graph import Graph, format_label
from .poly import BiPoly, UniPoly

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3, 4

log = logging.getLogger("partpoly")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"usage error: {message}\n")


class InputError(PartpolyError):
    pass


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_graphs(args) -> list[Graph]:
    data = _read_input(args.input)
    if args.format == "graph6":
        graphs = []
        for lineno, _, item in iter_graph6(data.splitlines()):
            if not isinstance(item, Graph):
                raise InputError(f"line {lineno}: {item}")
            graphs.append(item)
        if not graphs:
            raise InputError("no graph6 lines in input")
        return graphs
    return [parse_edgelist(data)]


def _cap(args) -> int | None:
    if args.max_n is None:
        return None
    if args.max_n > lattice.BRUTE_CAP and not args.allow_large:
        raise InputError(
            f"--max-n {args.max_n} is above the default cap {lattice.BRUTE_CAP}; add --allow-large to confirm"
        )
    return args.max_n


def _emit(args, text_lines: list[str], payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(text_lines))


def _parse_separator(g: Graph, spec: str):
    if spec == "auto":
        return "auto"
    names = [t.strip() for t in spec.split(",") if t.strip()]
    out = []
    for name in names:
        if name in g:
            out.append(g.vertex(name))
        elif name.lstrip("-").isdigit() and int(name) in g:
            out.append(g.vertex(int(name)))
        else:
            raise InputError(f"separator vertex {name!r} is not in the graph")
    return out


# -- subcommands ----------------------------------------------------------

def cmd_compute(args) -> int:
    cap = _cap(args)
    lines, payload = [], []
    for g in _load_graphs(args):
        entry = {"n": g.n, "m": g.m}
        if args.algorithm == "split":
            q = splitting.q_by_splitting(g, _parse_separator(g, args.separator), False, args.seed, cap)
        else:
            q = recurrences.q_auto(g, args.algorithm, cap)
        entry["q"] = q.to_json()
        line = str(q)
        if args.bivariate:
            if args.algorithm == "split":
                qxy = splitting.q_by_splitting(g, _parse_separator(g, args.separator), True, args.seed, cap)
            else:
                qxy = recurrences.q_auto_xy(g, "brute" if args.algorithm == "ie" else args.algorithm, cap)
            entry["qxy"] = qxy.to_json()
            line = str(qxy)
        if args.chromatic:
            p = lattice.chromatic_deletion_contraction(g)
            entry["p"] = p.to_json()
            line += f"\t{p}"
        lines.append(line)
        payload.append(entry)
    _emit(args, lines, payload if len(payload) > 1 else payload[0])
    return EXIT_OK


def cmd_family(args) -> int:
    name = args.name
    if name in ("complete_bipartite",):
        params = (args.s, args.t)
    elif name == "complete_minus_matching":
        params = (args.n, args.m)
    else:
        params = (args.n,)
    if any(p is None for p in params):
        raise InputError(f"family {name} needs sizes: {'--s --t' if name == 'complete_bipartite' else '--n' + (' --m' if name == 'complete_minus_matching' else '')}")
    spec = closed_forms.FamilySpec(name, params)
    if args.bivariate:
        p = closed_forms.q_closed_xy(spec)
    else:
        p = closed_forms.q_closed(spec)
    _emit(args, [str(p)], {"family": name, "params": list(params), "bivariate": args.bivariate,
                           "qxy" if args.bivariate else "q": p.to_json()})
    return EXIT_OK


def cmd_split(args) -> int:
    cap = _cap(args)
    g = _load_graphs(args)[0]
    sep = _parse_separator(g, args.separator)
    if sep == "auto":
        sep = splitting.find_separator(g, seed=args.seed)
    p = splitting.q_by_splitting(g, sep, args.bivariate, args.seed, cap)
    sp = splitting.split_graph(g, sep)
    x = [format_label(v) for v in sp.interface]
    lines = [f"separator: {{{','.join(x)}}}", f"sides: {sp.g1.n} + {sp.g2.n} vertices", str(p)]
    payload = {"separator": x, "sides": [sp.g1.n, sp.g2.n],
               "qxy" if args.bivariate else "q": p.to_json()}
    if args.show_table:
        t = splitting.combine_t(splitting.t_table(sp.g1, sp.interface, args.bivariate, cap),
                                splitting.t_table(sp.g2, sp.interface, args.bivariate, cap))
        rows = [[str(b), str(c), q.to_json()] for (b, c), q in t.entries.items()]
        payload["table"] = rows
        lines[2:2] = [f"T({b}; {c}) = {q}" for (b, c), q in t.entries.items()]
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_invariants(args) -> int:
    if args.poly:
        try:
            q = UniPoly.parse(args.poly)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        graphs = [None]
    else:
        graphs = _load_graphs(args)
        q = None
    lines, payload = [], []
    for g in graphs:
        qq = q if g is None else recurrences.q_auto(g)
        report = invariants.invariants_from_q(qq)
        d = report.to_dict()
        d["q"] = str(qq)
        if report.components == 1:
            d["dowling_wilson"] = invariants.dowling_wilson_check(qq)
        if g is not None:
            qxy = recurrences.q_auto_xy(g)
            d["min_kcut"] = {str(k): invariants.min_kcut_from_qxy(qxy, k, g.m) for k in range(1, g.n + 1)}
        payload.append(d)
        lines.extend(f"{k}: {v}" for k, v in d.items())
    _emit(args, lines, payload if len(payload) > 1 else payload[0])
    return EXIT_OK


def cmd_scan(args) -> int:
    data = _read_input(args.input)
    report = scanner.scan(data.splitlines(), args.mode, args.jobs, args.strategy)
    if not args.records:
        report.pop("records")
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(scanner.summarize(report))
    return EXIT_OK


def _verify_graphs(max_n: int, samples: int, seed: int):
    rng = random.Random(seed)
    for n in range(0, max_n + 1):
        pairs = list(combinations(range(n), 2))
        if n <= 4:
            for bits in range(1 << len(pairs)):
                yield Graph(range(n), [e for i, e in enumerate(pairs) if bits >> i & 1])
        else:
            yield path(n)
            yield cycle(n)
            yield complete(n)
            yield random_tree(n, rng.randrange(2**32))
            for _ in range(samples):
                p = rng.random()
                yield Graph(range(n), [e for e in pairs if rng.random() < p])


def _verify_one(g: Graph) -> list[str]:
    problems = []
    q = lattice.q_brute(g)
    others = {
        "decomp": recurrences.q_vertex_decomposition(g),
        "ie": recurrences.q_neighborhood_ie(g),
        "auto": recurrences.q_auto(g),
    }
    if g.n:
        others["split"] = splitting.q_by_splitting(g, "auto")
    for name, value in others.items():
        if value != q:
            problems.append(f"{name}: {value} != brute {q}")
    qxy = lattice.q_brute_xy(g)
    if qxy.set_y_to_one() != q:
        problems.append("bivariate brute does not specialise to univariate")
    xy_others = {"decomp_xy": recurrences.q_vertex_decomposition_xy(g), "auto_xy": recurrences.q_auto_xy(g)}
    if g.n:
        xy_others["split_xy"] = splitting.q_by_splitting(g, "auto", bivariate=True)
    for name, value in xy_others.items():
        if value != qxy:
            problems.append(f"{name}: {value} != brute {qxy}")
    if lattice.chromatic_via_rota(g) != lattice.chromatic_deletion_contraction(g):
        problems.append("Rota chromatic polynomial differs from deletion-contraction")
    return [f"{g!r}: {p}" for p in problems]


def cmd_verify(args) -> int:
    if args.max_n > 9 and not args.allow_large:
        raise ResourceCapError("verify beyond n=9 needs --allow-large")
    graphs = list(_verify_graphs(args.max_n, args.samples, args.seed))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, graphs, chunksize=8))
    else:
        results = [_verify_one(g) for g in graphs]
    problems = [p for r in results for p in r]
    if problems:
        print("\n".join(problems))
        print(f"FAIL: {len(problems)} mismatches over {len(graphs)} graphs")
        return EXIT_MISMATCH
    print(f"OK: {len(graphs)} graphs checked (n <= {args.max_n})")
    return EXIT_OK


# -- parser ---------------------------------------------------------------

def _add_input(p: argparse.ArgumentParser, default_format: str = "edgelist") -> None:
    p.add_argument("--input", default="-", help="path, or - for stdin (default)")
    p.add_argument("--format", choices=("graph6", "edgelist"), default=default_format)


def _add_caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-n", type=int, default=None, help="brute-force vertex cap")
    p.add_argument("--allow-large", action="store_true", help="permit caps above the defaults")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="partpoly", description="Partition and minimal cut polynomials of graphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="Q(G,x) or Q(G,x,y) of an input graph")
    _add_input(p)
    _add_caps(p)
    p.add_argument("--algorithm", choices=recurrences.STRATEGIES + ("split",), default="auto")
    p.add_argument("--separator", default="auto", help="for --algorithm split: a,c or auto")
    p.add_argument("--bivariate", action="store_true")
    p.add_argument("--chromatic", action="store_true", help="also print the chromatic polynomial")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("family", help="closed forms for special families")
    p.add_argument("--name", required=True, choices=closed_forms.FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--bivariate", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("split", help="Q via the splitting formula")
    _add_input(p)
    _add_caps(p)
    p.add_argument("--separator", default="auto")
    p.add_argument("--bivariate", action="store_true")
    p.add_argument("--show-table", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("invariants", help="invariants recovered from Q")
    _add_input(p)
    p.add_argument("--poly", help='a partition polynomial such as "x^4+4x^3+6x^2+x" instead of a graph')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("scan", help="equivalence scan over a graph6 corpus")
    p.add_argument("--input", default="-")
    p.add_argument("--mode", choices=scanner.MODES, default="all-classes")
    p.add_argument("--strategy", choices=recurrences.STRATEGIES, default="auto")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--records", action="store_true", help="include per-graph records in JSON")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="cross-algorithm self-test")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--samples", type=int, default=30, help="random graphs per n for n >= 5")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (PartpolyError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
