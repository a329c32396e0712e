"""Command-line interface.

Subcommands: verify, zeta, shadows, bounds, fingerprint, screen, examples.
GRAPH arguments accept a corpus name (see `examples`) or a graph6 string.
Exit codes: 0 success, 1 check failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import RootFindingError, check_bounds, hashimoto_spectrum
from .edge_space import edge_space, sector_blocks
from .graphs import (
    Graph,
    Graph6Error,
    corpus,
    corpus_graph,
    encode_graph6,
    is_bipartite,
    is_connected,
    is_regular,
    parse_graph6,
    read_graph6_lines,
)
from .screen import (
    GROUPING_KEYS,
    ScreenConfig,
    builtin_generate,
    run_screen,
    verify_all,
)
from .shadows import fingerprint, shadow_set
from .zeta import factorize, trivial_roots

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


class CliInputError(Exception):
    pass


def _resolve_graph(token: str) -> Graph:
    try:
        return corpus_graph(token)
    except KeyError:
        pass
    try:
        return parse_graph6(token)
    except Graph6Error as exc:
        raise CliInputError(
            f"{token!r} is neither a corpus name nor valid graph6: {exc}"
        ) from exc


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--order", type=int, default=12, help="series order (default 12)")
    parser.add_argument("--kmax", type=int, default=2, help="highest mixed power (default 2)")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of tables")
    parser.add_argument("--jobs", type=int, default=1, help="parallel workers (default 1)")
    parser.add_argument("--tol", type=float, default=1e-6, help="bound slack (default 1e-6)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgesector",
        description=(
            "Exact non-backtracking edge-space operators, Ihara determinant "
            "factorization, and gauge-invariant mixed-sector invariants."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("examples", help="list the embedded corpus")
    _common_flags(p)

    p = sub.add_parser("zeta", help="determinant, line factor, correction, series")
    p.add_argument("graph", help="corpus name or graph6")
    _common_flags(p)

    p = sub.add_parser("shadows", help="gauge-invariant mixed-shadow charpolys")
    p.add_argument("graph", help="corpus name or graph6")
    p.add_argument("--raw", action="store_true",
                   help="also print the raw mixed block (gauge-dependent, lexicographic gauge)")
    _common_flags(p)

    p = sub.add_parser("bounds", help="numerical-range bound report for Spec(T)")
    p.add_argument("graph", help="corpus name or graph6")
    _common_flags(p)

    p = sub.add_parser("fingerprint", help="exact invariant record(s), JSONL")
    p.add_argument("graphs", nargs="+", help="corpus names or graph6 strings")
    _common_flags(p)

    p = sub.add_parser(
        "verify",
        help="run the full identity battery (series checks run at order min(--order, 8))",
    )
    p.add_argument("graphs", nargs="+", help="corpus names or graph6 strings")
    _common_flags(p)

    p = sub.add_parser("screen", help="group a census by exact invariants")
    p.add_argument("--input", default="-", help="graph6 file, or - for stdin")
    p.add_argument("--generate", type=int, metavar="N",
                   help="use the builtin connected census on N <= 7 vertices")
    p.add_argument("--key", default="A,L,S",
                   help=f"comma-separated grouping key, subset of {','.join(GROUPING_KEYS)}")
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--irregular-only", action="store_true")
    p.add_argument("--min-degree", type=int)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--skip-malformed", action="store_true",
                   help="skip undecodable lines instead of failing")
    p.add_argument("--fingerprints-out", metavar="PATH",
                   help="append every fingerprint to PATH as JSONL")
    p.add_argument("--max-pairs", type=int, default=10,
                   help="pair reports per class (default 10)")
    _common_flags(p)

    return parser


def _print_poly(label: str, poly) -> None:
    print(f"{label}: {poly.pretty()}")


def cmd_examples(args) -> int:
    if args.json:
        for entry in corpus():
            print(json.dumps({
                "name": entry.name,
                "graph6": encode_graph6(entry.graph),
                "n": entry.graph.n,
                "m": entry.graph.m,
                "degrees": list(entry.graph.degree_multiset()),
            }))
        return EXIT_OK
    for entry in corpus():
        g = entry.graph
        traits = []
        if is_connected(g):
            traits.append("connected")
        if is_bipartite(g):
            traits.append("bipartite")
        k = is_regular(g)
        if k is not None:
            traits.append(f"{k}-regular")
        print(f"{entry.name:10s} n={g.n:3d} m={g.m:3d} {encode_graph6(g):12s} {' '.join(traits)}")
    return EXIT_OK


def cmd_zeta(args) -> int:
    g = _resolve_graph(args.graph)
    fact = factorize(g, args.order)
    if args.json:
        print(json.dumps({
            "graph6": encode_graph6(g),
            "hashimoto_det": fact.hashimoto_det.coeff_strings(),
            "line_factor": fact.line_factor.coeff_strings(),
            "correction_num": fact.correction.num.coeff_strings(),
            "correction_den": fact.correction.den.coeff_strings(),
            "correction_series": fact.correction_series.coeff_strings(),
            "order": args.order,
        }))
        return EXIT_OK
    _print_poly("det(I - wT)      ", fact.hashimoto_det)
    _print_poly("det(I - (w/2)L)  ", fact.line_factor)
    print(f"correction        : {fact.correction.pretty()}")
    print(f"correction series : {fact.correction_series.pretty()}")
    if is_connected(g):
        print(f"trivial roots     : {trivial_roots(g)}")
    return EXIT_OK


def cmd_shadows(args) -> int:
    g = _resolve_graph(args.graph)
    es = edge_space(g)
    shadows = shadow_set(es, args.kmax)
    if args.json:
        record = {
            "graph6": encode_graph6(g),
            "shadows": {name: p.coeff_strings() for name, p in shadows.named()},
        }
        if args.raw:
            record["mixed_block"] = sector_blocks(es).M.to_json_dict()
            record["gauge"] = "lexicographic"
        print(json.dumps(record))
        return EXIT_OK
    for name, poly in shadows.named():
        print(f"charpoly {name:8s}: {poly.pretty('x')}")
    if args.raw:
        print("raw mixed block (gauge-dependent, lexicographic gauge):")
        for row in sector_blocks(es).M.rows:
            print("  ", row)
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = _resolve_graph(args.graph)
    try:
        report = check_bounds(g, slack=args.tol)
        spectrum = hashimoto_spectrum(g)
    except RootFindingError as exc:
        print(f"root finding failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    if args.json:
        print(json.dumps(report.to_json_dict()))
    else:
        print(f"rho(L)/2      = {report.rho_L / 2:.6f}   re_max = {report.re_max:.6f}")
        print(f"rho(S)/2      = {report.rho_S / 2:.6f}   re_min = {report.re_min:.6f}")
        print(f"sigma_max(M)/2= {report.sigma_max_M / 2:.6f}   im_max = {report.im_max:.6f}")
        print(f"sqrt(rho(Delta) rho(Q)) = {(report.rho_Delta * report.rho_Q) ** 0.5:.6f}")
        print(f"rho(T) = {report.rho_T:.6f}   d_max - 1 = {report.d_max - 1}")
        print(f"max residual = {spectrum.max_residual:.2e}")
        for name, margin in report.margins().items():
            print(f"margin {name:20s} = {margin:+.6f}")
        for violation in report.violations:
            print(f"VIOLATED: {violation}")
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_fingerprint(args) -> int:
    for token in args.graphs:
        g = _resolve_graph(token)
        print(fingerprint(g, args.order, args.kmax).to_jsonl())
    return EXIT_OK


def cmd_verify(args) -> int:
    failed = False
    for token in args.graphs:
        g = _resolve_graph(token)
        results = verify_all(g, order=min(args.order, 8))
        if args.json:
            print(json.dumps({
                "graph6": encode_graph6(g),
                "checks": [
                    {"name": r.name, "ok": r.ok, "detail": r.detail} for r in results
                ],
            }))
        else:
            print(f"== {token} ({encode_graph6(g)})")
            for r in results:
                mark = "pass" if r.ok else "FAIL"
                detail = f"  [{r.detail}]" if (r.detail and not r.ok) else ""
                print(f"  {mark}  {r.name}{detail}")
        failed = failed or any(not r.ok for r in results)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_screen(args) -> int:
    keys = tuple(k.strip() for k in args.key.split(",") if k.strip())
    cfg = ScreenConfig(
        keys=keys,
        order=args.order,
        kmax=args.kmax,
        connected_only=args.connected_only,
        irregular_only=args.irregular_only,
        min_degree=args.min_degree,
        max_degree=args.max_degree,
        jobs=args.jobs,
        max_pairs_per_class=args.max_pairs,
        skip_malformed=args.skip_malformed,
    )
    if args.generate is not None:
        lines = [(i + 1, encode_graph6(g)) for i, g in enumerate(builtin_generate(args.generate))]
    elif args.input == "-":
        lines = list(read_graph6_lines(sys.stdin))
    else:
        with open(args.input, encoding="ascii") as fh:
            lines = list(read_graph6_lines(fh))

    result = run_screen(lines, cfg)

    if args.fingerprints_out:
        from .screen import write_fingerprints_jsonl

        with open(args.fingerprints_out, "a", encoding="ascii") as fh:
            write_fingerprints_jsonl(result.fingerprints, fh)

    if args.json:
        for record in result.classes:
            print(json.dumps(record.to_json_dict()))
        print(json.dumps({"summary": result.summary}))
        return EXIT_OK
    for record in result.classes:
        print(f"class {record.digest}  members: {', '.join(record.members)}")
        for rep in record.pairs:
            differing = sorted(k for k, v in rep.agree.items() if not v)
            print(
                f"  {rep.graph6[0]} vs {rep.graph6[1]}: "
                f"differ at {differing or 'nothing'}; "
                f"det divergence order {rep.det_first_diff_order}"
            )
    print(f"summary: {json.dumps(result.summary)}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "examples": cmd_examples,
        "zeta": cmd_zeta,
        "shadows": cmd_shadows,
        "bounds": cmd_bounds,
        "fingerprint": cmd_fingerprint,
        "verify": cmd_verify,
        "screen": cmd_screen,
    }
    try:
        return handlers[args.command](args)
    except (CliInputError, Graph6Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
