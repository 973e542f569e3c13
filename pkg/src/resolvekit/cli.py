"""Command-line interface.

Subcommands: dist, witness, code, encode, decode, census, mastermind,
lb.  Output is deterministic: space-separated integer records, one per
line, with a leading label token where context is needed.

Exit codes: 0 success, 1 usage, 2 invalid input (parse errors,
disconnected graphs, bad data), 3 inconsistent distance data,
4 enumeration cap exceeded.  The environment variable RESOLVEKIT_CAP
overrides the default enumeration caps.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from typing import Optional, Sequence

from . import analysis, codec, graphs, witness
from .errors import (Graph6ParseError, InconsistentDistanceVector,
                     InfiniteDimensionError, NotConnectedError,
                     ResolveKitError, ResourceCapExceeded)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_INCONSISTENT = 3
EXIT_CAP = 4


class _Parser(argparse.ArgumentParser):
    """argparse's default usage-error exit status is 2; this CLI
    reserves 2 for invalid input data, so usage errors exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _env_cap(default: int) -> int:
    raw = os.environ.get("RESOLVEKIT_CAP")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"RESOLVEKIT_CAP must be an integer, got {raw!r}") from None


def _add_graph_args(sub, with_matrix: bool = False):
    sub.add_argument("--family", choices=["complete", "path", "cycle",
                                          "complete-bipartite", "k-minus-clique"])
    sub.add_argument("--q", type=int, help="vertex count / first part size")
    sub.add_argument("--q2", type=int, help="second part size for complete-bipartite")
    sub.add_argument("--clique", type=int, help="removed clique size for k-minus-clique")
    sub.add_argument("--graph6", help="one graph6 record")
    sub.add_argument("--file", help="graph6 file (first record unless noted)")
    if with_matrix:
        sub.add_argument("--matrix", help="integer matrix, rows separated by ';'")


def _load_graph(args) -> graphs.Graph:
    sources = [s for s in (args.family, args.graph6, args.file) if s]
    if len(sources) != 1:
        raise ValueError("specify exactly one graph source (--family/--graph6/--file)")
    if args.graph6:
        return graphs.parse_graph6(args.graph6)
    if args.file:
        with open(args.file) as fh:
            for g in graphs.iter_graph6(fh):
                return g
        raise ValueError(f"no graph6 records in {args.file}")
    if args.q is None:
        raise ValueError("--family needs --q")
    if args.family == "complete-bipartite":
        if args.q2 is None:
            raise ValueError("complete-bipartite needs --q2")
        return graphs.complete_bipartite(args.q, args.q2)
    if args.family == "k-minus-clique":
        if args.clique is None:
            raise ValueError("k-minus-clique needs --clique")
        return graphs.complete_minus_clique(args.q, args.clique)
    return graphs.generator(args.family, args.q)


def _load_matrix(args):
    if getattr(args, "matrix", None):
        rows = [[int(t) for t in part.split()] for part in args.matrix.split(";")]
        return tuple(tuple(r) for r in rows)
    return graphs.distance_matrix(_load_graph(args)).entries


def _parse_ints(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.replace(",", " ").split())


def _default_witness(args, M) -> witness.WitnessInfo:
    """Witness selection for code building: an explicit --w wins, then
    the closed-form family witness, then column-space extraction, then
    a growing-box search."""
    if args.w:
        return witness.validate(M, _parse_ints(args.w))
    if args.family in ("complete", "path"):
        return witness.validate(M, witness.named_witness(args.family, args.q))
    if args.family == "cycle":
        fam = "odd_cycle" if args.q % 2 else "even_cycle"
        return witness.validate(M, witness.named_witness(fam, args.q))
    s3 = witness.statement3(M)
    if s3 is not None:
        return s3[1]
    cap = _env_cap(witness.DEFAULT_ENUM_CAP)
    b = 1
    while True:
        b = min(b, args.box)
        found = witness.search_witness(M, b, cap)
        if found is not None:
            return found
        if b == args.box:
            raise ValueError(f"no witness found within box {args.box}; pass --w")
        b *= 2


def cmd_dist(args) -> int:
    M = graphs.distance_matrix(_load_graph(args))
    out = [" ".join(str(x) for x in row) for row in M]
    out.append(f"diam {M.diam}")
    print("\n".join(out))
    return EXIT_OK


def cmd_witness(args) -> int:
    M = _load_matrix(args)
    cap = _env_cap(witness.DEFAULT_ENUM_CAP)
    lines = []
    if args.w:
        info = witness.validate(M, _parse_ints(args.w))
        lines.append("w " + " ".join(str(x) for x in info.w))
        lines.append("Mw " + " ".join(str(x) for x in info.mw))
        lines.append(f"g {info.g} ratio {info.ratio} r_w {info.r_w}")
        lines.append(f"ap {'true' if witness.ap_check(info) else 'false'}")
    s3 = witness.statement3(M)
    if s3 is None:
        lines.append("statement3 none")
    else:
        pi, info = s3
        lines.append("statement3 some pi " + " ".join(str(v) for v in pi))
        lines.append("extracted w " + " ".join(str(x) for x in info.w))
    rb = witness.r_bound(M, bound=args.box, cap=cap)
    if rb.exact is not None:
        lines.append(f"r exact {rb.exact}")
    else:
        upper = str(rb.upper) if rb.upper is not None else "?"
        lines.append(f"r lower {rb.lower} upper {upper}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_code(args) -> int:
    M = _load_matrix(args)
    info = _default_witness(args, M)
    cp = codec.plan(M, info, args.r, args.n)
    code = codec.build(cp)
    dump = codec.dump_code(code)
    summary = [f"rows {cp.m + 1}"]
    if args.verify:
        summary.append("identities: ok" if codec.verify_identities(code)
                       else "identities: FAILED")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dump)
        print("\n".join(summary))
    else:
        sys.stdout.write(dump)
        print("\n".join(summary), file=sys.stderr)
    return EXIT_OK


def _load_code(args) -> codec.Code:
    M = _load_matrix(args)
    with open(args.code) as fh:
        return codec.parse_code(fh.read(), M)


def cmd_encode(args) -> int:
    code = _load_code(args)
    D = codec.encode(code, _parse_ints(args.word))
    print(" ".join(str(x) for x in D))
    return EXIT_OK


def cmd_decode(args) -> int:
    code = _load_code(args)
    X = codec.decode(code, _parse_ints(args.d))
    print(" ".join(str(x) for x in X))
    return EXIT_OK


def cmd_census(args) -> int:
    cap = _env_cap(witness.DEFAULT_ENUM_CAP)
    if (args.enumerate is None) == (args.file is None):
        raise ValueError("specify exactly one of --enumerate or --file")
    if args.enumerate is not None:
        report = analysis.census_labeled(args.enumerate, box=args.box, cap=cap)
    else:
        with open(args.file) as fh:
            report = analysis.corpus_census(graphs.iter_graph6(fh),
                                            box=args.box, cap=cap)
    sys.stdout.write(analysis.format_census_report(report))
    if report.skipped_disconnected:
        print(f"warning: skipped {report.skipped_disconnected} disconnected inputs",
              file=sys.stderr)
    return EXIT_OK


def cmd_mastermind(args) -> int:
    if args.q < 2:
        raise ValueError("mastermind needs q >= 2")
    M = graphs.distance_matrix(graphs.complete(args.q)).entries
    info = witness.validate(M, witness.named_witness("complete", args.q))
    code = codec.build(codec.plan(M, info, None, args.n))
    if args.secret:
        secret = _parse_ints(args.secret)
        if len(secret) != args.n or any(not 0 <= s < args.q for s in secret):
            raise ValueError(f"secret must be {args.n} symbols in 0..{args.q - 1}")
    else:
        rng = random.Random(args.seed)
        secret = tuple(rng.randrange(args.q) for _ in range(args.n))
    queries = codec.row_queries(code)
    answers = [sum(1 for a, b in zip(secret, query) if a == b) for query in queries]
    D = [args.n - a for a in answers]
    recovered = codec.decode(code, D)
    lines = ["query " + " ".join(str(s) for s in query) for query in queries]
    lines.append("answers " + " ".join(str(a) for a in answers))
    lines.append("secret " + " ".join(str(s) for s in secret))
    lines.append("recovered " + " ".join(str(s) for s in recovered))
    print("\n".join(lines))
    return EXIT_OK


def cmd_lb(args) -> int:
    print(analysis.lower_bound(args.q, args.diam, args.n))
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="resolvekit",
                     description="Resolving sets for Cartesian graph powers")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("dist", help="print a distance matrix and diameter")
    _add_graph_args(p)
    p.set_defaults(func=cmd_dist)

    p = subs.add_parser("witness", help="witness analysis and r bounds")
    _add_graph_args(p, with_matrix=True)
    p.add_argument("--w", help="witness vector to validate")
    p.add_argument("--box", type=int, default=8, help="search box bound")
    p.set_defaults(func=cmd_witness)

    p = subs.add_parser("code", help="build a code and dump it")
    _add_graph_args(p, with_matrix=True)
    p.add_argument("--n", type=int, required=True, help="number of factors")
    p.add_argument("--w", help="witness override")
    p.add_argument("--r", type=int, default=None, help="radix override")
    p.add_argument("--box", type=int, default=8)
    p.add_argument("--out", help="write the dump here instead of stdout")
    p.add_argument("--verify", action="store_true",
                   help="check the signed-count identities")
    p.set_defaults(func=cmd_code)

    p = subs.add_parser("encode", help="encode a word to a distance vector")
    _add_graph_args(p, with_matrix=True)
    p.add_argument("--code", required=True, help="code dump file")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_encode)

    p = subs.add_parser("decode", help="decode a distance vector")
    _add_graph_args(p, with_matrix=True)
    p.add_argument("--code", required=True)
    p.add_argument("--d", required=True, help="distance vector")
    p.set_defaults(func=cmd_decode)

    p = subs.add_parser("census", help="scan a corpus for exceptional graphs")
    p.add_argument("--enumerate", type=int, metavar="Q",
                   help="all labeled connected graphs on Q vertices (2..7)")
    p.add_argument("--file", help="graph6 file")
    p.add_argument("--box", type=int, default=6,
                   help="witness search box for flagged graphs")
    p.set_defaults(func=cmd_census)

    p = subs.add_parser("mastermind", help="nonadaptive mastermind demo")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--secret", help="hidden word; random if omitted")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_mastermind)

    p = subs.add_parser("lb", help="counting lower bound on the code size")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--diam", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_lb)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.func is cmd_lb and (args.q < 2 or args.diam < 1 or args.n < 2):
            parser.error("lb needs --q >= 2, --diam >= 1, --n >= 2")
        if args.func is cmd_mastermind and args.n < 1:
            parser.error("mastermind needs --n >= 1")
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconsistentDistanceVector as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ResourceCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (Graph6ParseError, NotConnectedError, InfiniteDimensionError,
            ResolveKitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
