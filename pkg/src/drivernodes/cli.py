"""Command-line front end.

Exit status: 0 on success, 1 when no admissible driver set exists (or the
checked driver set fails), 2 on bad input. Diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from .drivers import InfeasibleError, select_driver_nodes, verify_structural_controllability
from .graph import Digraph, GraphParseError, format_graph, generate_random, parse_graph
from .oracle import TooLargeError, brute_force_min_drivers, numeric_controllability_check

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _guess_format(path: str | None) -> str:
    if path:
        ext = os.path.splitext(path)[1].lower()
        if ext == ".json":
            return "json"
        if ext in (".dot", ".gv"):
            return "dot"
    return "edge-list"


def _read_graph(path: str | None, fmt: str | None) -> Digraph:
    fmt = fmt or _guess_format(path)
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_graph(text, fmt)
    except (GraphParseError, ValueError) as exc:
        raise InputError(f"{path or '<stdin>'}: {exc}") from None


def _index_list(value: str | None, n: int, what: str) -> list[int]:
    """Parse ``1,4,5`` or, failing that, read indices from a file."""
    if not value:
        return []
    if re.fullmatch(r"[\d,\s]*", value):
        text = value
    else:
        try:
            with open(value, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {what} file {value}: {exc.strerror}") from None
        text = re.sub(r"#[^\n]*", "", text)
    out = []
    for tok in re.split(r"[,\s]+", text.strip()):
        if not tok:
            continue
        if not tok.isdigit():
            raise InputError(f"{what}: {tok!r} is not a node index")
        v = int(tok)
        if not 1 <= v <= n:
            raise InputError(f"{what}: node {v} outside 1..{n}")
        out.append(v)
    return sorted(set(out))


def _emit(args, payload: dict, text: str) -> None:
    if args.output == "json":
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        sys.stdout.write(text)


# -- subcommands ----------------------------------------------------------------


def _analyze_one(path, fmt, inaccessible):
    g = _read_graph(path, fmt)
    F = _index_list(inaccessible, g.n, "inaccessible")
    return select_driver_nodes(g, F)


def _analyze_safe(job):
    try:
        return "ok", _analyze_one(*job)
    except InfeasibleError as exc:
        return "infeasible", str(exc)
    except InputError as exc:
        return "input", str(exc)


def cmd_analyze(args) -> int:
    paths = args.input or [None]
    jobs = [(p, args.format, args.inaccessible) for p in paths]
    if len(jobs) > 1 and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_analyze_safe, jobs))
    else:
        results = [_analyze_safe(j) for j in jobs]

    status = EXIT_OK
    batch = []
    for path, (kind, value) in zip(paths, results):
        if kind != "ok":
            print(f"error: {value}", file=sys.stderr)
            status = max(status, EXIT_INPUT if kind == "input" else EXIT_INFEASIBLE)
            continue
        if len(paths) == 1:
            _emit(args, value.to_dict(), value.to_text())
        else:
            batch.append((path, value))
    if batch:
        if args.output == "json":
            doc = [{"input": p, "report": r.to_dict()} for p, r in batch]
            sys.stdout.write(json.dumps(doc) + "\n")
        else:
            for p, r in batch:
                sys.stdout.write(f"== {p}\n{r.to_text()}")
    return status


def cmd_verify(args) -> int:
    g = _read_graph(_single(args), args.format)
    drivers = _index_list(args.drivers, g.n, "drivers")
    if not drivers:
        raise InputError("--drivers is required and must be nonempty")
    res = verify_structural_controllability(g, drivers)
    payload = {
        "status": res.status,
        "connectivity": res.connectivity,
        "rank": res.rank,
        "unreachable": sorted(res.witness),
        "rank_deficit": res.deficit,
    }
    text = (
        f"{res.status}\n"
        f"  input connectivity: {'ok' if res.connectivity else 'fails'}"
        f"{'' if res.connectivity else ' (unreachable ' + str(sorted(res.witness)) + ')'}\n"
        f"  rank condition: {'ok' if res.rank else f'fails (deficit {res.deficit})'}\n"
    )
    _emit(args, payload, text)
    return EXIT_OK if res.controllable else EXIT_INFEASIBLE


def cmd_oracle(args) -> int:
    g = _read_graph(_single(args), args.format)
    F = _index_list(args.inaccessible, g.n, "inaccessible")
    drivers = _index_list(args.drivers, g.n, "drivers")
    payload: dict = {}
    lines = []
    algo = None
    try:
        report = select_driver_nodes(g, F)
        algo = report.n_min
        drivers = drivers or report.drivers
    except InfeasibleError as exc:
        lines.append(f"algorithm: infeasible ({exc})")
    payload["n_min"] = algo
    if algo is not None:
        lines.append(f"algorithm: n_min = {algo}")

    agree = True
    if args.check in ("both", "brute-force"):
        try:
            bf = brute_force_min_drivers(g, F, limit=args.limit)
        except TooLargeError as exc:
            raise InputError(str(exc)) from None
        payload["brute_force"] = {
            "feasible": bf.feasible,
            "count": bf.count,
            "witness": list(bf.witness) if bf.witness else None,
        }
        agree &= bf.count == algo
        lines.append(
            f"brute force: n_min = {bf.count} witness {list(bf.witness)}"
            if bf.feasible else "brute force: infeasible"
        )
    if args.check in ("both", "numeric") and drivers:
        structural = verify_structural_controllability(g, drivers).controllable
        num = numeric_controllability_check(g, drivers, trials=args.trials, seed=args.seed)
        payload["numeric"] = {
            "drivers": drivers,
            "structural": structural,
            "full_rank": num.full_rank,
            "max_rank": num.max_rank,
        }
        agree &= structural == num.full_rank
        lines.append(f"numeric check of {drivers}: {num}; structural: "
                     f"{'controllable' if structural else 'not controllable'}")
    payload["agree"] = agree
    lines.append("agreement" if agree else "DISAGREEMENT")
    _emit(args, payload, "\n".join(lines) + "\n")
    if not agree:
        print("error: oracle disagreement", file=sys.stderr)
        return EXIT_INFEASIBLE
    return EXIT_OK if algo is not None else EXIT_INFEASIBLE


def cmd_gen(args) -> int:
    params = {"erdos-renyi": {"p": args.p}, "small-world": {"k": args.k, "beta": args.beta},
              "scale-free": {"m": args.m}}[args.model]
    try:
        g = generate_random(args.model, args.n, args.seed, **params)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(format_graph(g, "edge-list"))
    return EXIT_OK


def _single(args) -> str | None:
    if args.input and len(args.input) > 1:
        raise InputError(f"{args.command} takes a single --input")
    return args.input[0] if args.input else None


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drivernodes",
        description="Minimal driver nodes for structural controllability of digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p, multi=False):
        p.add_argument("--input", nargs="+" if multi else 1, metavar="PATH",
                       help="graph file(s); '-' or omitted reads stdin")
        p.add_argument("--format", choices=["edge-list", "json", "dot"],
                       help="input format (default: by file extension, else edge-list)")
        p.add_argument("--output", choices=["json", "text"], default="json")

    p = sub.add_parser("analyze", help="select a minimal driver set")
    graph_args(p, multi=True)
    p.add_argument("--inaccessible", help="comma list or file of node indices")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for several inputs")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check a driver set")
    graph_args(p)
    p.add_argument("--drivers", required=True, help="comma list or file of node indices")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="compare against brute force and numeric rank")
    graph_args(p)
    p.add_argument("--inaccessible", help="comma list or file of node indices")
    p.add_argument("--drivers", help="driver set for the numeric check (default: selected)")
    p.add_argument("--check", choices=["both", "brute-force", "numeric"], default="both")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--limit", type=int, default=12, help="largest n for brute force")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a random digraph as an edge list")
    p.add_argument("--model", choices=["erdos-renyi", "small-world", "scale-free"],
                   default="erdos-renyi")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.1)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--beta", type=float, default=0.1)
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "input", None) and not isinstance(args.input, list):
        args.input = [args.input]
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
