"""Command-line entry point: generate, filter, construct, verify and canon.

Exit codes: 0 success, 1 usage error, 2 input data error, 3 internal
assertion failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Iterable, Iterator, Sequence, TextIO

from . import obstructions as ob
from .canonical import canonical_form
from .constructions import (
    FiveCycleWitness,
    GluingTuple,
    Report,
    amalgam,
    check_amalgam_preconditions,
    check_tuple_conditions,
    extendable_five_cycle_report,
    family_graph,
    five_cycle_problems,
    gluing_violations,
)
from .generator import ConfigError, GenConfig, generate
from .graph import Graph, GraphError, graph6_decode, graph6_encode, vertex_connectivity_at_least
from .hamiltonicity import (
    hamiltonian_cycle,
    is_hamiltonian,
    is_hypohamiltonian,
    is_k2_hamiltonian,
    is_k2_hypohamiltonian,
    k2_failures,
    non_hamiltonian_vertex_deletions,
)

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_INTERNAL = 0, 1, 2, 3

log = logging.getLogger("k2hypo")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2 by default
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _classes() -> dict[str, Callable[[Graph], bool]]:
    return {
        "ham": is_hamiltonian,
        "hypoham": lambda g: g.order >= 3 and is_hypohamiltonian(g),
        "k2ham": lambda g: g.order >= 4 and is_k2_hamiltonian(g),
        "k2hypoham": lambda g: g.order >= 4 and is_k2_hypohamiltonian(g),
    }


def _int_list(text: str, count: int) -> list[int]:
    try:
        vals = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise UsageError(f"expected {count} comma-separated integers, got {text!r}") from None
    if len(vals) != count:
        raise UsageError(f"expected {count} comma-separated integers, got {text!r}")
    return vals


def _graph_lines(stream: Iterable[str], err: TextIO) -> Iterator[tuple[int, str, Graph | None]]:
    """``(line number, stripped line, graph or None)``; malformed lines are reported and yield None."""
    for no, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
        try:
            yield no, line, graph6_decode(line)
        except GraphError as e:
            print(f"line {no}: {e}", file=err)
            yield no, line, None


def _read_one(path: str | None, stdin: TextIO) -> Graph:
    if path is None or path == "-":
        lines = stdin.readlines()
    else:
        try:
            with open(path) as fh:
                lines = fh.readlines()
        except OSError as e:
            raise GraphError(f"{path}: {e.strerror}") from None
    for line in lines:
        line = line.strip()
        if line:
            if line.startswith(">>graph6<<"):
                line = line[len(">>graph6<<"):]
            return graph6_decode(line)
    raise GraphError(f"{path or 'stdin'}: no graph found")


def _check_vertices(g: Graph, vs: Sequence[int]) -> None:
    for v in vs:
        if not 0 <= v < g.order:
            raise UsageError(f"vertex {v} out of range for a graph of order {g.order}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_generate(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    budget = ob.SearchBudget(args.max_w, args.max_candidates, ob.DEFAULT_BUDGET.max_found)
    try:
        cfg = GenConfig(
            order=args.order,
            min_girth=args.min_girth,
            planar=args.planar,
            bipartite=args.bipartite,
            min_degree=args.min_deg,
            max_degree=args.max_deg,
            workers=args.workers,
            store_cap=args.store_cap,
            budget=budget,
            check_rate=args.check_rate,
        ).validate()
    except ConfigError as e:
        raise UsageError(str(e)) from None
    def emit(line: str) -> None:
        out.write(line + "\n")
        out.flush()

    streaming = args.stream and not args.counts_only
    result = generate(cfg, emit if streaming else None)
    if not args.stream and not args.counts_only:
        for line in result.graphs:
            out.write(line + "\n")
    for key, value in _summary(cfg, result.stats.rows()):
        print(f"{key}\t{value}", file=err)
    return EXIT_OK


def _summary(cfg: GenConfig, rows: list[tuple[str, int]]) -> list[tuple[str, object]]:
    head: list[tuple[str, object]] = [
        ("order", cfg.order),
        ("min_girth", cfg.min_girth),
        ("planar", int(cfg.planar)),
        ("bipartite", int(cfg.bipartite)),
        ("min_degree", cfg.min_degree),
        ("max_degree", cfg.degree_cap),
    ]
    return head + list(rows)


def cmd_filter(args: argparse.Namespace, inp: TextIO, out: TextIO, err: TextIO) -> int:
    pred = _classes()[args.cls]
    skipped = 0
    for no, line, g in _graph_lines(inp, err):
        if g is None:
            skipped += 1
            continue
        if pred(g) != args.invert:
            out.write(line + "\n")
    return EXIT_DATA if skipped else EXIT_OK


def cmd_canon(args: argparse.Namespace, inp: TextIO, out: TextIO, err: TextIO) -> int:
    seen: set[bytes] = set()
    skipped = 0
    for no, line, g in _graph_lines(inp, err):
        if g is None:
            skipped += 1
            continue
        form = canonical_form(g)
        if args.dedup:
            if form in seen:
                continue
            seen.add(form)
        out.write(form.decode() + "\n")
    return EXIT_DATA if skipped else EXIT_OK


def _print_report(title: str, rep: Report, out: TextIO) -> None:
    print(f"# {title}", file=out)
    for line in rep.lines():
        print(line, file=out)


def cmd_construct(args: argparse.Namespace, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    if args.kind == "family":
        try:
            g = family_graph(args.n)
        except GraphError as e:
            raise UsageError(str(e)) from None
        print(graph6_encode(g), file=out)
        if args.verify:
            rep = Report()
            rep.add("order", g.order == args.n, str(g.order))
            rep.add("size", g.edge_count == 2 * args.n - 5, str(g.edge_count))
            rep.add("max_degree", g.max_degree() == (args.n - 1) // 3, str(g.max_degree()))
            rep.add("non_hamiltonian", not is_hamiltonian(g))
            rep.add("hypohamiltonian", is_hypohamiltonian(g))
            bad = k2_failures(g, first_only=True)
            rep.add("k2_hamiltonian", not bad, f"fails at edge {bad[0]}" if bad else "")
            _print_report("family", rep, err)
            return EXIT_OK if rep.ok else EXIT_DATA
        return EXIT_OK

    g1 = _read_one(args.file1, stdin)
    g2 = _read_one(args.file2, stdin)
    v1 = _int_list(args.tuple1, 4)
    v2 = _int_list(args.tuple2, 4)
    _check_vertices(g1, v1)
    _check_vertices(g2, v2)
    for name, g, vs in (("first", g1, v1), ("second", g2, v2)):
        if len(set(vs)) != 4:
            raise UsageError(f"{name} tuple repeats a vertex")
        problems = gluing_violations(g, *vs)
        if problems:
            print(f"{name} tuple fails the gluing property: " + "; ".join(problems), file=err)
            return EXIT_DATA
    t1, t2 = GluingTuple(g1, *v1), GluingTuple(g2, *v2)
    h = amalgam(t1, t2)
    print(graph6_encode(h), file=out)
    if args.verify:
        rep = Report()
        rep.add("both_non_hamiltonian", check_amalgam_preconditions(t1, t2))
        for name, t in (("first", t1), ("second", t2)):
            sub = check_tuple_conditions(t)
            for c in sub.checks:
                rep.add(f"{name}_{c.name}", c.ok, c.detail, c.certificate)
        rep.add("amalgam_order", h.order == g1.order + g2.order - 2, str(h.order))
        rep.add("amalgam_size", h.edge_count == g1.edge_count + g2.edge_count - 2, str(h.edge_count))
        c = hamiltonian_cycle(h)
        rep.add("amalgam_non_hamiltonian", c is None, "", c)
        bad = k2_failures(h, first_only=True)
        rep.add("amalgam_k2_hamiltonian", not bad, f"fails at edge {bad[0]}" if bad else "")
        rep.add("amalgam_non_hamiltonian_deletions", True, " ".join(map(str, non_hamiltonian_vertex_deletions(h))))
        _print_report("amalgam", rep, err)
        return EXIT_OK if rep.ok else EXIT_DATA
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    g = _read_one(args.file, stdin)
    print(f"order={g.order}", file=out)
    print(f"size={g.edge_count}", file=out)
    ok = True
    did = False
    if args.tuple is not None:
        did = True
        vs = _int_list(args.tuple, 4)
        _check_vertices(g, vs)
        if len(set(vs)) != 4:
            raise UsageError("tuple repeats a vertex")
        problems = gluing_violations(g, *vs)
        print(f"gluing={'pass' if not problems else 'fail'}" + ("\t" + "; ".join(problems) if problems else ""), file=out)
        if problems:
            ok = False
        else:
            rep = check_tuple_conditions(GluingTuple(g, *vs))
            _print_report("tuple conditions", rep, out)
            ok &= rep.ok
    if args.five_cycle is not None:
        did = True
        vs = _int_list(args.five_cycle, 5)
        _check_vertices(g, vs)
        problems = five_cycle_problems(g, vs)
        if problems:
            print("five_cycle=refused\t" + "; ".join(problems), file=out)
            ok = False
        else:
            rep = extendable_five_cycle_report(g, FiveCycleWitness.of(g, vs))
            _print_report("extendable five-cycle", rep, out)
            print(f"extendable={'pass' if rep.ok else 'fail'}", file=out)
            ok &= rep.ok
    if args.corollaries:
        did = True
        viol = ob.validate_degree_corollaries(g)
        print(f"corollaries={'pass' if not viol else 'fail'}", file=out)
        for v, reason in viol:
            print(f"violation\t{v}\t{reason}", file=out)
        ok &= not viol
    if not did:
        c = hamiltonian_cycle(g)
        print(f"hamiltonian={'yes' if c else 'no'}" + (f"\tcycle={' '.join(map(str, c))}" if c else ""), file=out)
        if g.order >= 3:
            print(f"hypohamiltonian={'yes' if c is None and is_hypohamiltonian(g) else 'no'}", file=out)
        if g.order >= 4:
            bad = k2_failures(g, first_only=True)
            print(f"k2_hamiltonian={'yes' if not bad else 'no'}" + (f"\tfails_at={bad[0][0]},{bad[0][1]}" if bad else ""), file=out)
            print(f"k2_hypohamiltonian={'yes' if c is None and not bad else 'no'}", file=out)
        print(f"three_connected={'yes' if vertex_connectivity_at_least(g, 3) else 'no'}", file=out)
    print(f"result={'pass' if ok else 'fail'}", file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="k2hypo", description="Generate, verify and construct K2-hypohamiltonian graphs.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to the error stream")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="all K2-hypohamiltonian graphs of one order")
    g.add_argument("order", type=int)
    g.add_argument("--min-girth", type=int, default=3)
    g.add_argument("--planar", action="store_true")
    g.add_argument("--bipartite", action="store_true")
    g.add_argument("--min-deg", type=int, default=3)
    g.add_argument("--max-deg", type=int, default=None)
    g.add_argument("--workers", type=int, default=1)
    g.add_argument("--counts-only", action="store_true", help="print only the summary")
    g.add_argument("--stream", action="store_true", help="print graphs as found instead of sorted at the end")
    g.add_argument("--store-cap", type=int, default=None, help="bound the number of stored intermediate forms")
    g.add_argument("--max-w", type=int, default=ob.DEFAULT_BUDGET.max_w, help="largest W tried in partition searches")
    g.add_argument("--max-candidates", type=int, default=ob.DEFAULT_BUDGET.max_candidates, help="partition candidates explored per search")
    g.add_argument("--check-rate", type=float, default=GenConfig.check_rate, help="fraction of nodes whose forbidden edges are re-verified")

    f = sub.add_parser("filter", help="keep graph6 lines in a class")
    f.add_argument("--class", dest="cls", required=True, choices=sorted(_classes()))
    f.add_argument("--invert", action="store_true")

    c = sub.add_parser("construct", help="build the explicit family or an amalgam")
    csub = c.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    fam = csub.add_parser("family")
    fam.add_argument("n", type=int)
    fam.add_argument("--verify", action="store_true")
    am = csub.add_parser("amalgam")
    am.add_argument("file1")
    am.add_argument("tuple1", help="a,a',b,b'")
    am.add_argument("file2")
    am.add_argument("tuple2", help="a,a',b,b'")
    am.add_argument("--verify", action="store_true")

    v = sub.add_parser("verify", help="certificate checks on one graph")
    v.add_argument("file", nargs="?", default=None, help="graph6 file (default: standard input)")
    v.add_argument("--tuple", help="a,a',b,b'")
    v.add_argument("--five-cycle", help="v0,v1,v2,v3,v4")
    v.add_argument("--corollaries", action="store_true")

    k = sub.add_parser("canon", help="canonical graph6 for every input line")
    k.add_argument("--dedup", action="store_true")
    return p


def main(argv: Sequence[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=stderr, format="%(levelname)s %(message)s")
    try:
        if args.command == "generate":
            return cmd_generate(args, stdout, stderr)
        if args.command == "filter":
            return cmd_filter(args, stdin, stdout, stderr)
        if args.command == "canon":
            return cmd_canon(args, stdin, stdout, stderr)
        if args.command == "construct":
            return cmd_construct(args, stdin, stdout, stderr)
        return cmd_verify(args, stdin, stdout, stderr)
    except UsageError as e:
        print(f"k2hypo: error: {e}", file=stderr)
        return EXIT_USAGE
    except GraphError as e:
        print(f"k2hypo: input error: {e}", file=stderr)
        return EXIT_DATA
    except AssertionError as e:
        print(f"k2hypo: internal check failed: {e}", file=stderr)
        return EXIT_INTERNAL


def run() -> None:
    sys.exit(main())
