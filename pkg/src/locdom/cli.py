"""Command-line interface.

Exit codes: 0 every check passed, 1 a check failed, 2 bad usage or input,
3 an exact computation was refused by a size cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from pathlib import Path

from . import constructions as cons
from .bounds import ClassFlags, bounds_report
from .errors import CapExceededError, ConstructionError, GraphValidationError, ParseError, PreconditionError
from .extremes import (check_lower_extremal, check_upper_extremal, default_workers, edge_removal_monotone_check,
                       lower_dld_exact, upper_dld_exact)
from .families import make_family, parse_family_spec
from .graph import DEFAULT_ORIENT_CAP, Graph, Orientation, has_c4_subgraph, is_connected
from .harness import SUITES, run_suite
from .io import from_edge_list, from_graph6, read_corpus, read_graph6_stream, to_graph6
from .params import color_with, independence_number
from .solver import DEFAULT_EXACT_CAP, LdCertificate, gamma_ld, gamma_ld_digraph

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
TARGETS = ("gamma_ld", "lower_dld", "upper_dld")
CITATIONS = {
    "gamma_ld": "exact branch and bound over vertex subsets",
    "lower_dld": "exact search over sets with code matching",
    "upper_dld": "exhaustive enumeration of orientations",
}

log = logging.getLogger("locdom")


class UsageError(Exception):
    pass


# graph input ---------------------------------------------------------------


def _graph6_source(text: str) -> list[Graph]:
    if text == "-":
        return list(read_graph6_stream(sys.stdin))
    p = Path(text)
    if p.exists():
        return list(read_corpus(p))
    return [from_graph6(text)]


def load_graphs(args) -> list[Graph]:
    chosen = [x for x in (args.graph6, args.edges, args.family) if x]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --graph6, --edges or --family")
    if args.graph6:
        graphs = _graph6_source(args.graph6)
    elif args.edges:
        text = sys.stdin.read() if args.edges == "-" else Path(args.edges).read_text()
        graphs = [from_edge_list(text)]
    else:
        try:
            graphs = [parse_family_spec(args.family)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if not graphs:
        raise UsageError("no graph in the input")
    return graphs


def graph_json(g: Graph) -> dict:
    out = {"graph6": to_graph6(g), "n": g.n, "m": g.m}
    if g.meta:
        out["meta"] = dict(g.meta)
    return out


def parse_targets(text: str) -> list[str]:
    if text == "all":
        return list(TARGETS)
    names = [t.strip() for t in text.split(",") if t.strip()]
    for t in names:
        if t not in TARGETS:
            raise UsageError(f"unknown target {t!r}; choose from {', '.join(TARGETS)} or all")
    return names


class Phases:
    """Wall-clock time per named phase."""

    def __init__(self):
        self.times: dict[str, float] = {}

    @contextmanager
    def __call__(self, name: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.times[name] = round(self.times.get(name, 0.0) + time.perf_counter() - t0, 4)


# compute -------------------------------------------------------------------


def exact_target(g: Graph, target: str, exact_cap: int, orient_cap: int) -> tuple[int, LdCertificate]:
    if target == "gamma_ld":
        return gamma_ld(g, exact_cap)
    if target == "lower_dld":
        return lower_dld_exact(g, exact_cap)
    value, _, cert = upper_dld_exact(g, orient_cap)
    return value, cert


def compute_one(g: Graph, targets: list[str], exact_cap: int, orient_cap: int,
                flags: ClassFlags, timing: bool) -> dict:
    phases = Phases()
    values, refused = {}, {}
    for t in targets:
        with phases(t):
            try:
                value, cert = exact_target(g, t, exact_cap, orient_cap)
            except CapExceededError as exc:
                refused[t] = str(exc)
                continue
        assert cert.verify(g), f"certificate for {t} does not verify"
        values[t] = {"value": value, "citation": CITATIONS[t], "certificate": cert.to_json()}
    with phases("bounds"):
        report = bounds_report(g, flags, exact_cap=exact_cap)
    bad = report.violations({t: v["value"] for t, v in values.items()})
    assertions = [{"name": "certificates verify", "passed": True},
                  {"name": "exact values inside every applicable bound", "passed": not bad,
                   "violations": [e.name for e in bad]}]
    out = {"graph": graph_json(g), "values": values, "refused": refused,
           "bounds": report.to_json(), "assertions": assertions}
    if timing:
        out["timing"] = phases.times
    return out


def cmd_compute(args) -> tuple[dict, int]:
    graphs = load_graphs(args)
    targets = parse_targets(args.targets)
    flags = ClassFlags.parse(args.flags) if args.flags else ClassFlags()
    results = [compute_one(g, targets, args.exact_cap, args.orient_cap, flags, not args.no_timing) for g in graphs]
    failed = any(not a["passed"] for r in results for a in r["assertions"])
    refused = any(r["refused"] for r in results)
    code = EXIT_FAIL if failed else EXIT_CAP if refused and not args.bounds_only else EXIT_OK
    return {"results": results}, code


# construct / verify ----------------------------------------------------------


def _single(args) -> Graph:
    graphs = load_graphs(args)
    if len(graphs) != 1:
        raise UsageError("this command takes a single graph")
    return graphs[0]


def _construct(name: str, args) -> tuple[Graph, LdCertificate, dict]:
    if name in ("clique-subset", "transitive"):
        if args.n is None:
            raise UsageError(f"{name} needs --n")
        if name == "clique-subset":
            d, cert = cons.clique_subset_construction(args.n)
            return d.host, cert, {"bound": cons.clique_code_size(args.n)}
        w = cons.transitive_tournament_witness(args.n, args.exact_cap)
        extra = {"value": w.value, "verified": w.verified}
        if w.certificate is None:
            raise CapExceededError("order for transitive-tournament verification", args.n, args.exact_cap)
        return w.orientation.host, w.certificate, extra
    g = _single(args)
    if name == "undirected-orient":
        _, s = gamma_ld(g, args.exact_cap)
        _, cert = cons.orient_from_undirected_ld(g, s.mask)
        return g, cert, {}
    if name == "matching":
        _, cert = cons.matching_construction(g)
        return g, cert, {}
    if name == "tree":
        cert = cons.tree_ld_construction(g)
        return g, cert, {"bound": str(cons.tree_bound(g)), "in_support_link_closure": cons.is_in_TSL(g)}
    if name == "twin-free":
        _, cert = cons.twin_free_half_construction(g)
        return g, cert, {"bound": g.n // 2}
    if name == "regular-random":
        cfg = cons.RandomizedConfig(c=args.c, seed=args.seed, p=args.p)
        _, cert, report = cons.regular_random_construction(g, cfg)
        return g, cert, {"random": report.to_json()}
    if name == "regular-matching":
        h, cert, d = cons.regular_matching_construction(g)
        directed = LdCertificate.build(d.in_masks, cert.mask, d)
        return g, directed, {"subgraph": to_graph6(h)}
    if name == "worm":
        col = color_with(g, 3)
        if col is None:
            raise PreconditionError("graph is not 3-colourable")
        d = cons.worm_orientation(g, col)
        _, cert = gamma_ld_digraph(d, args.exact_cap)
        return g, cert, {"coloring": col}
    if name == "source-forcing":
        _, x = independence_number(g)
        d = cons.source_forcing_orientation(g, x)
        _, cert = gamma_ld_digraph(d, args.exact_cap)
        return g, cert, {"sources": x}
    if name == "worst-upper":
        d = Orientation.from_hex(g, args.orientation) if args.orientation else upper_dld_exact(g, args.orient_cap)[1]
        cert = cons.worst_upper_witness(g, d)
        return g, cert, {}
    raise UsageError(f"unknown construction {name!r}; choose from {', '.join(CONSTRUCTIONS)}")


CONSTRUCTIONS = ("undirected-orient", "matching", "clique-subset", "transitive", "tree", "twin-free",
                 "regular-random", "regular-matching", "worm", "source-forcing", "worst-upper")


def cmd_construct(args) -> tuple[dict, int]:
    phases = Phases()
    with phases("construct"):
        g, cert, extra = _construct(args.name, args)
    check = cert.verify(g)
    out = {"construction": args.name, "graph": graph_json(g), "size": cert.size,
           "certificate": cert.to_json(), "verified": bool(check), **extra}
    if not args.no_timing:
        out["timing"] = phases.times
    return out, EXIT_OK if check else EXIT_FAIL


def cmd_verify(args) -> tuple[dict, int]:
    try:
        data = json.loads(Path(args.certificate).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read certificate: {exc}") from None
    if "certificate" in data:
        data = data["certificate"]
    if args.graph is not None:
        g = _graph6_source(args.graph)[0]
    else:
        g = _single(args)
    cert = LdCertificate.from_json(data, g)
    check = cert.verify(g)
    out = {"graph": graph_json(g), "size": cert.size, "valid": bool(check),
           "violation": None if check else str(check.violation)}
    return out, EXIT_OK if check else EXIT_FAIL


# verify-paper ----------------------------------------------------------------


def cmd_verify_paper(args) -> tuple[dict, int]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if any(n not in SUITES for n in names):
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    claims = []
    for name in names:
        for res in run_suite(name, args.max_n, args.seed):
            row = res.to_json(timing=not args.no_timing)
            row["suite"] = name
            claims.append(row)
            log.info("%-13s %-4s %6d  %s", name, "pass" if res.passed else "FAIL", res.instances, res.claim)
    ok = all(c["passed"] for c in claims)
    return {"claims": claims, "passed": ok}, EXIT_OK if ok else EXIT_FAIL


# sweep -----------------------------------------------------------------------


def parse_sweep_spec(text: str) -> list[tuple[str, tuple[int, ...]]]:
    """``"h_graph=2..3,2..3"`` -> every parameter combination in the ranges."""
    from itertools import product

    name, _, rest = text.partition("=")
    ranges = []
    for part in [p for p in rest.split(",") if p.strip()]:
        lo, sep, hi = part.partition("..")
        try:
            a = int(lo)
            b = int(hi) if sep else a
        except ValueError:
            raise UsageError(f"bad range {part!r} in sweep spec") from None
        ranges.append(range(a, b + 1))
    return [(name.strip(), combo) for combo in product(*ranges)]


def _sweep_row(job) -> dict:
    name, params, targets, exact_cap, orient_cap = job
    g = make_family(name, *params)
    report = bounds_report(g, exact_cap=exact_cap)
    row = {"family": name, "params": list(params), "n": g.n, "m": g.m, "values": {}, "status": {}}
    for t in targets:
        try:
            row["values"][t] = exact_target(g, t, exact_cap, orient_cap)[0]
            row["status"][t] = "exact"
        except CapExceededError:
            row["values"][t] = None
            row["status"][t] = "cap_exceeded"
    row["best_bounds"] = {}
    for t in TARGETS:
        lo, hi = report.best(t)
        row["best_bounds"][t] = [None if lo is None else float(lo), None if hi is None else float(hi)]
    row["bounds"] = [e.to_json() for e in report.entries if e.applicable]
    bad = report.violations({t: v for t, v in row["values"].items() if v is not None})
    row["violations"] = [e.name for e in bad]
    gl, up = row["values"].get("gamma_ld"), row["values"].get("upper_dld")
    row["ratio"] = up / gl if gl and up is not None else None
    return row


CSV_COLUMNS = ["family", "params", "n", "m"] + [f"{t}{suffix}" for t in TARGETS
                                                  for suffix in ("", "_status", "_lower", "_upper")] + ["ratio",
                                                                                                        "violations"]


def sweep_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        line = [r["family"], " ".join(map(str, r["params"])), r["n"], r["m"]]
        for t in TARGETS:
            lo, hi = r["best_bounds"][t]
            line += [r["values"].get(t, ""), r["status"].get(t, "not_requested"),
                     "" if lo is None else lo, "" if hi is None else hi]
        line += ["" if r["ratio"] is None else round(r["ratio"], 6), " ".join(r["violations"])]
        w.writerow(["" if x is None else x for x in line])
    return buf.getvalue()


def cmd_sweep(args) -> tuple[dict, int]:
    if not args.family:
        raise UsageError("sweep needs --family with ranges, e.g. h_graph=2..3,2..3")
    targets = parse_targets(args.targets)
    jobs = [(name, params, targets, args.exact_cap, args.orient_cap) for name, params in parse_sweep_spec(args.family)]
    try:
        for name, params, *_ in jobs:
            make_family(name, *params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    workers = default_workers()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            rows = list(pool.map(_sweep_row, jobs))
    else:
        rows = [_sweep_row(j) for j in jobs]
    ok = not any(r["violations"] for r in rows)
    return {"rows": rows, "passed": ok}, EXIT_OK if ok else EXIT_FAIL


# extremes --------------------------------------------------------------------


def cmd_extremes(args) -> tuple[dict, int]:
    results = []
    refused = False
    ok = True
    for g in load_graphs(args):
        entry = {"graph": graph_json(g)}
        try:
            lo, lo_cert = lower_dld_exact(g, args.exact_cap)
            hi, worst, hi_cert = upper_dld_exact(g, args.orient_cap)
        except CapExceededError as exc:
            entry["refused"] = str(exc)
            refused = True
            results.append(entry)
            continue
        entry["lower_dld"] = {"value": lo, "citation": CITATIONS["lower_dld"], "certificate": lo_cert.to_json()}
        entry["upper_dld"] = {"value": hi, "citation": CITATIONS["upper_dld"], "certificate": hi_cert.to_json()}
        if g.n >= 2 and is_connected(g):
            pl, pu = check_lower_extremal(g), check_upper_extremal(g)
            entry["lower_is_n_minus_1"] = {"predicted": pl, "actual": lo == g.n - 1}
            entry["upper_is_n_minus_1"] = {"predicted": pu, "actual": hi == g.n - 1}
            ok &= pl == (lo == g.n - 1) and pu == (hi == g.n - 1)
        if not has_c4_subgraph(g) and g.m <= args.orient_cap:
            mono, edge = edge_removal_monotone_check(g, args.orient_cap)
            entry["edge_removal_monotone"] = {"holds": mono, "edge": edge}
            ok &= mono
        results.append(entry)
    code = EXIT_FAIL if not ok else EXIT_CAP if refused else EXIT_OK
    return {"results": results, "passed": ok}, code


# entry point -------------------------------------------------------------------


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", help="graph6 string, graph6 file, directory of *.g6 files, or - for stdin")
    p.add_argument("--edges", help="edge-list file (or - for stdin)")
    p.add_argument("--family", help="family spec such as cycle=7, h_graph=3,3, petersen")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--exact-cap", type=int, default=DEFAULT_EXACT_CAP, help="largest order for exact LD search")
    p.add_argument("--orient-cap", type=int, default=DEFAULT_ORIENT_CAP,
                   help="largest edge count for orientation enumeration")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--no-timing", action="store_true", help="omit timings so reports are reproducible byte for byte")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="locdom", description="Locating-dominating sets in graphs and orientations.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact values, certificates and bounds")
    _add_graph_args(p)
    _add_common(p)
    p.add_argument("--targets", default="all", help="comma list of gamma_ld, lower_dld, upper_dld, or all")
    p.add_argument("--flags", help="class hints, e.g. planar,perfect,chi_bounded=2,hampath=0-1-2")
    p.add_argument("--bounds-only", action="store_true", help="cap refusals are not an error")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("construct", help="run a construction and print its certificate")
    p.add_argument("name", help=", ".join(CONSTRUCTIONS))
    _add_graph_args(p)
    _add_common(p)
    p.add_argument("--n", type=int, help="order for clique-subset and transitive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--c", type=float, default=2.0)
    p.add_argument("--p", type=float, help="override the sampling probability of regular-random")
    p.add_argument("--orientation", help="hex direction string for worst-upper")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="re-check a certificate against a graph")
    p.add_argument("certificate", help="certificate JSON (raw or a construct report)")
    p.add_argument("graph", nargs="?", help="graph6 string or file")
    _add_graph_args(p)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-paper", help="run a claim-checking suite")
    p.add_argument("suite", help="all, " + ", ".join(SUITES))
    p.add_argument("--max-n", type=int)
    p.add_argument("--seed", type=int)
    _add_common(p)
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("sweep", help="table over a parameter range of a family")
    _add_graph_args(p)
    _add_common(p)
    p.add_argument("--targets", default="gamma_ld")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("extremes", help="best and worst orientations with extremal checks")
    _add_graph_args(p)
    _add_common(p)
    p.set_defaults(func=cmd_extremes)
    return parser


def _render(report: dict, args) -> str:
    if args.format == "csv":
        if args.command == "sweep":
            return sweep_csv(report["rows"])
        if args.command == "verify-paper":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["suite", "claim", "instances", "passed", "seconds"])
            for c in report["claims"]:
                w.writerow([c["suite"], c["claim"], c["instances"], c["passed"], c.get("seconds", "")])
            return buf.getvalue()
        raise UsageError(f"csv output is available for sweep and verify-paper, not {args.command}")
    return json.dumps(report, indent=2) + "\n"


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO, format="%(message)s",
                        stream=sys.stderr)
    try:
        body, code = args.func(args)
        report = {"command": ["locdom", *argv], **body}
        text = _render(report, args)
    except (UsageError, ParseError, GraphValidationError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ConstructionError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
