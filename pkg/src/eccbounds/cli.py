"""Command-line surface: compute, bound, certify, generate, chain, batch.

Exit codes: 0 success / all checks hold, 1 usage error, 2 unreadable or
invalid input, 3 the requested operation does not apply to the input,
4 a bound violation or failed certificate chain was found.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from .bounds import UPPER_BOUND_IDS, evaluate_all
from .certify import NotCertifiableError, certify_even, certify_odd
from .extremal import chain_graph, sharpness_rows_to_csv, sharpness_report
from .generators import GenerationFailure, GeneratorConfig, emit_edge_list, random_min_degree_girth
from .graph import (
    DisconnectedGraphError,
    EdgeListParseError,
    Graph,
    eccentricity_profile,
    girth,
    parse_edge_list,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INAPPLICABLE = 3
EXIT_VIOLATION = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    return parse_edge_list(Path(path).read_text())


def _dec(x: Fraction) -> str:
    return f"{float(x):.6f}"


def _girth_str(g_val) -> str:
    return "acyclic" if g_val is None else str(g_val)


def _threads() -> int:
    raw = os.environ.get("ECCB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------

def cmd_compute(args) -> int:
    g = _read_graph(args.input)
    prof = eccentricity_profile(g)
    gi = girth(g)
    if args.json:
        payload = {
            "n": g.n,
            "m": g.m,
            "minDegree": g.min_degree(),
            "maxDegree": g.max_degree(),
            "girth": gi,
            "ecc": list(prof.ecc),
            "total": prof.total,
            "avec": str(prof.avec),
            "avecDecimal": _dec(prof.avec),
            "radius": prof.radius,
            "diameter": prof.diameter,
        }
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(f"n={g.n} m={g.m} minDeg={g.min_degree()} maxDeg={g.max_degree()} "
              f"girth={_girth_str(gi)}")
        print(f"avec={prof.avec} ({_dec(prof.avec)}) radius={prof.radius} "
              f"diameter={prof.diameter} total={prof.total}")
    return EXIT_OK


def cmd_bound(args) -> int:
    g = _read_graph(args.input)
    results = evaluate_all(g)
    if args.only:
        wanted = args.only.lower()
        results = [r for r in results if r.bound.value.lower() == wanted]
        if not results:
            ids = ", ".join(b.value for b in UPPER_BOUND_IDS)
            print(f"unknown bound id {args.only!r}; choose from {ids}", file=sys.stderr)
            return EXIT_USAGE
    if args.json:
        print(json.dumps([r.to_json_dict() for r in results],
                         sort_keys=True, separators=(",", ":")))
        return EXIT_OK
    for r in results:
        if r.applicable:
            sat = "satisfied" if r.satisfied else "VIOLATED"
            print(f"{r.bound.value:<22} {str(r.value):<14} ({_dec(r.value)})  {sat}")
        else:
            print(f"{r.bound.value:<22} not applicable: {r.reason}")
    return EXIT_OK


def cmd_certify(args) -> int:
    g = _read_graph(args.input)
    gi = girth(g)
    if gi is None:
        print("graph is acyclic: nothing to certify", file=sys.stderr)
        return EXIT_INAPPLICABLE
    cert = (certify_odd if gi % 2 else certify_even)(g, use_max_degree=args.maxdeg)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = "stdin" if args.input == "-" else Path(args.input).stem
    out_path = out_dir / f"{stem}.cert.json"
    out_path.write_text(cert.to_json() + "\n")
    if args.json:
        print(cert.to_json())
    print(f"{cert.bound_id}: allStepsHold={cert.all_steps_hold} "
          f"bound={cert.chain['finalBound']} avec={cert.chain['avecG']} -> {out_path}")
    return EXIT_OK if cert.all_steps_hold else EXIT_VIOLATION


def cmd_generate(args) -> int:
    cfg = GeneratorConfig(n=args.n, delta=args.delta, g=args.g, seed=args.seed)
    out = random_min_degree_girth(cfg)
    if isinstance(out, GenerationFailure):
        print(f"generation failed after {out.restarts} restarts "
              f"({out.attempts} attempts): {out.reason}")
        return EXIT_VIOLATION if args.strict else EXIT_OK
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"gen_n{args.n}_d{args.delta}_g{args.g}_s{args.seed}.el"
    path.write_text(emit_edge_list(out, cfg))
    print(f"n={out.n} m={out.m} minDeg={out.min_degree()} girth={girth(out)} -> {path}")
    return EXIT_OK


def cmd_chain(args) -> int:
    try:
        graph, spec = chain_graph(args.delta, args.g, args.k)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INAPPLICABLE
    prof = eccentricity_profile(graph)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"chain_d{args.delta}_g{args.g}_k{args.k}.el"
    path.write_text(emit_edge_list(graph))
    print(f"n={graph.n} m={graph.m} diameter={prof.diameter} radius={prof.radius} "
          f"avec={prof.avec} ({_dec(prof.avec)}) -> {path}")
    if args.report:
        rows = sharpness_report(args.delta, args.g, range(1, args.k + 1))
        report_path = out_dir / f"sharpness_d{args.delta}_g{args.g}.csv"
        report_path.write_text(sharpness_rows_to_csv(rows))
        print(f"sharpness table for k=1..{args.k} -> {report_path}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# batch

def _batch_sources(args):
    """Yield (graphId, Graph-or-Failure) pairs in deterministic order."""
    if args.dir:
        files = sorted(Path(args.dir).glob("*.el"))
        if not files:
            raise FileNotFoundError(f"no .el files in {args.dir}")
        for f in files:
            yield f.stem, parse_edge_list(f.read_text())
    else:
        for i in range(args.count):
            cfg = GeneratorConfig(n=args.n, delta=args.delta, g=args.g,
                                  seed=args.seed * 1_000_003 + i)
            yield f"gen-{i:04d}", random_min_degree_girth(cfg)


def _batch_row(graph_id: str, item) -> dict:
    if isinstance(item, GenerationFailure):
        return {"graphId": graph_id, "status": "generation-failure"}
    g = item
    prof = eccentricity_profile(g)
    gi = girth(g)
    results = {r.bound.value: r for r in evaluate_all(g)}
    cert_ok = ""
    if gi is not None and g.min_degree() >= 3:
        cert = (certify_odd if gi % 2 else certify_even)(g)
        cert_ok = "true" if cert.all_steps_hold else "false"
    return {
        "graphId": graph_id,
        "status": "ok",
        "n": g.n,
        "minDeg": g.min_degree(),
        "maxDeg": g.max_degree(),
        "girth": _girth_str(gi),
        "avec": str(prof.avec),
        "avecDecimal": _dec(prof.avec),
        "bounds": results,
        "certificateOk": cert_ok,
    }


def _batch_csv(rows) -> str:
    cols = ["graphId", "status", "n", "minDeg", "maxDeg", "girth", "avec", "avecDecimal"]
    bound_cols = []
    for bid in UPPER_BOUND_IDS:
        bound_cols.extend([bid.value, f"{bid.value}_ok"])
    header = ",".join(cols + bound_cols + ["certificateOk"])
    lines = [header]
    for row in rows:
        cells = [str(row.get(c, "")) for c in cols]
        bounds = row.get("bounds", {})
        for bid in UPPER_BOUND_IDS:
            r = bounds.get(bid.value)
            if r is None or not r.applicable:
                cells.extend(["", ""])
            else:
                cells.extend([str(r.value), "true" if r.satisfied else "false"])
        cells.append(str(row.get("certificateOk", "")))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def cmd_batch(args) -> int:
    sources = list(_batch_sources(args))
    workers = _threads()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda s: _batch_row(*s), sources))
    else:
        rows = [_batch_row(gid, item) for gid, item in sources]
    rows.sort(key=lambda r: r["graphId"])
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    report = out_dir / "report.csv"
    report.write_text(_batch_csv(rows))

    failures = sum(1 for r in rows if r["status"] == "generation-failure")
    violations = 0
    for r in rows:
        for br in r.get("bounds", {}).values():
            if br.applicable and br.satisfied is False:
                violations += 1
        if r.get("certificateOk") == "false":
            violations += 1
    print(f"{len(rows)} rows -> {report}  "
          f"(violations={violations}, generationFailures={failures})")
    if violations:
        return EXIT_VIOLATION
    if failures and args.strict:
        return EXIT_VIOLATION
    return EXIT_OK


# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    p = _Parser(prog="eccb", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="eccentricity profile, girth, degrees")
    c.add_argument("input", help="edge-list file, or - for stdin")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_compute)

    b = sub.add_parser("bound", help="evaluate every applicable upper bound")
    b.add_argument("input")
    b.add_argument("--json", action="store_true")
    b.add_argument("--only", help="restrict to one bound id, e.g. Eq1")
    b.set_defaults(func=cmd_bound)

    ce = sub.add_parser("certify", help="run and verify the proof pipeline")
    ce.add_argument("input")
    ce.add_argument("--json", action="store_true")
    ce.add_argument("--maxdeg", action="store_true",
                    help="certify the max-degree-aware variant")
    ce.add_argument("--out", default=".", help="directory for the certificate JSON")
    ce.set_defaults(func=cmd_certify)

    ge = sub.add_parser("generate", help="random graph with degree/girth floors")
    ge.add_argument("--n", type=int, required=True)
    ge.add_argument("--delta", type=int, required=True)
    ge.add_argument("--g", type=int, required=True)
    ge.add_argument("--seed", type=int, default=0)
    ge.add_argument("--out", default=".")
    ge.add_argument("--strict", action="store_true",
                    help="exit nonzero when generation fails")
    ge.set_defaults(func=cmd_generate)

    ch = sub.add_parser("chain", help="chained extremal construction")
    ch.add_argument("--delta", type=int, required=True)
    ch.add_argument("--g", type=int, required=True)
    ch.add_argument("--k", type=int, required=True)
    ch.add_argument("--out", default=".")
    ch.add_argument("--report", action="store_true",
                    help="also write the sharpness CSV for k'=1..k")
    ch.set_defaults(func=cmd_chain)

    ba = sub.add_parser("batch", help="bound + certificate sweep with CSV report")
    ba.add_argument("--dir", help="directory of .el files to sweep")
    ba.add_argument("--n", type=int)
    ba.add_argument("--delta", type=int)
    ba.add_argument("--g", type=int)
    ba.add_argument("--count", type=int)
    ba.add_argument("--seed", type=int, default=0)
    ba.add_argument("--out", default=".")
    ba.add_argument("--strict", action="store_true")
    ba.set_defaults(func=cmd_batch)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "batch" and not args.dir:
        missing = [f for f in ("n", "delta", "g", "count") if getattr(args, f) is None]
        if missing:
            parser.error(f"batch needs --dir or a generator spec; missing: {', '.join(missing)}")
    try:
        return args.func(args)
    except (EdgeListParseError, FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DisconnectedGraphError:
        print("graph is disconnected", file=sys.stderr)
        return EXIT_INPUT
    except NotCertifiableError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INAPPLICABLE
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
