"""``fwps`` command line front end.

Reports go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 invalid input, 2 a verification command found a mismatch.
"""

from __future__ import annotations

import argparse
import csv
import enum
import io
import json
import sys
from fractions import Fraction

from fwps import enumeration, sylvester
from fwps.enumeration import EnumerationBudgetExceeded, budget_from_env
from fwps.simplex import (
    DualSimplex,
    LatticeSimplex,
    analyze_simplex,
    check_volume_formula,
    degree_geometric,
    dual_simplex,
    gorenstein_index,
    parse_vertices,
    simplex_from_weights,
    weights_of_simplex,
)
from fwps.uf_partitions import UfPartition, a_of_q, paired_parts, q_of_a
from fwps.weight_systems import WeightSystem, parse_weights

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2


class Mismatch(Exception):
    """A verification command disagreed with the expected value."""


def encode(value):
    """Turn results into JSON-safe data; every number becomes a string."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, WeightSystem):
        return [str(w) for w in value.weights]
    if isinstance(value, UfPartition):
        return {"iota": str(value.iota), "parts": [str(a) for a in value.parts]}
    if isinstance(value, DualSimplex):
        return [[encode(x) for x in u] for u in value.normals]
    if isinstance(value, LatticeSimplex):
        return [[str(x) for x in v] for v in value.vertices]
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if isinstance(value, str):
        return value
    raise TypeError(f"cannot serialize {type(value).__name__}")


def render_plain(value) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, WeightSystem):
        return f"P{value}"
    if isinstance(value, UfPartition):
        return "(" + ",".join(map(str, value.parts)) + ")"
    if isinstance(value, LatticeSimplex):
        return ";".join(",".join(map(str, v)) for v in value.vertices)
    if isinstance(value, DualSimplex):
        return "; ".join("(" + ", ".join(render_plain(x) for x in u) + ")"
                         for u in value.normals)
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(render_plain(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {render_plain(v)}" for k, v in value.items()) + "}"
    return str(value)


# -- command handlers: each returns (results, warnings) and may raise Mismatch


def _weights(args) -> WeightSystem:
    if not args.weights:
        raise ValueError("--weights is required")
    return parse_weights(args.weights)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ValueError(f"--{name.replace('_', '-')} is required")


def cmd_degree(args):
    q = _weights(args)
    lam = args.lambda_ or 1
    return {
        "weights": q,
        "reduced": q.reduce(),
        "factor": q.factor(),
        "index": q.index(),
        "degree": q.degree(lam),
    }, []


def cmd_index(args):
    q = _weights(args)
    return {"weights": q, "index": q.index()}, []


def cmd_reduce(args):
    q = _weights(args)
    return {"weights": q, "factor": q.factor(), "reduced": q.reduce()}, []


def cmd_wf_check(args):
    q = _weights(args)
    return {"weights": q, "reduced": q.is_reduced(),
            "well_formed": q.is_well_formed()}, []


def cmd_ufp_of_ws(args):
    q = _weights(args)
    a = a_of_q(q)
    return {"weights": q, "iota": a.iota, "partition": a,
            "paired": list(paired_parts(q)), "well_formed": a.is_well_formed()}, []


def _parse_parts(args) -> UfPartition:
    if not args.parts:
        raise ValueError("--parts is required")
    try:
        parts = [int(x) for x in args.parts.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise ValueError(f"malformed part list {args.parts!r}") from exc
    if any(a < 1 for a in parts):
        raise ValueError("parts must be positive")
    if args.iota is not None:
        return UfPartition(args.iota, parts)
    total = sum(Fraction(1, a) for a in parts)
    if total.numerator != 1:
        raise ValueError(f"reciprocal sum {total} is not 1/iota for an integer iota")
    return UfPartition(total.denominator, parts)


def cmd_ws_of_ufp(args):
    a = _parse_parts(args)
    q = q_of_a(a)
    return {"partition": a, "factor": a.factor(), "reduced_partition": a.reduce(),
            "weights": q, "well_formed": a.is_well_formed()}, []


def cmd_sylvester(args):
    _need(args, "iota")
    k = args.length or 5
    seq = sylvester.sequence(args.iota)
    results = {"iota": args.iota, "s": seq.s_terms(k),
               "t": [seq.t(j) for j in range(1, k + 1)]}
    if k >= 3:
        results["syl_partition"] = sylvester.syl_partition(args.iota, k)
    return results, []


def cmd_extremal(args):
    _need(args, "iota", "dim")
    q = sylvester.extremal_weights(args.iota, args.dim)
    bound = sylvester.degree_bound(args.iota, args.dim)
    deg = q.degree()
    status = "Matches" if deg == bound else "Mismatch"
    results = {"iota": args.iota, "dim": args.dim, "weights": q,
               "bound": bound, "degree": deg, "status": status}
    if deg != bound:
        raise Mismatch(results)
    return results, []


def cmd_bound(args):
    _need(args, "iota", "dim")
    return {"iota": args.iota, "dim": args.dim,
            "bound": sylvester.degree_bound(args.iota, args.dim),
            "attainers": sylvester.attainers(args.iota, args.dim)}, []


def cmd_enumerate(args):
    _need(args, "iota", "length")
    rep = enumeration.enumerate_partitions(args.iota, args.length, args.budget,
                                           args.workers)
    return {"iota": rep.iota, "length": rep.n, "count": rep.count,
            "partitions": list(rep.partitions), "max_product": rep.max_product,
            "extremizers": list(rep.extremizers), "bound_value": rep.bound_value,
            "bound_status": rep.bound_status}, []


def cmd_verify_sharpness(args):
    _need(args, "iota", "length")
    v = enumeration.verify_sharpness(args.iota, args.length, args.budget, args.workers)
    rep = v.report
    results = {"iota": rep.iota, "length": rep.n, "count": rep.count,
               "max_product": rep.max_product, "bound_value": rep.bound_value,
               "bound_status": rep.bound_status,
               "extremizers": list(rep.extremizers),
               "expected": (list(v.expected_extremizers)
                            if v.expected_extremizers is not None else None),
               "documented_exception": v.exception,
               "status": "ok" if v.ok else "mismatch"}
    warnings = ["documented exception: maximum exceeds the bound"] if v.exception else []
    if not v.ok:
        raise Mismatch(results)
    return results, warnings


def _construct_route(iota, d):
    rows = []
    ok = True
    bound = sylvester.degree_bound(iota, d)
    for q in sylvester.attainers(iota, d):
        p = simplex_from_weights(q)
        dual = dual_simplex(p)
        geo_iota = gorenstein_index(p, dual)
        deg = degree_geometric(p, dual)
        good = (weights_of_simplex(p) == q and geo_iota == iota
                and q.index() == iota and deg == bound)
        ok &= good
        rows.append({"weights": q, "geometric_index": geo_iota,
                     "arithmetic_index": q.index(), "degree": deg, "ok": good})
    return rows, ok


def cmd_verify_bound(args):
    _need(args, "iota", "dim")
    iota, d, mode = args.iota, args.dim, args.mode or "both"
    expected = sylvester.degree_bound(iota, d)
    results = {"iota": iota, "dim": d, "mode": mode, "expected": expected}
    warnings = []
    ok = True
    if mode in ("enumerate", "both"):
        m = enumeration.max_degree_over_partitions(iota, d, args.budget, args.workers)
        results["enumerate"] = {
            "max_degree": m.max_degree, "witnesses": list(m.witnesses),
            "witness_weights": list(m.witness_weights),
            "discarded": list(m.discarded), "ok": m.ok}
        warnings.extend(m.warnings)
        ok &= m.ok
    if mode in ("construct", "both"):
        rows, good = _construct_route(iota, d)
        results["construct"] = {"attainers": rows, "ok": good}
        ok &= good
    if mode == "both":
        agree = (results["enumerate"]["max_degree"]
                 == max(r["degree"] for r in results["construct"]["attainers"]))
        results["routes_agree"] = agree
        ok &= agree
    results["status"] = "ok" if ok else "mismatch"
    if not ok:
        raise Mismatch(results)
    return results, warnings


def cmd_simplex(args):
    q = _weights(args)
    p = simplex_from_weights(q)
    return {"weights": q, "vertices": p}, p.warnings()


def _simplex_input(args) -> LatticeSimplex:
    if args.vertices:
        return parse_vertices(args.vertices)
    if args.weights:
        return simplex_from_weights(parse_weights(args.weights))
    raise ValueError("--vertices (or --weights) is required")


def cmd_analyze_simplex(args):
    p = _simplex_input(args)
    a = analyze_simplex(p)
    return {"vertices": p, "weights": a.weights, "factor": a.factor,
            "iota": a.iota, "degree": a.degree, "partition": a.partition,
            "dual_normals": a.dual, "primitive": p.primitive_vertices()}, list(a.warnings)


def cmd_check_volume_formula(args):
    p = _simplex_input(args)
    c = check_volume_formula(p)
    results = {"vertices": p, "factor": c.factor, "iota": c.iota, "degree": c.degree,
               "partition": c.partition, "lhs": c.lhs, "rhs": c.rhs,
               "status": "ok" if c.holds else "mismatch"}
    if not c.holds:
        raise Mismatch(results)
    return results, p.warnings()


def cmd_lemma44_scan(args):
    max_iota = args.iota or 10
    max_n = args.length or 8
    notable = []
    mismatches = []
    checked = 0
    for iota in range(1, max_iota + 1):
        for n in range(1, max_n + 1):
            for r in range(1, n + 1):
                got = sylvester.check_product_inequality(iota, n, r)
                want = sylvester.expected_inequality_status(iota, n, r)
                checked += 1
                entry = {"iota": iota, "n": n, "r": r, "status": got}
                if got is not sylvester.InequalityStatus.STRICT and r != 1:
                    notable.append(entry)
                if got is not want:
                    mismatches.append(entry)
    results = {"max_iota": max_iota, "max_n": max_n, "checked": checked,
               "non_strict_r_ge_2": notable, "mismatches": mismatches,
               "status": "ok" if not mismatches else "mismatch"}
    if mismatches:
        raise Mismatch(results)
    return results, []


COMMANDS = {
    "degree": cmd_degree,
    "index": cmd_index,
    "reduce": cmd_reduce,
    "wf-check": cmd_wf_check,
    "ufp-of-ws": cmd_ufp_of_ws,
    "ws-of-ufp": cmd_ws_of_ufp,
    "sylvester": cmd_sylvester,
    "extremal": cmd_extremal,
    "bound": cmd_bound,
    "enumerate": cmd_enumerate,
    "verify-sharpness": cmd_verify_sharpness,
    "verify-bound": cmd_verify_bound,
    "simplex": cmd_simplex,
    "analyze-simplex": cmd_analyze_simplex,
    "check-volume-formula": cmd_check_volume_formula,
    "lemma44-scan": cmd_lemma44_scan,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fwps",
        description="Exact invariants and degree bounds of fake weighted projective spaces.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--weights", help="comma separated weights, e.g. 6,4,1,1")
    parser.add_argument("--parts", help="comma separated uf-partition, e.g. 2,3,12,12")
    parser.add_argument("--iota", type=int)
    parser.add_argument("--dim", type=int)
    parser.add_argument("--length", type=int)
    parser.add_argument("--lambda", dest="lambda_", type=int)
    parser.add_argument("--vertices", help='vertices as "x,y;x,y;..."')
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--budget", type=int, help="search node budget (env FWPS_BUDGET)")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--mode", choices=("enumerate", "construct", "both"),
                        help="verify-bound route (default: both)")
    return parser


def make_report(command, args, results, status, warnings) -> dict:
    inputs = {k: getattr(args, k) for k in
              ("weights", "parts", "iota", "dim", "length", "lambda_", "vertices", "mode")
              if getattr(args, k) is not None}
    if "lambda_" in inputs:
        inputs["lambda"] = inputs.pop("lambda_")
    return {"command": command, "inputs": inputs, "results": results,
            "status": status, "warnings": list(warnings)}


def dump_json(report: dict) -> str:
    return json.dumps(encode(report), indent=2) + "\n"


def dump_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    results = report["results"]
    if report["command"] == "enumerate" and "partitions" in results:
        best = set(results["extremizers"])
        writer.writerow(["iota", "length", "parts", "leading_product", "extremizer"])
        for p in results["partitions"]:
            writer.writerow([p.iota, len(p), " ".join(map(str, p.parts)),
                             p.leading_product(), str(p in best).lower()])
        return buf.getvalue()
    writer.writerow(["key", "value"])
    writer.writerow(["command", report["command"]])
    writer.writerow(["status", report["status"]])
    for key, value in results.items():
        if key != "status":
            writer.writerow([key, render_plain(value)])
    for w in report["warnings"]:
        writer.writerow(["warning", w])
    return buf.getvalue()


def dump_text(report: dict) -> str:
    results = report["results"]
    lines = []
    if report["command"] == "bound":
        lines.append(f"{'d':>3} | {'iota':>4} | {'bound on (-K)^d':>20} | attained exactly by")
        lines.append("-" * 60)
        names = ", ".join(f"P{q}" for q in results["attainers"])
        lines.append(f"{results['dim']:>3} | {results['iota']:>4} | "
                     f"{render_plain(results['bound']):>20} | {names}")
    else:
        for key, value in results.items():
            if key != "status":
                lines.append(f"{key}: {render_plain(value)}")
    lines.append(f"status: {report['status']}")
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.budget is None:
            args.budget = budget_from_env()
        results, warnings = COMMANDS[args.command](args)
        status, code = results.get("status", "ok"), EXIT_OK
    except Mismatch as exc:
        results, warnings = exc.args[0], []
        status, code = results.get("status", "mismatch"), EXIT_MISMATCH
        print(f"fwps: {args.command}: verification mismatch", file=sys.stderr)
    except EnumerationBudgetExceeded as exc:
        print(f"fwps: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"fwps: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = make_report(args.command, args, results, status, warnings)
    out = {"json": dump_json, "csv": dump_csv, "text": dump_text}[args.format](report)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
