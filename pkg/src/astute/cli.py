"""Command-line interface.

Subcommands: factor, count, extremal, verify, export.  Exit codes:
0 success, 2 invalid flags, 3 budget exceeded, 4 counting-method
disagreement, 5 verification failure.  Data goes to stdout, diagnostics
to stderr.  ASTUTE_MAX_NODES overrides the search node budget.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import counting, spectral
from .algebra import u_poly, x_pow_minus_one, poly_gcd_field
from .errors import AstuteError, BudgetExceeded, NotInvertible
from .extremal import SearchBudget, search_extremal, verify_theorem1
from .graph import GraphParams, factor_to_doc, to_dot, value_word, word_str
from .rules import enumerate_factor, parse_rule_spec, pcr, icr, xor_rule

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_DISAGREE = 4
EXIT_VERIFY = 5

THEOREM1_INSTANCES = (
    [(2, n, k) for (n, k) in [(1, 1), (2, 1), (3, 1), (4, 1), (2, 2), (3, 3),
                              (1, 2), (1, 3), (2, 4), (4, 2)]]
    + [(3, n, k) for (n, k) in [(1, 1), (2, 1), (2, 2)]])


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help()
        return EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, NotInvertible) as e:
        print(f"invalid arguments: {e}", file=sys.stderr)
        return EXIT_USAGE
    except AstuteError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="astute",
        description="Factors of de Bruijn-like graphs: enumerate, count, search.")
    sub = parser.add_subparsers(dest="command")

    p_factor = sub.add_parser("factor", help="enumerate the factor of a succession rule")
    _add_instance_flags(p_factor, rule=True)
    p_factor.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p_factor.add_argument("--out", help="write output to this path instead of stdout")
    p_factor.set_defaults(func=cmd_factor)

    p_count = sub.add_parser("count", help="count factor cycles by one or all methods")
    _add_instance_flags(p_count, rule=True)
    p_count.add_argument("--method", default="all",
                         choices=("all", "enum", "burnside", "theorem2", "closed"))
    p_count.set_defaults(func=cmd_count)

    p_ext = sub.add_parser("extremal", help="search for a maximum-cycle factor")
    _add_instance_flags(p_ext, rule=False)
    p_ext.add_argument("--budget-nodes", type=int, default=None)
    p_ext.add_argument("--max-vertices", type=int, default=32)
    p_ext.add_argument("--time-cap", type=float, default=None)
    p_ext.add_argument("--workers", type=int, default=1)
    p_ext.add_argument("--emit-dot", metavar="PATH")
    p_ext.add_argument("--emit-json", metavar="PATH")
    p_ext.set_defaults(func=cmd_extremal)

    p_verify = sub.add_parser("verify", help="run the verification suites")
    p_verify.add_argument("--suite", default="all",
                          choices=("lemmas", "theorem1", "counterexample", "all"))
    p_verify.add_argument("--b", type=int, default=None)
    p_verify.add_argument("--n", type=int, default=None)
    p_verify.add_argument("--k", type=int, default=None)
    p_verify.add_argument("--budget-nodes", type=int, default=None)
    p_verify.add_argument("--csv", metavar="PATH",
                          help="dump the per-orbit transform table for the "
                               "--b/--n/--k instance")
    p_verify.set_defaults(func=cmd_verify)

    p_export = sub.add_parser("export", help="DOT rendering of the graph")
    _add_instance_flags(p_export, rule=False)
    p_export.add_argument("--rule", help="highlight this rule's factor")
    p_export.add_argument("--color", default="magenta")
    p_export.add_argument("--out", help="write output to this path instead of stdout")
    p_export.set_defaults(func=cmd_export)

    return parser


def _add_instance_flags(p: argparse.ArgumentParser, rule: bool):
    p.add_argument("--b", type=int, required=True, help="alphabet size (>= 2)")
    p.add_argument("--n", type=int, required=True, help="word length (>= 1)")
    p.add_argument("--k", type=int, default=1, help="phase count (default 1)")
    if rule:
        p.add_argument("--rule", required=True,
                       help="pcr | icr | xor | affine:c;l0,l1,...,ln")


def _params(args) -> GraphParams:
    return GraphParams(args.b, args.n, args.k)


def _search_budget(args) -> SearchBudget:
    nodes = args.budget_nodes
    if nodes is None:
        nodes = int(os.environ.get("ASTUTE_MAX_NODES", 10 ** 8))
    return SearchBudget(max_vertices=getattr(args, "max_vertices", 32),
                        max_nodes=nodes,
                        time_cap=getattr(args, "time_cap", None))


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_factor(args) -> int:
    p = _params(args)
    rule = parse_rule_spec(args.rule, args.n, args.b)
    factor = enumerate_factor(rule, args.k)
    if args.format == "text":
        lines = [f"factor of G(n={p.n}, k={p.k}) over b={p.b} by rule {rule.spec()}: "
                 f"{len(factor.cycles)} cycles"]
        for cyc in factor.cycles:
            lines.append("  " + " -> ".join(
                f"{word_str(v.word)}@{v.phase}" for v in cyc.vertices))
        _emit("\n".join(lines) + "\n", args.out)
    elif args.format == "json":
        doc = factor_to_doc(factor, extra={"rule": rule.spec()})
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        _emit(to_dot(p, factor, color="magenta"), args.out)
    return EXIT_OK


def cmd_count(args) -> int:
    rule = parse_rule_spec(args.rule, args.n, args.b)
    wanted = args.method
    reports = []
    if wanted in ("all", "enum"):
        reports.append(counting.count_enumeration(rule, args.k))
    if wanted in ("all", "burnside"):
        reports.append(counting.count_burnside_direct(rule, args.k))
    if wanted in ("all", "theorem2"):
        reports.append(counting.count_theorem2_rule(rule, args.k))
    if wanted in ("all", "closed"):
        closed = counting.closed_form_for(rule, args.k)
        if closed is not None:
            reports.append(closed)
        elif wanted == "closed":
            raise ValueError(f"no closed form for rule {rule.spec()!r}")

    width = max(len(r.method) for r in reports)
    for r in reports:
        notes = ""
        if r.witnesses:
            notes = "  " + " ".join(f"{k}={_fmt_witness(v)}"
                                    for k, v in r.witnesses.items())
        print(f"{r.method:<{width}}  {r.value}{notes}")
    values = {r.value for r in reports}
    if wanted == "all" and len(values) != 1:
        print("counting methods disagree: "
              + ", ".join(f"{r.method}={r.value}" for r in reports), file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def _fmt_witness(v) -> str:
    if isinstance(v, list):
        return ";".join("/".join(str(x) for x in t) for t in v)
    return str(v)


def cmd_extremal(args) -> int:
    p = _params(args)
    budget = _search_budget(args)
    result = search_extremal(p, budget, workers=args.workers)
    doc = factor_to_doc(result.certificate, optimal=result.optimal,
                        extra={"nodes": result.nodes_explored})
    print(json.dumps(doc, indent=2))
    if args.emit_json:
        with open(args.emit_json, "w") as fh:
            json.dump(doc, fh, indent=2)
    if args.emit_dot:
        with open(args.emit_dot, "w") as fh:
            fh.write(to_dot(p, result.certificate, color="blue"))
    return EXIT_OK if result.optimal else EXIT_BUDGET


def cmd_export(args) -> int:
    p = _params(args)
    factor = None
    if args.rule:
        factor = enumerate_factor(parse_rule_spec(args.rule, args.n, args.b), args.k)
    _emit(to_dot(p, factor, color=args.color), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification suites


def cmd_verify(args) -> int:
    if args.csv and not (args.b and args.n and args.k):
        raise ValueError("--csv needs an explicit --b/--n/--k instance")
    checks: list[dict] = []
    if args.suite in ("lemmas", "all"):
        checks += _suite_lemmas()
    if args.suite in ("theorem1", "all"):
        checks += _suite_theorem1(args)
    if args.suite in ("counterexample", "all"):
        checks += _suite_counterexample(args)
    if args.csv:
        _write_transform_csv(args.csv, GraphParams(args.b, args.n, args.k))
    ok = all(c["pass"] for c in checks)
    report = {"schema": "astute/1", "suite": args.suite, "checks": checks, "pass": ok}
    print(json.dumps(report, indent=2))
    if not ok:
        failed = [c["name"] for c in checks if not c["pass"]]
        print("failed checks: " + ", ".join(failed), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _check(name: str, ok: bool, detail: str = "") -> dict:
    out = {"name": name, "pass": bool(ok)}
    if detail:
        out["detail"] = detail
    return out


def _suite_lemmas() -> list[dict]:
    from math import gcd

    checks = []
    # GCD identities for the repunit / X^m - 1 families
    ok_u = ok_x = ok_mixed = True
    for b in (2, 3, 5):
        for n in range(1, 13):
            for m in range(1, 13):
                g = gcd(n, m)
                if poly_gcd_field(u_poly(n, b), u_poly(m, b)) != u_poly(g, b).monic():
                    ok_u = False
                lhs = poly_gcd_field(x_pow_minus_one(n, b), x_pow_minus_one(m, b))
                if lhs != x_pow_minus_one(g, b).monic():
                    ok_x = False
                mixed = poly_gcd_field(u_poly(n, b), x_pow_minus_one(m, b))
                want = (x_pow_minus_one(g, b) if (n // g) % b == 0 else u_poly(g, b))
                if mixed != want.monic():
                    ok_mixed = False
    checks.append(_check("gcd-repunit", ok_u, "n,m<=12 b in 2,3,5"))
    checks.append(_check("gcd-xn-minus-one", ok_x, "n,m<=12 b in 2,3,5"))
    checks.append(_check("gcd-mixed", ok_mixed, "both branches"))

    # transform scales by a root of unity under rotation
    ok_rot = True
    for b in (2, 3, 4):
        for n in range(1, 9):
            for value in range(b ** n):
                word = value_word(value, n, b)
                if not spectral.rotation_identity_check(word, n):
                    ok_rot = False
    checks.append(_check("rotation-scaling", ok_rot, "all words b<=4 n<=8"))

    # transforms along any rule cycle sum to zero (n >= 2: the identity
    # rests on the vanishing power sum of a root of unity of order n)
    ok_sum = True
    for b in (2, 3):
        for n in range(2, 5):
            rules = [pcr(n, b), icr(n, b)] + ([xor_rule(n)] if b == 2 else [])
            for rule in rules:
                for k in (1, 2, 3, 6):
                    f = enumerate_factor(rule, k)
                    if not all(spectral.cycle_sum_check(c) for c in f.cycles):
                        ok_sum = False
    checks.append(_check("cycle-sum-zero", ok_sum, "rule factors b<=3 2<=n<=4 k in 1,2,3,6"))

    # arc gap: C(s) - C(rot^-1(t)) real, zero iff s = rot^-1(t)
    ok_arc = True
    for b in (2, 3):
        for n in range(1, 7):
            for value in range(b ** n):
                word = value_word(value, n, b)
                for x in range(b):
                    t = word[1:] + (x,)
                    ok_arc &= _arc_gap_ok(word, t, n)
    checks.append(_check("arc-difference-real", ok_arc, "all arcs b<=3 n<=6"))

    # brute-force fixed counts match the ideal-quotient prediction
    from .ideals import ideal_quotient_size, order_of_x, smallest_cycle_length
    from .rules import fix_count_bruteforce
    ok_fix = True
    for b in (2, 3):
        for n in range(1, 5):
            rules = [pcr(n, b), icr(n, b)] + ([xor_rule(n)] if b == 2 else [])
            for rule in rules:
                lam = rule.char_poly()
                ell = smallest_cycle_length(lam, rule.c, 1)
                omega = order_of_x(lam)
                for i in range(1, 25):
                    want = (ideal_quotient_size(lam, gcd(i, omega))
                            if i % ell == 0 else 0)
                    if fix_count_bruteforce(rule, i) != want:
                        ok_fix = False
    checks.append(_check("fix-count-ideal", ok_fix, "b<=3 n<=4 i<=24"))
    return checks


def _arc_gap_ok(s: tuple[int, ...], t: tuple[int, ...], n: int) -> bool:
    r_inv_t = spectral.rotate_right(t)
    diff = [a - c for a, c in zip(s, r_inv_t)]
    if not spectral.is_real_exact(diff, n):
        return False
    is_zero = spectral.evaluates_to_zero_exact(diff, n)
    return is_zero == (s == r_inv_t)


def _suite_theorem1(args) -> list[dict]:
    checks = []
    instances = THEOREM1_INSTANCES
    # explicit flags narrow the sweep; with --csv they describe the dump instead
    if args.b and args.n and args.k and not args.csv:
        instances = [(args.b, args.n, args.k)]
    budget = _search_budget(args)
    for (b, n, k) in instances:
        report = verify_theorem1(GraphParams(b, n, k), budget)
        checks.append(_check(
            f"pcr-extremal b={b} n={n} k={k}", report.ok,
            f"search={report.search_count} formula={report.formula_count}"))
    return checks


def _suite_counterexample(args) -> list[dict]:
    p = GraphParams(2, 3, 2)
    pcr_count = len(enumerate_factor(pcr(3, 2), 2).cycles)
    result = search_extremal(p, _search_budget(args))
    ok = (pcr_count == 4 and result.optimal and result.best_count == 6)
    return [_check("counterexample-g32", ok,
                   f"rotation-rule={pcr_count} extremal={result.best_count}")]


def _write_transform_csv(path: str, p: GraphParams):
    rows = spectral.orbit_transform_table(p)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["orbit", "word", "phase", "re", "im", "distinguished"])
        for r in rows:
            w.writerow([r["orbit"], word_str(r["word"]), r["phase"],
                        f"{r['re']:.12g}", f"{r['im']:.12g}",
                        int(r["distinguished"])])


if __name__ == "__main__":
    sys.exit(main())
