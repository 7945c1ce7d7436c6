"""Command line front end: ``schubert-lc <command> [options]``.

Exit codes: 0 success, 2 usage error, 3 oracle budget exceeded, 4 a
verification found a mismatch.
"""

import argparse
import json
import sys

from . import cousin, det
from .dyck import enumerate_patterns
from .errors import BudgetExceeded, SchubertError
from .verma import highest_weight, verma_weight_filtration
from .young import GrassContext, Partition, parse_partition, render, subpartitions

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_MISMATCH = 0, 2, 3, 4


class UsageError(Exception):
    pass


def parse_budget(text):
    if text is None:
        return cousin.OracleBudget.from_env()
    try:
        parts = [int(x) for x in text.split(",")]
        return cousin.OracleBudget(*parts[:2])
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad --oracle-budget {text!r}: {exc}") from None


def _context(args):
    if args.k is None or args.n is None:
        raise UsageError("--k and --n are required")
    try:
        return GrassContext(args.k, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _partition(args, ctx, required=True):
    if args.partition is None:
        if required:
            raise UsageError("--partition is required")
        return None
    return ctx.check(parse_partition(args.partition))


def _ctx_json(ctx):
    return {"k": ctx.k, "n": ctx.n}


def _fmt_label(c):
    return f"L{Partition(c)}"


# -- commands ----------------------------------------------------------------


def cmd_patterns(args, out):
    ctx = _context(args)
    a = _partition(args, ctx)
    pats = enumerate_patterns(a, args.min_path_len, args.bullets)
    rows = []
    for D in pats:
        q = D.bullet_count - a.size + ctx.dim
        p = ctx.dim + q + D.r
        if args.degree is not None and q != args.degree:
            continue
        if args.weight is not None and p != args.weight:
            continue
        rows.append((D, q, p))
    if args.format == "json":
        items = [dict(D.to_json(ctx), q=q, p=p) for D, q, p in rows]
        _dump(out, {"context": _ctx_json(ctx), "partition": list(a), "count": len(items), "patterns": items})
        return EXIT_OK
    out.write(f"{len(rows)} pattern(s) in {a}\n")
    for idx, (D, q, p) in enumerate(rows, 1):
        head = f"[{idx}] q={q} p={p} quotient={D.quotient} paths={len(D.paths)} bullets={D.bullet_count}"
        out.write(head + "\n")
        if args.format == "diagram":
            overlays = [(D.path_boxes, "path"), (D.bullets, "bullet")]
            out.write(render(a, overlays, ascii=args.ascii) + "\n\n")
    return EXIT_OK


def _module_table(module, out, indent=""):
    for f in module.factors():
        mult = f" x{f.multiplicity}" if f.multiplicity > 1 else ""
        out.write(f"{indent}p={f.weight:<4} {_fmt_label(f.label)}{mult}  twist={f.tate_twist}\n")


def cmd_verma(args, out):
    ctx = _context(args)
    a = _partition(args, ctx)
    module = verma_weight_filtration(ctx, a, dual=args.dual)
    if args.weight is not None:
        module.layers = {p: c for p, c in module.layers.items() if p == args.weight}
    if args.format == "json":
        _dump(out, {"context": _ctx_json(ctx), "highest_weight": str(highest_weight(ctx, a)), "module": module.to_json()})
        return EXIT_OK
    name = "N" if args.dual else "M"
    out.write(f"{name}{a} in Gr({ctx.k},{ctx.n}), highest weight {highest_weight(ctx, a)}\n")
    _module_table(module, out, "  ")
    return EXIT_OK


def _local_cohomology(args, ctx, a):
    if args.oracle:
        return cousin.local_cohomology_oracle(ctx, a, parse_budget(args.oracle_budget), workers=args.workers)
    return cousin.local_cohomology_formula(ctx, a)


def cmd_localcoh(args, out):
    ctx = _context(args)
    a = _partition(args, ctx)
    result = _local_cohomology(args, ctx, a)
    if args.degree is not None:
        result = {q: m for q, m in result.items() if q == args.degree}
    if args.weight is not None:
        for m in result.values():
            m.layers = {p: c for p, c in m.layers.items() if p == args.weight}
        result = {q: m for q, m in result.items() if m.weights()}
    if args.format == "json":
        coh = [{"q": q, "module": m.to_json()} for q, m in result.items()]
        route = "oracle" if args.oracle else "formula"
        _dump(out, {"context": _ctx_json(ctx), "partition": list(a), "route": route, "cohomology": coh})
        return EXIT_OK
    out.write(f"local cohomology of Z{a} in Gr({ctx.k},{ctx.n})\n")
    if not result:
        out.write("  (zero)\n")
    for q, m in result.items():
        out.write(f"H^{q}\n")
        _module_table(m, out, "  ")
    return EXIT_OK


def cmd_gc(args, out):
    ctx = _context(args)
    a = _partition(args, ctx)
    budget = parse_budget(args.oracle_budget)
    terms = cousin.gc_terms(ctx, a)
    pieces = []
    for p, c in cousin.graded_basis(ctx, a):
        if args.weight is not None and p != args.weight:
            continue
        cx = cousin.build_graded_complex(ctx, a, p, c, budget)
        pieces.append((p, c, cx.dims(), cx.ranks(), cx.cohomology()))
    if args.degree is not None:
        d = args.degree
        pieces = [x for x in pieces if d in x[2]]
    if args.format == "json":
        _dump(
            out,
            {
                "context": _ctx_json(ctx),
                "partition": list(a),
                "terms": [{"j": j, "subpartitions": [list(b) for b in bs]} for j, bs in terms.terms.items()],
                "pieces": [
                    {"p": p, "label": list(c), "dims": _str_keys(dims), "ranks": _str_keys(ranks), "cohomology": _str_keys(coh)}
                    for p, c, dims, ranks, coh in pieces
                ],
            },
        )
        return EXIT_OK
    out.write(f"Cousin complex of Z{a} in Gr({ctx.k},{ctx.n})\n")
    for j, bs in terms.terms.items():
        out.write(f"  GC^{j}: " + " ".join(f"N{b}" for b in bs) + "\n")
    out.write("graded pieces (p, label): dims by degree -> cohomology\n")
    for p, c, dims, _, coh in pieces:
        nonzero = {j: x for j, x in coh.items() if x}
        out.write(f"  p={p:<4} {_fmt_label(c):<14} {dims} -> {nonzero or 0}\n")
    return EXIT_OK


def _str_keys(d):
    return {str(k): v for k, v in sorted(d.items())}


def verify_instance(ctx, a, budget, workers=1):
    formula = cousin.local_cohomology_formula(ctx, a)
    oracle = cousin.local_cohomology_oracle(ctx, a, budget, workers=workers)
    mism = cousin.compare(formula, oracle)

    def status(report):
        return "ok" if report.ok else [repr(x) for x in report.failures]

    return {
        "instance": {"k": ctx.k, "n": ctx.n, "partition": list(a)},
        "formula_vs_oracle": "ok" if not mism else [[q, p, list(c), f, o] for q, p, c, f, o in mism],
        "euler": status(cousin.euler_check(ctx, a, formula)),
        "dsq_zero": status(cousin.dsq_check(ctx, a, budget)),
        "koszul_exactness": status(cousin.koszul_check(ctx, a, budget)),
        "bijection": status(cousin.bijection_check(ctx, a)),
    }


def _all_ok(record):
    return all(v == "ok" for k, v in record.items() if k != "instance")


def cmd_verify(args, out):
    ctx = _context(args)
    budget = parse_budget(args.oracle_budget)
    if args.sweep:
        instances = subpartitions(ctx.rectangle())
        if args.partition is not None:
            raise UsageError("--sweep runs over every partition; drop --partition")
    else:
        instances = [_partition(args, ctx)]
    if ctx.dim > budget.max_dim:
        raise BudgetExceeded(f"Gr({ctx.k},{ctx.n}) has d_X={ctx.dim} > {budget.max_dim}")
    failures = 0
    for idx, a in enumerate(instances):
        if idx < args.start:
            continue
        record = verify_instance(ctx, a, budget, args.workers)
        ok = _all_ok(record)
        failures += not ok
        if args.format == "json":
            out.write(json.dumps(record) + "\n")
        else:
            out.write(f"[{idx}] {a}: {'ok' if ok else 'FAIL'}\n")
            if not ok:
                for key, val in record.items():
                    if key != "instance" and val != "ok":
                        out.write(f"    {key}: {val}\n")
        out.flush()
    if args.format != "json":
        out.write(f"{len(instances) - args.start - failures} passed, {failures} failed\n")
    return EXIT_MISMATCH if failures else EXIT_OK


def cmd_det(args, out):
    try:
        inst = det.DetInstance(args.m, args.n, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    closed = {s: det.det_multiplicity_closed_form(inst, s) for s in range(inst.p + 1)}
    enum = None if args.closed_form_only else det.det_multiplicity_enumerated(inst)
    per_s, bad = [], []
    for s, poly in closed.items():
        row = {"s": s, "label": list(det.stratum_label(inst.m, inst.n, s)), "gen_poly": poly.to_pairs(), "weights_ok": None}
        if enum is not None:
            row["weights_ok"] = enum.weights_ok[s]
            if enum.polys[s] != poly or not enum.weights_ok[s]:
                bad.append(s)
        per_s.append(row)
    match = "skipped" if enum is None else ("ok" if not bad else bad)
    if args.format == "json":
        _dump(out, {"instance": {"m": inst.m, "n": inst.n, "p": inst.p}, "per_s": per_s, "match": match})
    else:
        out.write(f"rank <= {inst.p} in {inst.m}x{inst.n} matrices, Schubert partition {inst.partition}\n")
        for row in per_s:
            poly = closed[row["s"]]
            extra = "" if enum is None else f"  enumerated={enum.polys[row['s']]}  weights_ok={row['weights_ok']}"
            out.write(f"  D_{row['s']} {_fmt_label(row['label'])}: {poly}{extra}\n")
        out.write(f"match: {match}\n")
    return EXIT_MISMATCH if bad else EXIT_OK


def _dump(out, obj):
    out.write(json.dumps(obj, indent=2) + "\n")


# -- parser ------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--partition", help='parts separated by commas, e.g. "5,4,2,2"; "" for the empty partition')
    common.add_argument("--format", choices=["table", "json", "diagram"], default=None)
    common.add_argument("--ascii", action="store_true", help="plain ASCII diagrams")
    common.add_argument("--weight", type=int, help="restrict to one weight p")
    common.add_argument("--degree", type=int, help="restrict to one cohomological degree")
    common.add_argument("--oracle-budget", help="MAX_DIM or MAX_DIM,MAX_BASIS (default from $%s)" % cousin.BUDGET_ENV)
    common.add_argument("--workers", type=int, default=1)

    parser = argparse.ArgumentParser(prog="schubert-lc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("patterns", parents=[common], help="list Dyck patterns")
    p.add_argument("--min-path-len", type=int, default=1)
    p.add_argument("--bullets", type=int, default=None, help="exact bullet count (default: any)")
    p.set_defaults(func=cmd_patterns, default_format="diagram")

    p = sub.add_parser("verma", parents=[common], help="weight layers of a parabolic Verma module")
    p.add_argument("--dual", dest="dual", action="store_true", default=True, help="N(a) (default)")
    p.add_argument("--no-dual", dest="dual", action="store_false", help="M(a)")
    p.set_defaults(func=cmd_verma, default_format="table")

    p = sub.add_parser("localcoh", parents=[common], help="weight-graded local cohomology")
    p.add_argument("--oracle", action="store_true", help="compute by exact ranks instead of patterns")
    p.set_defaults(func=cmd_localcoh, default_format="table")

    p = sub.add_parser("gc", parents=[common], help="Cousin complex terms and graded pieces")
    p.set_defaults(func=cmd_gc, default_format="table")

    p = sub.add_parser("verify", parents=[common], help="formula vs oracle plus structural checks")
    p.add_argument("--sweep", action="store_true", help="every partition of the context")
    p.add_argument("--start", type=int, default=0, help="resume a sweep at this instance index")
    p.set_defaults(func=cmd_verify, default_format="table")

    p = sub.add_parser("det", help="determinantal varieties")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--closed-form-only", action="store_true")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_det, default_format="table")
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.format is None:
        args.format = args.default_format
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        err.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (UsageError, SchubertError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
