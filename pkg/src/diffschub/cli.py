"""
Command-line front end.

Exit status: 0 on success, 1 when a ``--verify`` check (or an identity, or
the suite) fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import acceptance, bench, bsops, oracle, product, yops
from .errors import DiffSchubError, InternalInconsistency
from .exact import FormalSum, format_rational
from .opexpr import BASES, evaluate, parse_element, parse_op, print_op
from .perm import parse_perm
from .young import Partition, parse_partition, partitions

CACHE_ENV = "DIFFSCHUB_CACHE"


class UsageError(Exception):
    pass


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _perm(text: str):
    try:
        return parse_perm(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _lines(x: FormalSum) -> list[str]:
    return x.to_lines() or ["0"]


def _diff(got: FormalSum, want: FormalSum) -> list[dict]:
    keys = sorted(set(got.raw()) | set(want.raw()), key=lambda k: k.sort_key())
    return [{"key": str(k), "operator": format_rational(got.coeff(k)), "oracle": format_rational(want.coeff(k))}
            for k in keys if got.coeff(k) != want.coeff(k)]


def _emit(args, text_lines: list[str], obj: dict) -> None:
    if args.json:
        print(json.dumps(obj, indent=1))
    else:
        for line in text_lines:
            print(line)


def _report_mismatch(args, diff: list[dict]) -> None:
    if args.json:
        return
    print("mismatch:")
    for d in diff:
        print(f"  {d['key']}: operator {d['operator']}, oracle {d['oracle']}")


# ---------------------------------------------------------------------------


def cmd_lr(args) -> int:
    got = yops.multiply(args.lam, args.mu)
    lines = [f"{k}: {format_rational(c)}" for k, c in got.items()] or ["0"]
    obj = {"lambda": str(args.lam), "mu": str(args.mu), "expansion": got.to_json_obj("partition")}
    status = 0
    if args.verify:
        n = args.lam.size + args.mu.size
        want = FormalSum((nu, oracle.lr_count(args.lam, args.mu, nu)) for nu in partitions(n))
        diff = _diff(got, want)
        obj["verified"] = not diff
        obj["diff"] = diff
        status = 1 if diff else 0
    _emit(args, lines, obj)
    if status:
        _report_mismatch(args, obj["diff"])
    return status


def cmd_apply(args) -> int:
    try:
        op = parse_op(args.op)
        x = parse_element(args.elem, args.basis)
    except ValueError as e:
        raise UsageError(str(e)) from None
    got = evaluate(op, x, args.basis)
    obj = {"op": print_op(op), "input": x.to_json_obj(args.basis), "result": got.to_json_obj(args.basis)}
    _emit(args, _lines(got), obj)
    return 0


def cmd_mult_ss(args) -> int:
    path = args.cache or os.environ.get(CACHE_ENV)
    cache = product.ProductCache()
    if path and os.path.exists(path):
        product.cache_load(path, cache)
    got = product.schur_times_schubert(args.partition, args.perm, cache)
    obj = {"lambda": str(args.partition), "perm": str(args.perm), "expansion": got.to_json_obj("permutation")}
    lines = _lines(got)
    status = 0
    if args.verify:
        rep = product.verify_product(args.partition, args.perm, got, cache)
        want = oracle.schur_schubert_product(args.partition, args.perm)
        diff = _diff(got, want)
        obj["report"] = rep.to_json_obj()
        obj["oracle_agrees"] = not diff
        obj["diff"] = diff
        lines += [""] + [f"check {line}" for line in rep.lines()]
        lines.append(f"check oracle: {'pass' if not diff else 'FAIL'}")
        status = 0 if rep.passed and not diff else 1
    if path:
        product.cache_save(path, cache)
    _emit(args, lines, obj)
    if obj.get("diff"):
        _report_mismatch(args, obj["diff"])
    return status


def cmd_stanley(args) -> int:
    got = bsops.stanley_coeffs(args.perm)
    obj = {"perm": str(args.perm), "expansion": got.to_json_obj("partition")}
    status = 0
    if args.verify:
        diff = _diff(got, oracle.stanley_schur_expand(args.perm))
        obj["verified"] = not diff
        obj["diff"] = diff
        status = 1 if diff else 0
    _emit(args, _lines(got), obj)
    if status:
        _report_mismatch(args, obj["diff"])
    return status


_IDENTITIES = {"jt-h": yops.jacobi_trudi_h, "jt-e": yops.jacobi_trudi_e, "giambelli": yops.giambelli}


def cmd_identity(args) -> int:
    got = _IDENTITIES[args.which](args.lam)
    ok = got == FormalSum({args.lam: 1})
    obj = {"identity": args.which, "lambda": str(args.lam), "passed": ok, "value": got.to_json_obj("partition")}
    lines = ["pass"] if ok else ["FAIL", *(f"  {line}" for line in _lines(got))]
    _emit(args, lines, obj)
    return 0 if ok else 1


def cmd_suite(args) -> int:
    only = set(args.only) if args.only else None
    results = acceptance.run_suite(args.max_size, only)
    ok = all(r.passed for r in results)
    obj = {"passed": ok, "criteria": [r.to_json_obj() for r in results]}
    _emit(args, [r.line() for r in results] + [f"suite: {'PASS' if ok else 'FAIL'}"], obj)
    return 0 if ok else 1


def cmd_bench(args) -> int:
    rows = bench.bench_lr(args.max_size) if args.which == "lr" else bench.bench_mult_ss(args.max_size)
    if args.csv:
        bench.write_csv(rows, args.csv)
    op, orc = bench.growth(rows)
    lines = [f"{r.size:>3}  {r.left:>8} x {r.right:<12} operator {r.operator_seconds:9.5f}s  "
             f"oracle {r.oracle_seconds:9.5f}s  terms {r.terms:>4}  {'agree' if r.agree else 'DIFFER'}"
             for r in rows]
    lines.append(f"growth: operator x{op:.1f}, oracle x{orc:.1f}")
    obj = {"rows": [r.__dict__ for r in rows], "growth": {"operator": op, "oracle": orc}}
    _emit(args, lines, obj)
    return 0 if all(r.agree for r in rows) else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="diffschub",
        description="Exact xi/nabla operator calculus on Schur functions and back-stable Schubert polynomials.",
        epilog="Operator composition is right to left: 'xi nabla' applies nabla first.",
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, **kw):
        sp = sub.add_parser(name, **kw)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("lr", cmd_lr, help="Littlewood-Richardson expansion of s_lambda s_mu")
    sp.add_argument("lam", type=_partition, metavar="LAMBDA")
    sp.add_argument("mu", type=_partition, metavar="MU")
    sp.add_argument("--verify", action="store_true", help="compare with LR tableau counts")

    sp = add("apply", cmd_apply, help="apply an operator expression to an element")
    sp.add_argument("--basis", choices=BASES, default="partition")
    sp.add_argument("--op", required=True, help="e.g. 'xi nabla', '[xi,nabla]', '1/2 * (xi xi + rho(2))'")
    sp.add_argument("--elem", required=True, help="e.g. '1*4,3,1 + 2*2,1' or '2,0,1@0'")

    sp = add("mult-ss", cmd_mult_ss, help="Schur times back-stable Schubert product")
    sp.add_argument("--partition", type=_partition, required=True)
    sp.add_argument("--perm", type=_perm, required=True, help="one-line word on a window, 'c1,...,cn@a'")
    sp.add_argument("--verify", action="store_true", help="run the product checks and the polynomial oracle")
    sp.add_argument("--cache", help=f"JSON cache file (default: ${CACHE_ENV})")

    sp = add("stanley", cmd_stanley, help="Schur expansion of a Stanley symmetric function")
    sp.add_argument("--perm", type=_perm, required=True)
    sp.add_argument("--verify", action="store_true", help="compare with the compatible-sequence oracle")

    sp = add("identity", cmd_identity, help="check a determinantal identity")
    sp.add_argument("which", choices=sorted(_IDENTITIES))
    sp.add_argument("lam", type=_partition, metavar="LAMBDA")

    sp = add("suite", cmd_suite, help="run the acceptance battery")
    sp.add_argument("--max-size", type=int, default=None, help="cap enumeration sizes for a quick run")
    sp.add_argument("--only", type=int, nargs="+", metavar="N", help="run only these criteria")

    sp = add("bench", cmd_bench, help="time operator recursions against the oracles")
    sp.add_argument("which", choices=["lr", "mult-ss"])
    sp.add_argument("--max-size", type=int, default=7)
    sp.add_argument("--csv", help="write the timing table here")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalInconsistency:
        raise
    except (UsageError, DiffSchubError, ValueError) as e:
        print(f"diffschub {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
