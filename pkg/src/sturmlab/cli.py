"""Command-line interface.

Subcommands: word, factors, matrix, perm, table, volume, integral, signsum,
brange, congruence, selftest.  Slopes are given with --alpha (or --a/--b) in
the expression language of :mod:`sturmlab.irrational`.  Output is exact text;
permutation orders are emitted as decimal strings, never floats.

The refinement budget comes from --budget, else the SturmLAB_BUDGET
environment variable, else the library default.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import farey, matrep, permtool, selftest, sturmian
from .errors import SturmlabError
from .irrational import DEFAULT_BUDGET, parse_slope


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("SturmLAB_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise SturmlabError(f"SturmLAB_BUDGET={env!r} is not an integer") from None
    return DEFAULT_BUDGET


def _slope(args, attr="alpha"):
    return parse_slope(getattr(args, attr), budget=_budget(args))


def _emit_rows(args, out, header, rows, json_obj):
    """Write rows in the requested format; json gets the prepared object."""
    if args.format == "json":
        json.dump(json_obj, out, indent=2)
        out.write("\n")
    elif args.format == "tsv":
        for row in rows:
            out.write("\t".join(str(x) for x in row) + "\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def _open_out(args):
    if args.out:
        return open(args.out, "w", encoding="utf-8")
    return sys.stdout


def _meta(args):
    return {"budget": _budget(args)}


def cmd_word(args, out):
    alpha = _slope(args)
    bits = sturmian.characteristic_prefix(alpha, args.n)
    word = "".join(map(str, bits))
    if args.format == "json":
        json.dump(
            {"alpha": args.alpha, "n": args.n, "word": word, "meta": _meta(args)},
            out,
            indent=2,
        )
        out.write("\n")
    else:
        out.write(word + "\n")


def cmd_factors(args, out):
    alpha = _slope(args)
    fs = sturmian.factor_set(alpha, args.n)
    strings = ["".join(map(str, f)) for f in fs.factors]
    _emit_rows(
        args,
        out,
        ["index", "factor"],
        list(enumerate(strings, start=1)),
        {"alpha": args.alpha, "n": args.n, "factors": strings, "meta": _meta(args)},
    )


def cmd_matrix(args, out):
    alpha = _slope(args)
    m = matrep.m_from_alpha(alpha, args.n)
    rows = [list(r) for r in m.entries]
    _emit_rows(
        args,
        out,
        [f"c{j}" for j in range(1, args.n + 1)],
        rows,
        {"alpha": args.alpha, "n": args.n, "rows": rows, "meta": _meta(args)},
    )


def _perm_payload(alpha_text, pi):
    return {
        "alpha": alpha_text,
        "n": pi.n,
        "perm": list(pi.one_line),
        "cycles": [list(c) for c in pi.cycles()],
        "sign": permtool.sign_direct(pi),
        "order": str(permtool.order(pi)),
    }


def cmd_perm(args, out):
    alpha = _slope(args)
    pi = permtool.pi_direct(alpha, args.n)
    payload = _perm_payload(args.alpha, pi)
    payload["meta"] = _meta(args)
    _emit_rows(
        args,
        out,
        ["n", "perm", "cycles", "sign", "order"],
        [
            [
                pi.n,
                " ".join(map(str, pi.one_line)),
                pi.cycle_string(),
                payload["sign"],
                payload["order"],
            ]
        ],
        payload,
    )


def cmd_table(args, out):
    alpha = _slope(args)
    if not 1 <= args.start <= args.end:
        raise SturmlabError(f"bad range {args.start}..{args.end}")
    rows = []
    for n in range(args.start, args.end + 1):
        pi = permtool.pi_direct(alpha, n)
        rows.append([n, permtool.sign_direct(pi), str(permtool.order(pi))])
    _emit_rows(
        args,
        out,
        ["n", "sign", "order"],
        rows,
        {
            "alpha": args.alpha,
            "rows": [{"n": r[0], "sign": r[1], "order": r[2]} for r in rows],
            "meta": _meta(args),
        },
    )


def cmd_volume(args, out):
    alpha = _slope(args)
    v = matrep.simplex_volume(alpha, args.n)
    _emit_rows(
        args,
        out,
        ["n", "volume"],
        [[args.n, str(v)]],
        {"alpha": args.alpha, "n": args.n, "volume": str(v), "meta": _meta(args)},
    )


def cmd_integral(args, out):
    if not 1 <= args.start <= args.end:
        raise SturmlabError(f"bad range {args.start}..{args.end}")
    rows = []
    jrows = []
    for n in range(args.start, args.end + 1):
        res = farey.exact_integral(n)
        dec = float(res.value)
        ok = 1 if res.coverage == 1 else 0
        if args.format == "tsv":
            rows.append([n, repr(dec)])  # two-column plot data
        else:
            rows.append([n, str(res.value), repr(dec), res.cells, ok])
        jrows.append(
            {
                "n": n,
                "integral": str(res.value),
                "decimal": dec,
                "cells": res.cells,
                "coverage_ok": bool(ok),
            }
        )
    _emit_rows(
        args,
        out,
        ["n", "integral", "decimal", "cells", "coverage_ok"],
        rows,
        {"rows": jrows, "meta": _meta(args)},
    )


def cmd_signsum(args, out):
    alpha = _slope(args)
    total, peak = farey.sign_sum(alpha, args.N)
    _emit_rows(
        args,
        out,
        ["N", "sum", "max_abs"],
        [[args.N, total, peak]],
        {
            "alpha": args.alpha,
            "N": args.N,
            "sum": total,
            "max_abs": peak,
            "meta": {**_meta(args), "floors": alpha.stats["floors"]},
        },
    )


def cmd_brange(args, out):
    alpha = _slope(args)
    k = farey.b_range_search(alpha, args.target, args.kmax)
    _emit_rows(
        args,
        out,
        ["target", "kmax", "k"],
        [[args.target, args.kmax, "none" if k is None else k]],
        {
            "alpha": args.alpha,
            "target": args.target,
            "kmax": args.kmax,
            "k": k,
            "meta": {**_meta(args), "floors": alpha.stats["floors"]},
        },
    )


def cmd_congruence(args, out):
    a = _slope(args, "a")
    b = _slope(args, "b")
    fa = sturmian.factor_set(a, args.n).factors
    fb = sturmian.factor_set(b, args.n).factors
    congruent = farey.congruence_test(a, b, args.n)
    equal = fa == fb
    complement = fa == farey.complement_factors(fb)
    _emit_rows(
        args,
        out,
        ["n", "congruent", "factors_equal", "factors_complement"],
        [[args.n, int(congruent), int(equal), int(complement)]],
        {
            "a": args.a,
            "b": args.b,
            "n": args.n,
            "congruent": congruent,
            "factors_equal": equal,
            "factors_complement": complement,
            "meta": {**_meta(args), "floors": a.stats["floors"] + b.stats["floors"]},
        },
    )


def cmd_selftest(args, out):
    return selftest.run(seed=args.seed or 0, report=lambda s: out.write(s + "\n"))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json", "tsv"], default="csv")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--budget", type=int, help="refinement budget per comparison")
    common.add_argument("--seed", type=int, help="seed for randomized checks")

    p = argparse.ArgumentParser(
        prog="sturmlab",
        description="Exact experiments with fractional-part orderings of irrational multiples",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, helptext, **params):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        for pname, kwargs in params.items():
            sp.add_argument(f"--{pname.rstrip('_')}", **kwargs)
        sp.set_defaults(fn=fn)
        return sp

    add(
        "word",
        cmd_word,
        "prefix of the characteristic word",
        alpha=dict(required=True),
        n=dict(type=int, required=True),
    )
    add(
        "factors",
        cmd_factors,
        "length-n factors in anti-lexicographic order",
        alpha=dict(required=True),
        n=dict(type=int, required=True),
    )
    add(
        "matrix",
        cmd_matrix,
        "matrix of the ordering permutation",
        alpha=dict(required=True),
        n=dict(type=int, required=True),
    )
    add(
        "perm",
        cmd_perm,
        "ordering permutation with cycles, sign and order",
        alpha=dict(required=True),
        n=dict(type=int, required=True),
    )
    tb = add(
        "table",
        cmd_table,
        "sign and order for a range of sizes",
        alpha=dict(required=True),
    )
    tb.add_argument("--from", dest="start", type=int, required=True)
    tb.add_argument("--to", dest="end", type=int, required=True)
    add(
        "volume",
        cmd_volume,
        "exact volume of the factor simplex",
        alpha=dict(required=True),
        n=dict(type=int, required=True),
    )
    ig = add("integral", cmd_integral, "exact integral of the permutation order")
    ig.add_argument("--from", dest="start", type=int, default=1)
    ig.add_argument("--to", dest="end", type=int, required=True)
    add(
        "signsum",
        cmd_signsum,
        "running sum of permutation signs",
        alpha=dict(required=True),
        N=dict(type=int, required=True),
    )
    add(
        "brange",
        cmd_brange,
        "least k with B(k) equal to a target",
        alpha=dict(required=True),
        target=dict(type=int, required=True),
        kmax=dict(type=int, required=True),
    )
    add(
        "congruence",
        cmd_congruence,
        "congruence of two factor simplices",
        a=dict(required=True),
        b=dict(required=True),
        n=dict(type=int, required=True),
    )
    add("selftest", cmd_selftest, "run embedded reference checks")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = _open_out(args)
    try:
        rc = args.fn(args, out)
        return rc or 0
    except SturmlabError as exc:
        code = type(exc).__name__
        print(f"error[{code}]: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error[InvalidArgument]: {exc}", file=sys.stderr)
        return 1
    finally:
        if out is not sys.stdout:
            out.close()


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
