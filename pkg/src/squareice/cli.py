"""Command-line front end.

    squareice counts --model dwbc --sizes 1..6
    squareice partition --model dwbc --size 2 --mode omega6 --eval all=1
    squareice verify --model dwbc --size 3 --mode omega6 --checks theorem-main
    squareice enumerate --model dwbc --size 3 --format text

Exit status: 0 on success, 1 if a check fails, 2 on a configuration error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import verifier as V
from .cyclo import CoeffMode, CycNum
from .ice import (asm_count_oracle, build_dwbc, build_ht_even, build_ht_odd, enumerate_with_codes,
                  format_asm, htasm_count_oracle, state_to_asm)
from .partition import PartitionResult, partition_function, transfer_matrix_partition
from .tangles import NAMED as TANGLES
from .tangles import tangle_graph

MODELS = ("dwbc", "ht-even", "ht-odd", "tangle")
ALL_MODELS = frozenset(MODELS)
HT = frozenset({"ht-even", "ht-odd"})


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# check registry: name -> (models, modes run by default, allowed modes, runner)

GEN, W6 = CoeffMode.GENERIC, CoeffMode.OMEGA6
BOTH = frozenset({GEN, W6})


def _family(model):
    return "even" if model == "ht-even" else "odd"


CHECKS = {
    "spec-identities": (ALL_MODELS, {W6}, BOTH,
                        lambda c: V.check_spec_identities(c.mode, seed=c.seed)),
    "yang-baxter": ({"tangle"}, BOTH, BOTH,
                    lambda c: V.check_yang_baxter(c.mode, "symbolic")
                    if c.mode is GEN else
                    V.check_yang_baxter(c.mode, "random", trials=c.trials, seed=c.seed)),
    "loop-identity": ({"tangle"}, {GEN}, {GEN}, lambda c: V.check_loop_identity()),
    "exchange-loop": ({"tangle"}, {GEN}, {GEN}, lambda c: V.check_exchange_loop(c.size)),
    "half-width": ({"dwbc"}, {GEN}, BOTH, lambda c: V.check_half_width(c.size, c.mode)),
    "partial-symmetry": ({"dwbc"}, {GEN}, BOTH, lambda c: V.check_partial_symmetry(c.size, c.mode)),
    "specialization-dwbc": ({"dwbc"}, {GEN}, {GEN}, lambda c: V.check_specialization_dwbc(c.size)),
    "theorem-main": ({"dwbc"}, {W6}, BOTH,
                     lambda c: V.check_theorem_main(
                         c.size, "auto" if c.mode is W6 else "symbolic",
                         trials=c.trials, seed=c.seed, mode=c.mode)),
    "state-counts": ({"dwbc"}, BOTH, BOTH, lambda c: V.check_state_counts(range(1, c.size + 1))),
    "homogeneous-counts": ({"dwbc", "ht-even", "ht-odd"}, {W6}, {W6},
                           lambda c: V.check_homogeneous_counts(
                               [c.size] if c.model == "dwbc" else [],
                               [c.size] if c.model == "ht-even" else [],
                               [c.size] if c.model == "ht-odd" else [])),
    "oracle-equivalence": ({"dwbc"}, {GEN}, BOTH,
                           lambda c: V.check_oracle_equivalence(c.size, trials=c.trials, seed=c.seed)),
    "calibration": ({"dwbc", "ht-even", "ht-odd"}, {GEN}, {GEN}, lambda c: V.check_calibration()),
    "half-width-ht": (HT, {GEN}, BOTH,
                      lambda c: V.check_half_width_ht(c.size, _family(c.model), c.mode)),
    "pseudo-sym": ({"ht-even"}, {GEN}, {GEN}, lambda c: V.check_pseudo_sym(c.size)),
    "specialization-ht": (HT, {GEN}, {GEN}, lambda c: V.check_specialization_ht(c.size)),
    "theorem-ht": (HT, {W6}, {W6},
                   lambda c: V.check_theorem_ht(c.size, _family(c.model), trials=c.trials,
                                                seed=c.seed)),
    "ht-counts": (HT, BOTH, BOTH,
                  lambda c: V.check_ht_counts(
                      [2 * k for k in range(1, c.size + 1)] if c.model == "ht-even" else [],
                      [2 * k + 1 for k in range(0, c.size + 1)] if c.model == "ht-odd" else [])),
}


def plan_checks(model, mode, names=None):
    """Names of the checks to run; explicit names are validated first."""
    mode = CoeffMode.parse(mode)
    if names is None:
        return [n for n, (models, default, _, _) in CHECKS.items()
                if model in models and mode in default]
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ConfigError(f"unknown check(s): {', '.join(unknown)}; known: {', '.join(CHECKS)}")
    for n in names:
        models, _, allowed, _ = CHECKS[n]
        if model not in models:
            raise ConfigError(f"check {n!r} does not apply to model {model!r}")
        if mode not in allowed:
            raise ConfigError(f"check {n!r} cannot run in mode {mode.value!r}")
    return list(names)


# ---------------------------------------------------------------------------
# parsing helpers

_NUM = r"\d+(?:/\d+)?"
_CYC_RE = re.compile(rf"^(?P<p>[+-]?{_NUM})?(?:(?P<sign>[+-])?(?P<q>{_NUM})?\*?a)?$")


def parse_cyc(text):
    """``p[/q][+r[/s]a]``, e.g. ``2``, ``-1/2``, ``1+a``, ``3-2/5a``, ``a``."""
    s = text.strip().replace(" ", "")
    m = _CYC_RE.match(s)
    if not s or not m or (m.group("p") is None and "a" not in s):
        raise ValueError(f"not a number of the form p[/q][+r[/s]a]: {text!r}")
    try:
        p = Fraction(m.group("p")) if m.group("p") else Fraction(0)
        q = Fraction(m.group("q")) if m.group("q") else Fraction(1)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None
    if not s.endswith("a"):
        return CycNum(p, 0)
    if m.group("sign") == "-":
        q = -q
    elif m.group("sign") is None and m.group("p") is not None:
        raise ValueError(f"missing sign before the a-component: {text!r}")
    return CycNum(p, q)


def parse_eval(text, variables, allow_a=False):
    """Comma-separated ``name=value`` pairs; ``all=value`` sets every variable.

    With ``allow_a`` (generic-a mode) the indeterminate must be given as
    ``a=...``; ``all`` does not cover it.  Errors are collected per variable
    and raised together.
    """
    point, errors, default = {}, [], None
    for item in filter(None, (part.strip() for part in text.split(","))):
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep:
            errors.append(f"{item!r}: expected name=value")
            continue
        try:
            num = parse_cyc(value)
        except ValueError as exc:
            errors.append(f"{name}: {exc}")
            continue
        if num.is_zero():
            errors.append(f"{name}: value must be nonzero")
            continue
        if name == "all":
            default = num
        elif name == "a" and allow_a:
            point["a"] = num
        elif name == "a":
            errors.append("a: fixed to exp(i*pi/3) in omega6 mode")
        elif name not in variables:
            errors.append(f"{name}: not a variable of this model ({', '.join(variables)})")
        else:
            point[name] = num
    for v in variables:
        if v not in point:
            if default is None:
                errors.append(f"{v}: no value given")
            else:
                point[v] = default
    if allow_a and "a" not in point:
        errors.append("a: generic-a mode needs a value for a")
    if errors:
        raise ConfigError("invalid --eval: " + "; ".join(errors))
    return point


def parse_sizes(text):
    """``"1..5"``, ``"3"`` or ``"1,2,4"``."""
    try:
        if ".." in text:
            lo, hi = (int(t) for t in text.split(".."))
            sizes = list(range(lo, hi + 1))
        else:
            sizes = [int(t) for t in text.split(",")]
    except ValueError:
        raise ConfigError(f"bad size list {text!r}") from None
    if not sizes or min(sizes) < 1:
        raise ConfigError(f"sizes must be >= 1, got {text!r}")
    return sizes


def build_model(model, size, tangle="yb-left"):
    if model == "dwbc":
        return build_dwbc(size)
    if model == "ht-even":
        return build_ht_even(size)
    if model == "ht-odd":
        return build_ht_odd(size)
    if tangle not in TANGLES:
        raise ConfigError(f"unknown tangle {tangle!r}; known: {', '.join(TANGLES)}")
    return tangle_graph(TANGLES[tangle](size))


def model_variables(graph):
    return sorted({v for vx in graph.vertices for v in vx.param})


# ---------------------------------------------------------------------------
# commands


def cmd_counts(args, out):
    sizes = parse_sizes(args.sizes or (str(args.size) if args.size else "1..5"))
    rows, ok = [], True
    for n in sizes:
        graph = build_model(args.model, n, args.tangle)
        got = sum(1 for _ in enumerate_with_codes(graph))
        if args.model == "dwbc":
            want = asm_count_oracle(n)
        elif args.model == "ht-even":
            want = htasm_count_oracle(2 * n)
        elif args.model == "ht-odd":
            want = htasm_count_oracle(2 * n + 1)
        else:
            want = None
        agree = want is None or got == want
        ok = ok and agree
        rows.append({"n": n, "states": got, "oracle": want, "agree": agree})
    if args.format == "json":
        for row in rows:
            out.write(json.dumps({"model": args.model, **row}) + "\n")
    else:
        out.write(f"{'n':>3} {'states':>10} {'oracle':>10}  agree\n")
        for r in rows:
            oracle = "-" if r["oracle"] is None else r["oracle"]
            out.write(f"{r['n']:>3} {r['states']:>10} {oracle:>10}  {'yes' if r['agree'] else 'NO'}\n")
    return 0 if ok else 1


def cmd_enumerate(args, out):
    graph = build_model(args.model, _need_size(args), args.tangle)
    for state, codes in enumerate_with_codes(graph):
        asm = state_to_asm(graph, state) if args.model == "dwbc" else None
        if args.format == "json":
            obj = state.to_json(graph)
            if asm is not None:
                obj["asm"] = asm
            else:
                obj["orientations"] = list(codes)
            out.write(json.dumps(obj) + "\n")
        else:
            out.write((format_asm(asm) if asm is not None else " ".join(codes)) + "\n\n")
    return 0


def cmd_partition(args, out):
    mode = CoeffMode.parse(args.mode)
    size = _need_size(args)
    graph = build_model(args.model, size, args.tangle)
    if args.eval:
        point = parse_eval(args.eval, model_variables(graph), allow_a=mode is GEN)
        if mode is W6:
            res = partition_function(graph, W6, point=point)
        else:
            res = partition_function(graph, GEN)
            res = PartitionResult(
                res.value.evaluate(point), res.state_count,
                None if res.split is None else
                {k: v.evaluate(point) for k, v in res.split.items()})
        obj = {"model": args.model, "n": size, "mode": mode.value,
               "value": res.value.to_json(), "state_count": res.state_count}
        if res.split is not None:
            obj["split"] = {k: v.to_json() for k, v in res.split.items()}
        text = f"Z = {res.value}\nstates = {res.state_count}"
    else:
        res = partition_function(graph, mode)
        if args.model == "dwbc" and res.value != transfer_matrix_partition(graph, mode):
            raise AssertionError("transfer matrix disagrees with enumeration")
        obj = res.to_json(args.model, size, mode)
        text = f"Z = {res.value}\nstates = {res.state_count}"
        if res.split is not None:
            text += "".join(f"\nZ[{k}] = {v}" for k, v in res.split.items())
    out.write((json.dumps(obj) if args.format == "json" else text) + "\n")
    return 0


def cmd_verify(args, out):
    mode = CoeffMode.parse(args.mode)
    names = None
    if args.checks:
        names = [n.strip() for n in args.checks.split(",") if n.strip()]
    names = plan_checks(args.model, mode, names)
    config = argparse.Namespace(model=args.model, size=_need_size(args), mode=mode,
                                trials=args.trials, seed=args.seed)
    failed = False
    for name in names:
        report = CHECKS[name][3](config)
        failed = failed or not report.passed
        if args.format == "json":
            out.write(json.dumps(report.to_json(timing=args.timing)) + "\n")
        else:
            line = report.summary()
            if args.timing:
                line += f"  ({report.elapsed:.2f}s)"
            out.write(line + "\n")
        out.flush()
    return 1 if failed else 0


def _need_size(args):
    if args.size is None:
        if args.model == "tangle":
            return 1
        raise ConfigError("--size is required")
    return args.size


# ---------------------------------------------------------------------------


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="squareice",
        description="Exact partition functions of square-ice models and checks of their identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", choices=MODELS, default="dwbc")
    common.add_argument("--size", type=_positive,
                        help="dwbc: n x n grid; ht-even: order 2n; ht-odd: order 2n+1; "
                             "tangle: width of row-pair tangles")
    common.add_argument("--mode", default="generic-a", choices=("generic-a", "omega6"),
                        help="coefficient ring: a indeterminate, or a = exp(i*pi/3)")
    common.add_argument("--tangle", default="yb-left", help=f"tangle name ({', '.join(TANGLES)})")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("enumerate", parents=[common], help="list ice states (ASMs for dwbc)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("partition", parents=[common], help="partition function")
    p.add_argument("--eval", help="evaluate at name=p[/q][+r[/s]a],...; all=... sets every variable")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("--checks", help=f"comma-separated subset of: {', '.join(CHECKS)}")
    p.add_argument("--trials", type=_positive, default=20, help="random points per transposition")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="include elapsed times in reports")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counts", parents=[common], help="state counts next to oracle counts")
    p.add_argument("--sizes", help='size list, e.g. "1..5" or "1,3"')
    p.set_defaults(func=cmd_counts)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        return args.func(args, out)
    except ConfigError as exc:
        print(f"squareice: error: {exc}", file=sys.stderr)
        return 2
    finally:
        if args.out:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
