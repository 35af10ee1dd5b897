"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 internal disagreement between
routes (a bug). Errors are reported on stderr as a JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .checks import run_checks
from .companions import bgg_outline, companion_table
from .errors import EngineError, RouteDisagreement
from .modular import VirtualSum, enumerate_serre_weights, jh_semisimplify
from .predictor import lift_recipes, predict, table_parameters
from .tame import type_from_exponents, type_from_modular_weight, type_from_weight
from .weights import Weight, spin_cochar


class UsageError(Exception):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ints(text: str, n: int, what: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"{what}: expected {n} comma-separated integers, got {text!r}") from None
    if len(vals) != n:
        raise UsageError(f"{what}: expected {n} comma-separated integers, got {text!r}")
    return vals


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def _need_p(args) -> int:
    if args.p is None:
        raise UsageError("--p is required")
    if not _is_prime(args.p):
        raise UsageError(f"--p must be a prime, got {args.p}")
    return args.p


def _weight(text: str, what: str) -> Weight:
    a, b, c = _ints(text, 3, what)
    try:
        return Weight(a, b, c)
    except ValueError as exc:
        raise UsageError(f"{what}: {exc}") from None


def _type(args):
    p = _need_p(args)
    given = [f for f in ("mu", "diag", "weight") if getattr(args, f, None) is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --mu, --diag, --weight")
    if args.mu is not None:
        return type_from_weight(_weight(args.mu, "--mu"), p)
    if args.diag is not None:
        return type_from_exponents(_ints(args.diag, 4, "--diag"), p)
    k, ell = _ints(args.weight, 2, "--weight")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return type_from_modular_weight(k, ell, p)


def _fmt(w: Weight) -> str:
    return f"({w.a},{w.b};{w.c})"


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


# -- commands -----------------------------------------------------------------


def cmd_predict(args):
    t = _type(args)
    weights = predict(t)
    recipes = lift_recipes(t) if table_parameters(t) else []
    if args.format == "json":
        return {
            "p": t.p,
            "mu": t.mu.to_list(),
            "weights": [w.to_json() for w in weights],
            "recipes": [r.to_json() for r in recipes],
        }
    head = f"p={t.p}  mu={_fmt(t.mu)}  inertia exponents {spin_cochar(t.mu)}"
    rows = [["alcove", "provenance", "from", "lambda", "lambda+rho"]]
    for w in weights:
        lam = w.weight.lam
        rows.append([w.alcove.label, w.provenance, f"C{w.source_alcove}", _fmt(lam), _fmt(lam.shifted())])
    n_direct = sum(w.provenance == "direct" for w in weights)
    tail = f"{len(weights)} weights ({n_direct} direct, {len(weights) - n_direct} transported)"
    return "\n".join([head, _table(rows), tail])


def cmd_lifts(args):
    t = _type(args)
    recipes = lift_recipes(t)
    if args.format == "json":
        return {"p": t.p, "mu": t.mu.to_list(), "recipes": [r.to_json() for r in recipes]}
    rows = [["row", "side", "shape", "HT weights", "units", "mu"]]
    for r in recipes:
        rows.append([r.row, r.side, r.shape, str(r.ht_weights), ",".join(r.unit_assignment), _fmt(r.mu_row)])
    return _table(rows)


def cmd_companions(args):
    p = _need_p(args)
    if args.weight is None:
        raise UsageError("--weight k,ell is required")
    k, ell = _ints(args.weight, 2, "--weight")
    recs = companion_table(k, ell, p)
    if args.format == "json":
        return {"p": p, "k": k, "ell": ell, "companions": [r.to_json() for r in recs]}
    rows = [["case", "twist", "conj", "(k',l')", "lambda'", "lambda'+rho", "alcove", "condition", "type"]]
    for r in recs:
        cond = r.alcove_condition + ("" if r.condition_holds else " (fails)")
        rows.append([
            r.case_id, str(r.twist_exp), r.conjugator.word, f"({r.k_prime},{r.ell_prime})",
            _fmt(r.lambda_prime), _fmt(r.lambda_prime.shifted()), r.alcove.label, cond, r.automorphic_type,
        ])
    return _table(rows)


def cmd_bgg(args):
    if args.weight is None:
        raise UsageError("--weight k,ell is required")
    k, ell = _ints(args.weight, 2, "--weight")
    out = bgg_outline(k, ell)
    if args.format == "json":
        return out.to_json()
    lines = [" -> ".join(out.labels()), f"degrees {out.degrees}", f"Hodge jumps {out.fil_jumps}"]
    for j, (h, s) in out.graded.items():
        lines.append(f"  gr^{j} = H^{h}({s})")
    lines.append(f"last differential has degree {out.differential_degrees[-1]}")
    return "\n".join(lines)


def cmd_decompose(args):
    p = _need_p(args)
    if args.lam is None:
        raise UsageError("--lambda a,b,c is required")
    lam = _weight(args.lam, "--lambda")
    jh = jh_semisimplify(VirtualSum.W(lam), p)
    terms = sorted(jh.items())
    if args.format == "json":
        return {
            "p": p,
            "lambda": lam.to_list(),
            "constituents": [
                {"lambda": f.to_list(), "lambda_plus_rho": f.shifted().to_list(), "multiplicity": m}
                for (_, f), m in terms
            ],
        }
    if not terms:
        return f"W{_fmt(lam)} = 0"
    parts = [f"{'' if m == 1 else str(m) + '*'}F{_fmt(f)}" for (_, f), m in terms]
    return f"W{_fmt(lam)} = " + " + ".join(parts)


def cmd_enumerate(args):
    p = _need_p(args)
    ws = enumerate_serre_weights(p, args.regular)
    if args.format == "json":
        return {"p": p, "regular_only": args.regular, "weights": [w.to_json() for w in ws]}
    lines = [f"{_fmt(w.lam)}  {_fmt(w.shifted())}{'' if w.regular else '  irregular'}" for w in ws]
    lines.append(f"{len(ws)} weights")
    return "\n".join(lines)


def cmd_check(args):
    p = _need_p(args)
    results = run_checks(p)
    args._failed = not all(ok for _, ok, _ in results)
    if args.format == "json":
        return {"p": p, "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in results]}
    return "\n".join(f"{'PASS' if ok else 'FAIL'}  {n}: {d}" for n, ok, d in results)


COMMANDS = {
    "predict": cmd_predict,
    "lifts": cmd_lifts,
    "companions": cmd_companions,
    "bgg": cmd_bgg,
    "decompose": cmd_decompose,
    "enumerate": cmd_enumerate,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gsp4serre", description="Predicted Serre weights for tame ordinary GSp4 types.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--p", type=int)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if name in ("predict", "lifts"):
            sp.add_argument("--mu", help="a,b,c")
            sp.add_argument("--diag", help="e1,e2,e3,e4")
            sp.add_argument("--weight", help="k,ell")
        elif name in ("companions", "bgg"):
            sp.add_argument("--weight", help="k,ell")
        elif name == "decompose":
            sp.add_argument("--lambda", dest="lam", help="a,b,c")
        elif name == "enumerate":
            sp.add_argument("--regular", action="store_true")
    return parser


def _emit(out, fmt: str, stream):
    if fmt == "json":
        stream.write(json.dumps(out, sort_keys=True) + "\n")
    else:
        stream.write(out + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        out = COMMANDS[args.command](args)
    except RouteDisagreement as exc:
        stderr.write(json.dumps({"error": exc.code, "detail": str(exc)}) + "\n")
        return 3
    except (UsageError, EngineError) as exc:
        stderr.write(json.dumps({"error": exc.code, "detail": str(exc)}) + "\n")
        return 2
    _emit(out, args.format, stdout)
    if getattr(args, "_failed", False):
        return 3
    return 0


def main():  # pragma: no cover
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
