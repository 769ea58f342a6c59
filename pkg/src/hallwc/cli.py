"""Command-line entry point; every subcommand prints one JSON record."""
import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .errors import HallError, PoleAtOne
from .exactalg import expand, parse_ratfunc, residue_by_expansions, residue_by_partial_fractions
from .freewall import HopSpec, coefficient_tables
from .khallvect import BlockProfile, delta_eval, epsilon_eval, khall_product_eval
from .multilaurent import constant_term_of_product, gamma_minus
from .quiver import SlopeFunction, enumerate_hn_types, load_quiver, parse_dim, stack_poincare
from .repchar import parse_character, parse_weight, schur_char
from .torus import HallContext, dominant_wc_sides, hn_sum

EXIT_OK, EXIT_INPUT, EXIT_POLE = 0, 2, 3


def frac(c):
    return str(Fraction(c))


def _ints(text):
    return parse_dim(text)


def _stability(theta, kappa, n):
    theta = _ints(theta) if theta else (0,) * n
    return SlopeFunction(theta, _ints(kappa) if kappa else None)


def cmd_quiver_dt(args):
    Q = load_quiver(args.quiver)
    alpha = Q.check_dim(_ints(args.dim))
    ctx = HallContext(Q, _stability(args.theta, args.kappa, Q.nverts))
    delta = ctx.delta_coeff(alpha)
    eps = ctx.epsilon_coeff(alpha)
    regular = eps.regular_at_one()
    rec = {
        "alpha": list(alpha),
        "delta": str(delta),
        "epsilon": str(eps),
        "dt": frac(eps.eval_at(1)) if regular else None,
        "regular_at_one": regular,
    }
    if args.q_at is not None:
        rec["epsilon_at_q"] = frac(eps.eval_at(Fraction(args.q_at)))
    if not regular:
        return rec, EXIT_POLE
    return rec, EXIT_OK


def cmd_hn_check(args):
    Q = load_quiver(args.quiver)
    alpha = Q.check_dim(_ints(args.dim))
    thetas = args.theta or ["1" + ",0" * (Q.nverts - 1), ",".join(["0"] * (Q.nverts - 1) + ["1"])]
    target = stack_poincare(Q, alpha)

    def one(theta):
        ctx = HallContext(Q, _stability(theta, None, Q.nverts))
        ctx.fill(alpha)
        return {"theta": list(_ints(theta)), "hn_sum": str(hn_sum(ctx.delta, alpha).coeff(alpha))}

    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        rows = list(pool.map(one, thetas))
    equal = all(r["hn_sum"] == str(target) for r in rows)
    return {"alpha": list(alpha), "stack_poincare": str(target), "sums": rows, "equal": equal}, EXIT_OK


def cmd_wallcross_check(args):
    Q = load_quiver(args.quiver)
    alpha = Q.check_dim(_ints(args.dim))
    wall = _stability(args.wall_theta, None, Q.nverts)
    side = _stability(args.side_theta, None, Q.nverts)
    lhs, rhs = dominant_wc_sides(Q, wall, side, alpha)
    types = [[list(p) for p in t] for t in enumerate_hn_types(alpha, side, same_slope_under=wall)]
    return {
        "alpha": list(alpha),
        "wall_delta": str(lhs.coeff(alpha)),
        "hn_expansion": str(rhs.coeff(alpha)),
        "hn_types": types,
        "equal": lhs == rhs,
    }, EXIT_OK


def cmd_coeffs(args):
    with open(args.path, encoding="utf-8") as fh:
        rec = json.load(fh)
    hops = [HopSpec.from_record(h) for h in rec["hops"]]
    bound = _ints(args.bound) if args.bound else tuple(rec["bound"])
    return coefficient_tables(hops, bound).to_record(), EXIT_OK


def cmd_vect(args):
    chi = parse_character(args.char, args.n)
    if args.op == "epsilon":
        value = epsilon_eval(chi.n, chi)
    elif args.op == "delta":
        value = delta_eval(chi.n, chi)
    else:
        if not args.blocks:
            raise ValueError("--blocks is required for --op product")
        blocks = BlockProfile(_ints(args.blocks))
        if args.n is not None and args.n != blocks.total:
            raise ValueError("--n must equal the sum of --blocks")
        value = khall_product_eval(blocks, chi)
    return {"op": args.op, "n": chi.n, "char": args.char, "value": frac(value)}, EXIT_OK


def cmd_residue(args):
    f = parse_ratfunc(args.f, "u")
    a, b = residue_by_expansions(f), residue_by_partial_fractions(f)
    if a != b:
        raise ArithmeticError(f"residue methods disagree: {a} != {b}")
    return {"f": str(f), "residue": frac(a)}, EXIT_OK


def cmd_weyl(args):
    weight = parse_weight(args.weight)
    if args.n is not None and args.n != weight.n:
        raise ValueError(f"--n {args.n} does not match weight length {weight.n}")
    chi = schur_char(weight)
    ct = constant_term_of_product(gamma_minus(weight.n), chi.poly)
    return {"n": weight.n, "lambda": list(weight.parts), "constant_term": frac(ct)}, EXIT_OK


def cmd_parse(args):
    if args.kind == "character":
        chi = parse_character(args.expr, args.n)
        return {"kind": "character", "n": chi.n, "value": str(chi)}, EXIT_OK
    f = parse_ratfunc(args.expr)
    rec = {"kind": "ratfunc", "value": str(f), "record": f.to_record()}
    if args.expand_at:
        w = expand(f, args.expand_at, args.max_order)
        rec["expansion"] = {
            "point": w.point,
            "valuation": w.valuation,
            "coeffs": {str(k): frac(v) for k, v in sorted(w.as_dict().items())},
        }
    return rec, EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="hallwc", description="Exact Hall-algebra wall-crossing computations.")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", help="write the JSON record here instead of stdout")
    p.add_argument("--max-order", type=int, default=16)
    # the same flags are accepted after the subcommand name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    common.add_argument("--output", default=argparse.SUPPRESS)
    common.add_argument("--max-order", type=int, default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("quiver-dt", parents=[common], help="delta, epsilon and DT invariant of one class")
    s.add_argument("--quiver", required=True, help="builtin name (vect, A2, kronecker2) or JSON file")
    s.add_argument("--theta")
    s.add_argument("--kappa")
    s.add_argument("--dim", required=True)
    s.add_argument("--q-at")
    s.set_defaults(func=cmd_quiver_dt)

    s = sub.add_parser("hn-check", parents=[common], help="HN sums for several stabilities against the stack count")
    s.add_argument("--quiver", required=True)
    s.add_argument("--dim", required=True)
    s.add_argument("--theta", action="append")
    s.set_defaults(func=cmd_hn_check)

    s = sub.add_parser("wallcross-check", parents=[common], help="both sides of the dominant wall-crossing formula")
    s.add_argument("--quiver", required=True)
    s.add_argument("--dim", required=True)
    s.add_argument("--wall-theta", required=True)
    s.add_argument("--side-theta", required=True)
    s.set_defaults(func=cmd_wallcross_check)

    s = sub.add_parser("coeffs", parents=[common], help="S, U and U~ tables along a path file")
    s.add_argument("--path", required=True)
    s.add_argument("--bound")
    s.set_defaults(func=cmd_coeffs)

    s = sub.add_parser("vect", parents=[common], help="K-Hall functionals on stacks of vector spaces")
    s.add_argument("--op", choices=("epsilon", "delta", "product"), required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--char", required=True)
    s.add_argument("--blocks")
    s.set_defaults(func=cmd_vect)

    s = sub.add_parser("residue", parents=[common], help="residue at u = 1 of f(u)/u")
    s.add_argument("--f", required=True)
    s.set_defaults(func=cmd_residue)

    s = sub.add_parser("weyl", parents=[common], help="constant term of the Weyl density times a Schur character")
    s.add_argument("--n", type=int)
    s.add_argument("--lambda", dest="weight", required=True)
    s.set_defaults(func=cmd_weyl)

    s = sub.add_parser("parse", parents=[common], help="canonical form of an expression")
    s.add_argument("--expr", required=True)
    s.add_argument("--kind", choices=("ratfunc", "character"), default="ratfunc")
    s.add_argument("--n", type=int)
    s.add_argument("--expand-at", choices=("zero", "one", "infinity"))
    s.set_defaults(func=cmd_parse)
    return p


def _emit(rec, path):
    text = json.dumps(rec, indent=2) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        rec, code = args.func(args)
    except PoleAtOne as exc:
        rec, code = {"error": "PoleAtOne", "message": str(exc)}, EXIT_POLE
    except (HallError, ValueError, KeyError, OSError, json.JSONDecodeError, ArithmeticError) as exc:
        rec, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_INPUT
    _emit(rec, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
