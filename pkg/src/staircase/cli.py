"""``staircase`` command line.

Exit codes: 0 all requested checks pass, 1 some check fails, 2 usage error,
3 degenerate parameters (the vanishing factor is printed).
"""

import argparse
import json
import sys

from .errors import BudgetExceeded, DegenerateParameters, StaircaseError
from .exact import as_rational, format_rational
from .report import CheckReport, all_passed, check

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3

GREEK = ("alpha", "beta", "gamma", "delta", "q")


def _rational(text):
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _fmt(x):
    try:
        return format_rational(x)
    except (TypeError, ValueError):
        return str(x)


def _add_greek(p, with_y=True, with_u=True):
    for name in GREEK:
        p.add_argument(f"--{name}", type=_rational)
    if with_y:
        p.add_argument("--y", type=_rational)
    if with_u:
        p.add_argument("--u", type=_rational)


def _point(args, names):
    return {k: getattr(args, k) for k in names if getattr(args, k, None) is not None}


def _emit_poly(p, args, label):
    from .polyring import MultiPoly

    pt = _point(args, GREEK + ("y", "u"))
    val = p.subs(**pt) if pt else p
    if isinstance(val, MultiPoly) and val.is_constant():
        val = val.constant_term()
    text = str(val) if isinstance(val, MultiPoly) else _fmt(val)
    if args.json:
        print(json.dumps({"name": label, "value": text}, sort_keys=True))
    else:
        print(text)
    return EXIT_OK


def _print_reports(reports, args, verbose=False):
    for rep in reports:
        if args.json:
            print(rep.to_json())
        else:
            print(rep.line())
            if verbose:
                for child in rep.children:
                    print("  " + child.line())
    return EXIT_OK if all_passed(reports) else EXIT_FAIL


# -- commands -------------------------------------------------------------------


def cmd_enumerate(args):
    from . import kernel
    from .tableaux import enumerate_tableaux, enumerate_type, parse_type

    if args.type is not None:
        sigma = parse_type(args.type)
        if args.n is not None and args.n != len(sigma):
            raise SystemExit(f"--n {args.n} disagrees with the type length {len(sigma)}")
        it = enumerate_type(sigma)
    elif args.n is None:
        raise SystemExit("enumerate needs --n or --type")
    else:
        if args.count:
            total = kernel.count(args.n)
            print(json.dumps({"n": args.n, "count": total}) if args.json else total)
            return EXIT_OK
        it = enumerate_tableaux(args.n)
    if args.count:
        total = sum(1 for _ in it)
        print(json.dumps({"type": args.type, "count": total}) if args.json else total)
        return EXIT_OK
    first = True
    for T in sorted(it, key=lambda T: sorted(T.cells.items())):
        if args.json:
            print(T.dumps())
        else:
            if not first:
                print()
            print(T)
            first = False
    return EXIT_OK


def cmd_zn(args):
    from .tableaux import z_poly

    return _emit_poly(z_poly(args.n, keep_u=args.keep_u), args, f"Z_{args.n}")


def cmd_zsigma(args):
    from .tableaux import parse_type, z_sigma_poly
    from .typegen import z_sigma_delta0, z_sigma_ntw

    sigma = parse_type(args.sigma)
    if args.method == "enum":
        p = z_sigma_poly(sigma, keep_u=args.keep_u)
    elif args.method == "ntw":
        p = z_sigma_ntw(sigma)
    else:
        p = z_sigma_delta0(sigma)
    return _emit_poly(p, args, f"Z_{sigma}")


MOMENT_METHODS = ("explicit", "tridiagonal", "combinatorial", "signed")


def cmd_moments(args):
    from . import moments as M

    missing = [k for k in "abcdq" if getattr(args, k) is None]
    if missing:
        raise SystemExit(f"moments needs --{' --'.join(missing)}")
    P = M.AWParams(args.a, args.b, args.c, args.d, args.q)
    methods = MOMENT_METHODS if args.method == "all" else (args.method,)
    fns = {"explicit": M.aw_moments_explicit, "tridiagonal": M.aw_moments_tridiagonal,
           "combinatorial": M.aw_moments_combinatorial, "signed": M.aw_moments_signed}
    vals = {m: fns[m](P, args.n) for m in methods}
    for m, v in vals.items():
        if args.json:
            print(json.dumps({"method": m, "n": args.n, "value": _fmt(v)}, sort_keys=True))
        else:
            print(f"{m}: {_fmt(v)}")
    if len(vals) > 1:
        agree = len(set(vals.values())) == 1
        print(json.dumps({"agree": agree}) if args.json else ("AGREE" if agree else "DISAGREE"))
        return EXIT_OK if agree else EXIT_FAIL
    return EXIT_OK


def cmd_asep(args):
    from .asep import build_chain, stationary_exact, verify_fugacity_marginal, verify_newthm
    from .partition import GreekParams

    missing = [k for k in GREEK if getattr(args, k) is None]
    if missing:
        raise SystemExit(f"asep verify needs --{' --'.join(missing)}")
    g = GreekParams(args.alpha, args.beta, args.gamma, args.delta, args.q)
    u = args.u if args.u is not None else 1
    rep = verify_newthm(args.n, g, u)
    pi = stationary_exact(build_chain(args.n, g, u))
    states = [c for c in rep.children if c.name.startswith("state ")]
    for child, p in zip(states, pi):
        if args.json:
            print(json.dumps({"state": child.name[6:], "pi": _fmt(p), "status": child.status}, sort_keys=True))
        else:
            print(f"{child.name[6:]} {child.detail}" if child.detail else
                  f"{child.name[6:]} pi={_fmt(p)} MATCH")
    reports = [rep]
    if args.marginal:
        reports.append(verify_fugacity_marginal(args.n, g, u))
    return _print_reports(reports, args)


def cmd_check(args):
    from . import checks

    if args.what == "all":
        reports = checks.run_all(args.n_max, args.seed)
    elif args.what == "criterion":
        if args.k is None or args.k not in checks.CRITERIA:
            raise SystemExit("check criterion needs --k in 1..14")
        reports = [checks.run_criterion(args.k, args.n_max, args.seed)]
    elif args.what == "table1":
        from .partition import factorization_checks

        reports = [factorization_checks(args.n if args.n is not None else 5)]
    elif args.what == "genfun":
        reports = [checks.run_criterion(7, args.n, args.seed)]
    elif args.what == "fcrossing":
        from .combinat import check_fcrossing_theorem

        reports = [check_fcrossing_theorem(args.n if args.n is not None else 3)]
    elif args.what == "dyck":
        from .combinat import dyck_moment
        from .tableaux import z_poly

        n = args.n if args.n is not None else 4
        lhs, rhs = dyck_moment(n), z_poly(n).subs(beta=1, delta=0, y=1)
        reports = [check(f"Dyck paths = Z_{n}(1;alpha,1,gamma,0;q)", lhs == rhs, f"{lhs} vs {rhs}")]
    elif args.what == "cwth":
        from .typegen import check_cwth_all

        reports = [check_cwth_all(args.n if args.n is not None else 5)]
    else:
        raise SystemExit(f"unknown check {args.what!r}")
    return _print_reports(reports, args, verbose=args.verbose)


def cmd_bijection(args):
    from .combinat import phi
    from .tableaux import StaircaseTableau, validate

    with open(args.infile) if args.infile != "-" else sys.stdin as fh:
        text = fh.read()
    out = []
    for line in text.splitlines() if args.lines else [text]:
        if not line.strip():
            continue
        T = StaircaseTableau.from_json(line)
        if not validate(T):
            print(f"not a staircase tableau: {T.dumps()}", file=sys.stderr)
            return EXIT_FAIL
        out.append(phi(T))
    for img in out:
        print(json.dumps(img.to_json(), sort_keys=True) if args.json else str(img))
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(prog="staircase", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="machine-readable output, one JSON object per line")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list or count staircase tableaux")
    p.add_argument("--n", type=int)
    p.add_argument("--type", help="type word, e.g. BWW or ●○○")
    p.add_argument("--count", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("zn", help="generating polynomial Z_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--keep-u", action="store_true")
    _add_greek(p)
    p.set_defaults(fn=cmd_zn)

    p = sub.add_parser("zsigma", help="generating polynomial Z_sigma of one type")
    p.add_argument("--sigma", required=True)
    p.add_argument("--method", choices=("enum", "ntw", "delta0"), default="enum")
    p.add_argument("--keep-u", action="store_true")
    _add_greek(p)
    p.set_defaults(fn=cmd_zsigma)

    p = sub.add_parser("moments", help="Askey-Wilson moments")
    p.add_argument("--n", type=int, required=True)
    for k in "abcdq":
        p.add_argument(f"--{k}", type=_rational)
    p.add_argument("--method", choices=MOMENT_METHODS + ("all",), default="explicit")
    p.set_defaults(fn=cmd_moments)

    p = sub.add_parser("asep", help="exact ASEP stationary distribution")
    p.add_argument("action", choices=("verify",))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--marginal", action="store_true", help="also check particle-number marginals")
    _add_greek(p, with_y=False)
    p.set_defaults(fn=cmd_asep)

    p = sub.add_parser("check", help="run identity checks")
    p.add_argument("what", choices=("all", "criterion", "table1", "genfun", "fcrossing", "dyck", "cwth"))
    p.add_argument("--n", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--k", type=int, help="criterion number for 'check criterion'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("bijection", help="apply a bijection to tableaux")
    p.add_argument("which", choices=("phi",))
    p.add_argument("--in", dest="infile", required=True, help="tableau JSON file, or - for stdin")
    p.add_argument("--lines", action="store_true", help="input holds one tableau per line")
    p.set_defaults(fn=cmd_bijection)

    # accept --json after the subcommand too
    for action in sub.choices.values():
        action.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    return ap


def run(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.fn(args)
    except DegenerateParameters as e:
        print(f"DEGENERATE {e.factor}: {e}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ZeroDivisionError as e:
        print(f"DEGENERATE {e}", file=sys.stderr)
        return EXIT_DEGENERATE
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        if isinstance(e.code, str):
            print(f"staircase: {e.code}", file=sys.stderr)
            return EXIT_USAGE
        return e.code
    except (StaircaseError, ValueError, OSError) as e:
        print(f"staircase: {e}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
