"""Command-line front end for the package.

Six subcommands cover the library surface: `coeffs` prints a named series
(or a product of named series) as a sparse polynomial, `table` dumps
arithmetic-function values, `rep` counts representations of an integer by a
form given in a small DSL, `verify` and `suite` drive the identity catalog,
and `residues` exposes the quadratic-residue tools.  Every subcommand has a
`--json` mode.  Exit codes: 0 on success or all-pass, 1 when an identity
fails or a cross-check reports a counterexample, 2 on usage errors.

Output is deterministic byte-for-byte for a given argument vector: the
program name and help width are pinned, no environment variables are read,
and all collection output is explicitly ordered.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Optional

from .arith import (
    A_nu,
    X_nu,
    Y_nu,
    c_nu,
    chi_registry,
    lambda_nu,
    liouville,
    moebius,
    mu_nu,
    mu_star_nu,
    radical,
    sigma_nu,
    totient,
)
from .errors import QFormsError
from .identities import report_to_dict, run_suite, verify
from .repcount import brute_force_count, parse_form
from .residues import res_count, th78_classify
from .series import (
    Domain,
    LaurentSeries,
    euler_series,
    format_series,
    partition_series,
    phi_nu,
    phi_star_nu,
    theta2,
    theta3,
    theta4,
)

_SERIES_GRAMMAR = """\
series expression:
  expr   := factor ('*' factor)*
  factor := name ['^' uint]
  name   := theta2 | theta3 | theta4 | partition | euler
          | phi_<nu> | phistar_<nu>        (e.g. phi_2, phistar_3)
Coefficients are printed through q^(order-1)."""

_FORM_GRAMMAR = """\
form expression:
  expr    := sumterm ('+' sumterm)* | sumterm '*' sumterm
  sumterm := [int '*'] var '^' uint | int
  var     := x | y | z | w
Whitespace is insignificant.  Sum variables default to all integers,
product variables to positive integers; --domain overrides per variable
with codes Z (integers), N1 (n >= 1), N0 (n >= 0)."""

_TABLE_FNS = ("moebius", "liouville", "totient", "radical", "sigma",
              "lambda", "X", "mu", "mustar", "c", "Y", "A")
_NEEDS_NU = ("sigma", "lambda", "X", "mu", "mustar", "c", "Y", "A")
_NEEDS_CHI = ("Y", "A")


class _Parser(argparse.ArgumentParser):
    """argparse variant whose usage errors print the full grammar."""

    def error(self, message: str):
        sys.stderr.write(self.format_help())
        sys.stderr.write(f"\nerror: {message}\n")
        raise SystemExit(2)


def _fmt(prog: str) -> argparse.HelpFormatter:
    # pinned width keeps help and usage bytes independent of the terminal
    return argparse.HelpFormatter(prog, width=96)


def _fmt_raw(prog: str) -> argparse.HelpFormatter:
    return argparse.RawDescriptionHelpFormatter(prog, width=96)


def _rat_json(v) -> dict:
    f = Fraction(v)
    return {"num": f.numerator, "den": f.denominator}


def _print_json(obj) -> None:
    print(json.dumps(obj))


# ---------------------------------------------------------------------------
# coeffs


def _atom_series(name: str, order: int) -> LaurentSeries:
    fixed = {
        "theta2": theta2,
        "theta3": theta3,
        "theta4": theta4,
        "partition": partition_series,
        "euler": euler_series,
    }
    if name in fixed:
        return fixed[name](order)
    m = re.fullmatch(r"(phi|phistar)_(\d+)", name)
    if m:
        nu = int(m.group(2))
        build = phi_nu if m.group(1) == "phi" else phi_star_nu
        return build(nu, order)
    raise ValueError(f"unknown series name {name!r}")


def _build_series(expr: str, order: int) -> LaurentSeries:
    text = expr.replace(" ", "")
    if not text:
        raise ValueError("empty series expression")
    out: Optional[LaurentSeries] = None
    for factor in text.split("*"):
        name, _, pw = factor.partition("^")
        power = 1
        if pw:
            if not pw.isdigit() or int(pw) < 1:
                raise ValueError(f"bad exponent {pw!r} in {factor!r}")
            power = int(pw)
        atom = _atom_series(name, order)
        for _ in range(power):
            out = atom if out is None else out * atom
    return out


def _clip(s: LaurentSeries, order: int) -> LaurentSeries:
    lo, hi = s.window
    if hi <= order:
        return s
    return LaurentSeries([s.coeff(e) for e in range(lo, order)], lo)


def _cmd_coeffs(args) -> int:
    s = _clip(_build_series(args.series, args.order), args.order)
    if args.json:
        terms = [{"exp": e, "coeff": _rat_json(c)} for e, c in s.items() if c]
        _print_json({"series": args.series, "order": args.order,
                     "text": format_series(s), "terms": terms})
    else:
        print(format_series(s))
    return 0


# ---------------------------------------------------------------------------
# table


def _table_value(fn: str, n: int, nu: Optional[int], chi):
    plain = {"moebius": moebius, "liouville": liouville,
             "totient": totient, "radical": radical}
    if fn in plain:
        return plain[fn](n)
    with_nu = {"sigma": sigma_nu, "lambda": lambda_nu, "X": X_nu,
               "mu": mu_nu, "mustar": mu_star_nu, "c": c_nu}
    if fn in with_nu:
        return with_nu[fn](n, nu)
    if fn == "Y":
        return Y_nu(n, nu, chi)
    return A_nu(n, nu, chi)


def _cmd_table(args) -> int:
    if args.fn in _NEEDS_NU and args.nu is None:
        raise ValueError(f"--fn {args.fn} requires --nu")
    if args.fn not in _NEEDS_NU and args.nu is not None:
        raise ValueError(f"--fn {args.fn} does not take --nu")
    if args.fn in _NEEDS_CHI and args.chi is None:
        raise ValueError(f"--fn {args.fn} requires --chi")
    if args.fn not in _NEEDS_CHI and args.chi is not None:
        raise ValueError(f"--fn {args.fn} does not take --chi")
    if args.from_ < 1 or args.to < args.from_:
        raise ValueError("need 1 <= --from <= --to")
    chi = chi_registry(args.chi) if args.chi is not None else None
    rows = []
    for n in range(args.from_, args.to + 1):
        v = _table_value(args.fn, n, args.nu, chi)
        f = Fraction(v)
        rows.append((n, f.numerator if f.denominator == 1 else f))
    if args.json:
        _print_json([{"n": n, "value": _rat_json(v)} for n, v in rows])
    else:
        for n, v in rows:
            print(f"{n}\t{v}")
    return 0


# ---------------------------------------------------------------------------
# rep

_DOMAIN_CODES = {"Z": Domain.ALL_INTEGERS,
                 "N1": Domain.NATURALS_FROM_1,
                 "N0": Domain.NATURALS_FROM_0}


def _parse_domains(text: str) -> dict:
    out = {}
    for piece in text.split(","):
        var, sep, code = piece.partition("=")
        var, code = var.strip(), code.strip()
        if not sep or not var or code not in _DOMAIN_CODES:
            raise ValueError(
                f"bad domain assignment {piece!r}; expected var=Z|N1|N0")
        out[var] = _DOMAIN_CODES[code]
    return out


def _cmd_rep(args) -> int:
    domains = _parse_domains(args.domain) if args.domain else None
    form = parse_form(args.form, domains)
    result = brute_force_count(form, args.n, want_witnesses=args.witnesses)
    witnesses = sorted(result.witnesses) if result.witnesses is not None else None
    if args.json:
        _print_json({"n": result.n, "count": result.count,
                     "witnesses": [list(w) for w in witnesses]
                     if witnesses is not None else None})
    else:
        print(f"count={result.count}")
        for w in witnesses or ():
            print("witness=(" + ",".join(str(x) for x in w) + ")")
    return 0


# ---------------------------------------------------------------------------
# verify / suite


def _coerce_param(v: str):
    try:
        return int(v)
    except ValueError:
        pass
    m = re.fullmatch(r"(-?\d+)/(\d+)", v)
    if m:
        return Fraction(int(m.group(1)), int(m.group(2)))
    return v


def _parse_params(pairs) -> Optional[dict]:
    if not pairs:
        return None
    out = {}
    for kv in pairs:
        k, sep, v = kv.partition("=")
        if not sep or not k:
            raise ValueError(f"bad --param {kv!r}; expected key=value")
        out[k] = _coerce_param(v)
    return out


def _params_suffix(params: dict) -> str:
    if not params:
        return ""
    inner = ",".join(f"{k}={params[k]}" for k in sorted(params))
    return f"[{inner}]"


def _report_line(r) -> str:
    tag = _params_suffix(r.params)
    if r.equal:
        lo, hi = r.window
        return f"{r.id}{tag} PASS window=[{lo},{hi})"
    e, lv, rv = r.first_diff
    return f"{r.id}{tag} FAIL at q^{e}: lhs={lv} rhs={rv}"


def _cmd_verify(args) -> int:
    report = verify(args.id, params=_parse_params(args.param),
                    order=args.order)
    if args.json:
        _print_json(report_to_dict(report))
    else:
        print(_report_line(report))
    return 0 if report.equal else 1


def _cmd_suite(args) -> int:
    reports = run_suite(filter=args.filter, order=args.order)
    failed = [r for r in reports if not r.equal]
    if args.json:
        _print_json([report_to_dict(r) for r in reports])
    else:
        for r in reports:
            print(_report_line(r))
        print(f"passed {len(reports) - len(failed)}/{len(reports)}")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# residues


def _cmd_residues_classify(args) -> int:
    c = th78_classify(args.t)
    if args.json:
        _print_json({"t": c.t, "S1": c.S1, "S11": c.S11, "S12": c.S12,
                     "Sm1": c.Sm1, "S0": c.S0})
    else:
        print(f"t={c.t}")
        for label, values in (("S1", c.S1), ("S11", c.S11), ("S12", c.S12),
                              ("Sm1", c.Sm1), ("S0", c.S0)):
            print(f"{label}={values}")
    return 0


def _cmd_residues_res(args) -> int:
    count = res_count(args.a, args.n)
    if args.json:
        _print_json({"a": args.a, "n": args.n, "count": count})
    else:
        print(f"count={count}")
    return 0


# ---------------------------------------------------------------------------
# wiring


def _build_parser() -> _Parser:
    top = _Parser(prog="qforms", formatter_class=_fmt,
                  description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="subcommand", required=True,
                             parser_class=_Parser)

    p = sub.add_parser("coeffs", formatter_class=_fmt_raw,
                       help="print a series as a sparse polynomial",
                       epilog=_SERIES_GRAMMAR)
    p.add_argument("--series", required=True,
                   help="series name or product expression (see epilog)")
    p.add_argument("--order", type=int, default=48,
                   help="window size; coefficients through q^(order-1)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("table", formatter_class=_fmt,
                       help="dump arithmetic-function values")
    p.add_argument("--fn", required=True, choices=_TABLE_FNS)
    p.add_argument("--nu", type=int, default=None,
                   help="subscript for sigma/lambda/X/mu/mustar/c/Y/A")
    p.add_argument("--from", dest="from_", type=int, default=1,
                   help="first argument value (default 1)")
    p.add_argument("--to", type=int, required=True,
                   help="last argument value")
    p.add_argument("--chi", default=None,
                   help="character id for Y/A (e.g. 1, id, mu, jacobi_5)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("rep", formatter_class=_fmt_raw,
                       help="count representations of n by a form",
                       epilog=_FORM_GRAMMAR)
    p.add_argument("--form", required=True, help="form expression (see epilog)")
    p.add_argument("--n", type=int, required=True, help="target integer")
    p.add_argument("--domain", default=None,
                   help="per-variable domains, e.g. x=Z,y=N1")
    p.add_argument("--witnesses", action="store_true",
                   help="also list the solution tuples")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_rep)

    p = sub.add_parser("verify", formatter_class=_fmt,
                       help="check one identity catalog entry")
    p.add_argument("--id", required=True, help="identity id, e.g. th47")
    p.add_argument("--param", action="append", default=[],
                   metavar="K=V",
                   help="parameter override; integers and a/b fractions "
                        "are parsed, anything else stays a string")
    p.add_argument("--order", type=int, default=None,
                   help="comparison order (default: the entry's own)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("suite", formatter_class=_fmt,
                       help="run the whole identity catalog")
    p.add_argument("--filter", default=None, help="id prefix filter")
    p.add_argument("--order", type=int, default=None,
                   help="override every entry's order")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_suite)

    p = sub.add_parser("residues", formatter_class=_fmt,
                       help="quadratic-residue tools")
    rsub = p.add_subparsers(dest="residues_command", required=True,
                            parser_class=_Parser)
    pc = rsub.add_parser("classify", formatter_class=_fmt,
                         help="partition 1..t by solvability of x^2+t*y^2=n")
    pc.add_argument("--t", type=int, required=True,
                    help="prime congruent to 3 mod 4")
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(func=_cmd_residues_classify)
    pr = rsub.add_parser("res", formatter_class=_fmt,
                         help="count roots of x^2 = a (mod n)")
    pr.add_argument("--a", type=int, required=True)
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--json", action="store_true")
    pr.set_defaults(func=_cmd_residues_res)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code
        return code if isinstance(code, int) else 0
    try:
        return args.func(args)
    except (QFormsError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ArithmeticError as exc:
        sys.stderr.write(f"check failed: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
