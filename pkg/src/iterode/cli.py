"""Command line interface: ``iterode generate|coeffs|normalize|check|selftest``.

Exit codes: 0 success (or iterative), 1 usage/parse error, 2 internal
consistency violation, 3 well-formed but not iterative.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import comb
from typing import Callable, Sequence, TextIO

from iterode import core
from iterode.criteria import is_iterative
from iterode.errors import ConsistencyError, UnsupportedOrderError
from iterode.exact import ResourceLimitError
from iterode.jet import JetPoly, diffrat_reduce, jet_eliminate_s, specialize_constant
from iterode.normal_form import LinearODE, gauge_reduce, render_ode
from iterode.parser import ParseError, parse_coefficient_list, parse_expression

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTERNAL = 2
EXIT_NOT_ITERATIVE = 3

DEFAULT_ORDER_CAP = 12
FORMS = ("recurrence", "algorithmic", "closed", "simplified", "unit-r")


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="iterode", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="build Psi^n y = 0 for concrete r(x), s(x)")
    gen.add_argument("--order", type=int, required=True)
    gen.add_argument("--r", required=True, help="expression for r(x)")
    gen.add_argument("--s", help="expression for s(x) (ignored with --normal)")
    gen.add_argument("--normal", action="store_true", help="emit the normal form")
    gen.add_argument("--json", action="store_true")
    gen.add_argument("--max-order", type=int, default=DEFAULT_ORDER_CAP)

    co = sub.add_parser("coeffs", help="print symbolic coefficients K[n,j]")
    co.add_argument("--order", type=int, required=True)
    co.add_argument("--j", type=int)
    co.add_argument("--form", choices=FORMS, required=True)
    co.add_argument("--normal", action="store_true",
                    help="print A[n,j] = K[n,j]/r^n with s = -(n-1)/2 r'")
    co.add_argument("--max-order", type=int, default=DEFAULT_ORDER_CAP)

    no = sub.add_parser("normalize", help="remove the y^(n-1) term by a gauge change")
    no.add_argument("--order", type=int, required=True)
    no.add_argument("--coeffs", required=True, help='"c0; c1; ...", or "-" for stdin')
    no.add_argument("--json", action="store_true")

    ch = sub.add_parser("check", help="decide iterativity of an order 3 or 4 equation")
    ch.add_argument("--coeffs", required=True, help='"c0; c1; ...", or "-" for stdin')
    ch.add_argument("--json", action="store_true")

    st = sub.add_parser("selftest", help="cross-validate every coefficient route")
    st.add_argument("--max-order", type=int, default=7)
    return parser


# -- helpers ----------------------------------------------------------------

def _check_order(n: int, cap: int, lo: int = 1) -> None:
    if not lo <= n <= cap:
        raise UsageError(f"--order must be between {lo} and {cap}, got {n}")


def _read_coeffs(text: str, stdin: TextIO) -> list:
    """Accept a coefficient list, or ``-`` to read generate output from stdin."""
    if text.strip() != "-":
        return parse_coefficient_list(text)
    data = stdin.read()
    stripped = data.strip()
    if stripped.startswith("{"):
        try:
            payload = json.loads(stripped)
            return [parse_expression(c) for c in payload["coefficients"]]
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"unreadable JSON on stdin: {exc}") from None
    for line in data.splitlines():
        if line.startswith("coeffs:"):
            return parse_coefficient_list(line[len("coeffs:"):])
    return parse_coefficient_list(stripped)


def _emit_equation(ode: LinearODE, as_json: bool, out: TextIO, var: str = "y") -> None:
    coeffs = [str(c) for c in ode.coeffs]
    if as_json:
        out.write(json.dumps({"order": ode.order, "coefficients": coeffs}) + "\n")
    else:
        out.write(render_ode(ode, var) + "\n")
        out.write("coeffs: " + "; ".join(coeffs) + "\n")


def symbolic_coefficient(n: int, j: int, form: str) -> JetPoly:
    """``K[n, j]`` computed along the route named by ``form``."""
    if form == "unit-r":
        return core.coeffs_unit_r(n)[j]
    if form == "recurrence":
        return core.coeffs_recurrence(n)[n, j]
    if form == "algorithmic":
        return core.coeffs_algorithmic(n, j)
    if j == 0:
        return JetPoly.var("r", 0, n)
    if form == "closed":
        return core.coeffs_closed_form(n, j)
    return core.coeffs_simplified(n, j)


# -- subcommands ------------------------------------------------------------

def cmd_generate(args, out: TextIO, stdin: TextIO) -> int:
    _check_order(args.order, args.max_order)
    r = parse_expression(args.r)
    if r.is_zero():
        raise UsageError("r must not be identically zero")
    if args.normal:
        ode = core.generate_normal_concrete(args.order, r)
    else:
        if args.s is None:
            raise UsageError("--s is required unless --normal is given")
        ode = core.generate_concrete(args.order, r, parse_expression(args.s))
    _emit_equation(ode, args.json, out)
    return EXIT_OK


def cmd_coeffs(args, out: TextIO, stdin: TextIO) -> int:
    n = args.order
    _check_order(n, args.max_order)
    if args.normal:
        if args.form == "unit-r":
            raise UsageError("--normal cannot be combined with --form unit-r")
        if n < 2:
            raise UsageError("--normal needs --order >= 2")
        js = [args.j] if args.j is not None else list(range(2, n + 1))
        if any(not 2 <= j <= n for j in js):
            raise UsageError(f"--j must be between 2 and {n} with --normal")
        if args.j is None and not jet_eliminate_s(symbolic_coefficient(n, 1, args.form), n).is_zero():
            raise ConsistencyError(f"K[{n},1] does not vanish after s-elimination")
        for j in js:
            a = diffrat_reduce(jet_eliminate_s(symbolic_coefficient(n, j, args.form), n), n)
            out.write(f"{a}\n" if args.j is not None else f"A[{n},{j}] = {a}\n")
        return EXIT_OK
    js = [args.j] if args.j is not None else list(range(n + 1))
    if any(not 0 <= j <= n for j in js):
        raise UsageError(f"--j must be between 0 and {n}")
    for j in js:
        k = symbolic_coefficient(n, j, args.form)
        out.write(f"{k}\n" if args.j is not None else f"K[{n},{j}] = {k}\n")
    return EXIT_OK


def cmd_normalize(args, out: TextIO, stdin: TextIO) -> int:
    coeffs = _read_coeffs(args.coeffs, stdin)
    if len(coeffs) != args.order:
        raise UsageError(f"--order {args.order} needs {args.order} coefficients, got {len(coeffs)}")
    ode = gauge_reduce(LinearODE.from_coeffs(coeffs))
    _emit_equation(ode, args.json, out, var="w")
    return EXIT_OK


def cmd_check(args, out: TextIO, stdin: TextIO) -> int:
    coeffs = _read_coeffs(args.coeffs, stdin)
    if len(coeffs) not in (3, 4):
        raise UsageError(
            f"only orders 3 and 4 are characterized; got {len(coeffs)} coefficients"
        )
    report = is_iterative(LinearODE.from_coeffs(coeffs))
    residuals = [str(r) for r in report.residuals]
    if args.json:
        out.write(json.dumps({
            "order": report.order,
            "iterative": report.verdict,
            "residuals": residuals,
            "method": report.method,
        }) + "\n")
    else:
        out.write(f"order: {report.order}\n")
        out.write(f"method: {report.method}\n")
        for i, r in enumerate(residuals):
            out.write(f"residual[{i}]: {r}\n")
        out.write(f"verdict: {'iterative' if report.verdict else 'not iterative'}\n")
    return EXIT_OK if report.verdict else EXIT_NOT_ITERATIVE


def selftest_checks(max_order: int) -> list[tuple[str, Callable[[], bool]]]:
    """Named exact identities checked by ``iterode selftest``."""
    checks: list[tuple[str, Callable[[], bool]]] = []

    def four_path(n, j):
        k = core.coeffs_recurrence(n)[n, j]
        return (k == core.coeffs_algorithmic(n, j) == core.coeffs_closed_form(n, j)
                == core.coeffs_simplified(n, j))

    def unit_r(n):
        row = core.coeffs_recurrence(n).row(n)
        return [specialize_constant(k, "r") for k in row] == core.coeffs_unit_r(n)

    def normal_a2(n):
        a = core.normal_coeffs(n)[0]
        return a == core.a_invariant() * comb(n + 1, 3)

    def template3():
        a2, a3 = core.normal_coeffs(3)
        return (a3 - a2.derivative() * Fraction(1, 2)).is_zero()

    def template4():
        a2, a3, a4 = core.normal_coeffs(4)
        rhs = a2.derivative().derivative() * Fraction(3, 10) + a2 * a2 * Fraction(9, 100)
        return (a3 - a2.derivative()).is_zero() and (a4 - rhs).is_zero()

    for n in range(1, max_order + 1):
        for j in range(1, n + 1):
            checks.append((f"four-path K[{n},{j}]", lambda n=n, j=j: four_path(n, j)))
    for n in range(1, max_order + 1):
        checks.append((f"unit-r row {n}", lambda n=n: unit_r(n)))
    for n in range(1, max(max_order, 12) + 1):
        checks.append((f"term-count n={n}", lambda n=n: all(
            core.term_count(n, j) == comb(n, j) for j in range(n + 1))))
    for n in range(2, max(max_order, 2) + 1):
        checks.append((f"A[{n},2] = C({n + 1},3)*A(r)", lambda n=n: normal_a2(n)))
    checks.append(("order-3 normal template", template3))
    checks.append(("order-4 normal template", template4))
    return checks


def cmd_selftest(args, out: TextIO, stdin: TextIO) -> int:
    if args.max_order < 1:
        raise UsageError("--max-order must be positive")
    failed = 0
    checks = selftest_checks(args.max_order)
    for name, check in checks:
        ok = check()
        failed += not ok
        out.write(f"{'ok  ' if ok else 'FAIL'} {name}\n")
    out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    return EXIT_OK if not failed else EXIT_INTERNAL


COMMANDS = {
    "generate": cmd_generate,
    "coeffs": cmd_coeffs,
    "normalize": cmd_normalize,
    "check": cmd_check,
    "selftest": cmd_selftest,
}


def run(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None,
        stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    try:
        args = build_parser().parse_args(list(argv))
        return COMMANDS[args.command](args, out, stdin)
    except ConsistencyError as exc:
        err.write(f"iterode: internal consistency violation: {exc}\n")
        return EXIT_INTERNAL
    except (UsageError, ParseError, UnsupportedOrderError, ResourceLimitError,
            ZeroDivisionError, ValueError) as exc:
        err.write(f"iterode: error: {exc}\n")
        return EXIT_USAGE


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
