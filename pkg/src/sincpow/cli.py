"""Command-line front end.

Exit status: 0 on success, 1 when an identity sweep finds a counterexample,
2 on a usage error (bad flags, out-of-domain arguments).
"""

import argparse
import json
import re
import sys

from . import bell, expansions, identities, numbers_core, numeric
from .numbers_core import as_rational

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2

# argparse only recognises "-3" / "-0.5" as negative numbers, not "-1/2" or "-1e-3"
_NEGATIVE_VALUE = re.compile(r"^-(\d+(/\d+)?|\d*\.?\d+([eE][-+]?\d+)?)(,.*)?$")


class UsageError(Exception):
    pass


def _rational(text):
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected an integer or P/Q literal, got {text!r}")


def _rational_list(text):
    return tuple(_rational(part) for part in text.split(",") if part.strip())


def fmt(value):
    return str(as_rational(value))


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="sincpow",
        description="Exact central factorial numbers, partial Bell polynomials "
                    "and power series of sinc/sinhc.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("stirling2", help="Stirling number of the second kind S(n,k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("weighted", help="weighted Stirling number R(n,k,r)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=_rational, required=True)

    p = sub.add_parser("cfn", help="central factorial number T(n,k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--scaled", action="store_true", help="print 2^(n-k) T(n,k) instead")

    p = sub.add_parser("bell", help="partial Bell polynomial B_{n,k}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--args", type=_rational_list, dest="bell_args", metavar="X1,X2,...")
    src.add_argument("--sinc-args", action="store_true",
                     help="use the derivatives of sinc at 0: 0,-1/3,0,1/5,...")
    p.add_argument("--method", choices=("recurrence", "cfn", "stirling"), default="recurrence")

    p = sub.add_parser("series", help="Taylor coefficients of sinc^r, sinhc^r or exp(sinc-1)")
    p.add_argument("--function", choices=("sinc", "sinhc", "exp-sinc"), required=True)
    p.add_argument("--exponent", type=_rational, default=as_rational(1))
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--method", choices=("cfn", "stirling", "oracle"), default="cfn")
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    p = sub.add_parser("verify", help="sweep an identity over a finite index range")
    p.add_argument("--identity", choices=tuple(identities.IDENTITIES), required=True)
    p.add_argument("--max", type=int, required=True)

    p = sub.add_parser("eval", help="evaluate a truncated sinc^r / sinhc^r series at real z")
    p.add_argument("--function", choices=("sinc", "sinhc"), required=True)
    p.add_argument("--exponent", type=_rational, required=True)
    p.add_argument("--z", type=float, required=True)
    p.add_argument("--order", type=int, required=True)
    return parser


def _cmd_stirling2(a, out):
    print(numbers_core.stirling2(a.n, a.k), file=out)


def _cmd_weighted(a, out):
    print(fmt(numbers_core.weighted_stirling(a.n, a.k, a.r)), file=out)


def _cmd_cfn(a, out):
    if a.scaled:
        print(numbers_core.scaled_T(a.n, a.k), file=out)
    else:
        print(fmt(numbers_core.central_factorial_T(a.n, a.k)), file=out)


def _cmd_bell(a, out):
    if a.method != "recurrence":
        if not a.sinc_args:
            raise UsageError(f"--method {a.method} requires --sinc-args")
        value = bell.bell_sinc_closed(a.n, a.k, a.method)
    else:
        if a.sinc_args:
            args = bell.sinc_derivative_args(max(a.n - a.k + 1, 0))
        else:
            args = a.bell_args
        value = bell.bell_partial(a.n, a.k, args)
    print(fmt(value), file=out)


def _format_plain(series):
    terms = []
    for n, c in enumerate(series.coeffs):
        if not c:
            continue
        mag = abs(c)
        if n == 0:
            body = fmt(mag)
        else:
            mono = "z" if n == 1 else f"z^{n}"
            body = mono if mag == 1 else f"{fmt(mag)}*{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        text = "0"
    else:
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        text += "".join(f" {s} {b}" for s, b in terms[1:])
    return f"{text} + O(z^{series.order + 1})"


def _cmd_series(a, out):
    series = expansions.expand(a.function, a.exponent, a.order, a.method)
    if a.format == "json":
        payload = {"order": series.order, "coefficients": [fmt(c) for c in series.coeffs]}
        print(json.dumps(payload), file=out)
    elif a.format == "csv":
        print("power,coefficient", file=out)
        for n, c in enumerate(series.coeffs):
            if c:
                print(f"{n},{fmt(c)}", file=out)
    else:
        print(_format_plain(series), file=out)


def _cmd_verify(a, out):
    report = identities.run_identity(a.identity, a.max)
    print(report.summary(), file=out)
    for indices, lhs, rhs in report.counterexamples:
        shown = ", ".join(str(i) for i in indices)
        print(f"  counterexample ({shown}): lhs={fmt(lhs)} rhs={fmt(rhs)}", file=out)
    return EXIT_OK if report.verified else EXIT_COUNTEREXAMPLE


def _cmd_eval(a, out):
    series = expansions.expand(a.function, a.exponent, a.order, "cfn")
    partial = numeric.eval_series_at(series, a.z)
    reference = numeric.reference_power_eval(a.function, a.exponent, a.z)
    print(f"partial_sum={partial!r}", file=out)
    print(f"reference={reference!r}", file=out)
    print(f"abs_error={abs(partial - reference)!r}", file=out)


COMMANDS = {
    "stirling2": _cmd_stirling2,
    "weighted": _cmd_weighted,
    "cfn": _cmd_cfn,
    "bell": _cmd_bell,
    "series": _cmd_series,
    "verify": _cmd_verify,
    "eval": _cmd_eval,
}


def _attach_negative_values(argv):
    fixed = []
    for item in argv:
        if fixed and fixed[-1].startswith("--") and "=" not in fixed[-1] \
                and _NEGATIVE_VALUE.match(item):
            fixed[-1] = f"{fixed[-1]}={item}"
        else:
            fixed.append(item)
    return fixed


def run_command(argv, out=None, err=None):
    """Run one CLI invocation and return its exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = _build_parser()
    old_stdout, old_stderr = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err  # argparse writes usage/help to these
    try:
        try:
            args = parser.parse_args(_attach_negative_values(list(argv)))
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else EXIT_USAGE
        try:
            status = COMMANDS[args.command](args, out)
        except (UsageError, ValueError) as exc:
            parser.print_usage(err)
            print(f"sincpow {args.command}: error: {exc}", file=err)
            return EXIT_USAGE
    finally:
        sys.stdout, sys.stderr = old_stdout, old_stderr
    return EXIT_OK if status is None else status


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
