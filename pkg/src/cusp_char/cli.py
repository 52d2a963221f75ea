"""Command line front end: ``cusp-char analyze|oracle|check``.

Exit codes: 0 success, 1 input error (including smooth germs), 2 the
parametrization is not one to one, 3 insufficient precision or step budget.
``check`` exits 0 exactly when both engines agree and 4 otherwise.
"""

import argparse
from dataclasses import replace
from fractions import Fraction
import math
import random
import sys
import time

from .engine import run_algorithm, validate
from .errors import (
    CuspCharError,
    IncompleteSequence,
    InsufficientPrecision,
    MaxStepsExceeded,
    NonInjective,
    ParseError,
    SmoothOrInvalid,
    UnknownOrder,
)
from .parser import InputDocument, parse_document, parse_series_expression
from .puiseux import puiseux_characteristic
from .report import Report, Status, Step
from .sampling import random_parametrization
from .series import EXACT

__all__ = ["cmd_analyze", "cmd_check", "cmd_oracle", "main"]

DEFAULT_MAX_BOUND = 256


def _partial_chain(p, rs):
    chain = [p]
    for r in rs:
        d = math.gcd(chain[-1], r)
        if d != chain[-1]:
            chain.append(d)
    return tuple(chain)


def _validate(command, doc):
    x, y = doc.series()
    try:
        return validate(x, y), None
    except SmoothOrInvalid as exc:
        return None, Report(command, Status("smooth_or_invalid", message=str(exc)))
    except UnknownOrder as exc:
        # an all-zero truncation: the first term lies beyond the bound
        needed = min(s.prec for s in (x, y) if s.order() is None) + 1
        return None, Report(command, Status("insufficient_precision", needed_bound=needed,
                                            message=str(exc)))


def _engine(doc):
    """Run the P_k engine; returns (report, traces, certified range)."""
    par, early = _validate("analyze", doc)
    if early is not None:
        return early, (), None
    status = Status()
    char_seq = None
    inessential = ()
    try:
        res = run_algorithm(par, doc.max_steps)
        traces = res.traces
        char_seq = res.char_seq
        inessential = res.inessential
        upto = res.r_sequence[-1]
    except NonInjective as exc:
        traces = exc.traces
        status = Status("non_injective", covering_degree=exc.covering_degree, message=str(exc))
        upto = EXACT
    except InsufficientPrecision as exc:
        traces = exc.traces
        status = Status("insufficient_precision", covering_degree=exc.covering_hint,
                        needed_bound=exc.needed_bound, message=str(exc))
        upto = exc.needed_bound - 1
    except MaxStepsExceeded as exc:
        traces = exc.traces
        status = Status("max_steps_exceeded", message=str(exc))
        upto = traces[-1].rk
    rs = tuple(t.rk for t in traces)
    report = Report(
        command="analyze",
        status=status,
        p=par.p,
        q=par.q,
        swapped=par.swapped,
        r_sequence=rs,
        char_seq=str(char_seq) if char_seq else None,
        gcd_chain=char_seq.gcd_chain if char_seq else _partial_chain(par.p, rs),
        inessential=inessential,
        coefficients=tuple((t.rk, t.c_tilde) for t in traces) if doc.report_coefficients else (),
        steps=tuple(Step(t.k, t.Pk.order(), t.rk, t.leading) for t in traces if t.k),
    )
    return report, tuple(traces), upto


def _oracle(doc, max_bound=DEFAULT_MAX_BOUND):
    """Run the Puiseux expansion; returns (report, coefficients, certified bound)."""
    par, early = _validate("oracle", doc)
    if early is not None:
        return early, {}, None
    status = Status()
    char_seq = None
    try:
        data = puiseux_characteristic(par, max_bound=max_bound)
        coeffs, upto = data.coefficients, data.certified_bound
        char_seq = data.char_seq
        rs = tuple(s for s in sorted(coeffs) if s <= char_seq.q_list[-1])
    except InsufficientPrecision as exc:
        cause = exc.__cause__
        if isinstance(cause, IncompleteSequence) and cause.data is not None:
            coeffs, upto = cause.data.coefficients, cause.data.certified_bound
        else:
            coeffs, upto = {}, None
        rs = tuple(sorted(coeffs))
        status = Status("insufficient_precision", covering_degree=exc.covering_hint,
                        needed_bound=exc.needed_bound, message=str(exc))
    report = Report(
        command="oracle",
        status=status,
        p=par.p,
        q=par.q,
        swapped=par.swapped,
        r_sequence=rs,
        char_seq=str(char_seq) if char_seq else None,
        gcd_chain=char_seq.gcd_chain if char_seq else _partial_chain(par.p, rs),
        inessential=tuple(r for r in rs if char_seq and r not in char_seq.q_list),
        coefficients=tuple(sorted(coeffs.items())) if doc.report_coefficients else (),
        certified_bound=upto,
    )
    return report, coeffs, upto


def _timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def cmd_analyze(doc, timed=False):
    (report, _, _), dt = _timed(_engine, doc)
    if timed:
        report = replace(report, timing=(("engine", dt),))
    return report


def cmd_oracle(doc, timed=False, max_bound=DEFAULT_MAX_BOUND):
    (report, _, _), dt = _timed(_oracle, doc, max_bound)
    if timed:
        report = replace(report, timing=(("oracle", dt),))
    return report


def _leading_identity(par, traces, coeffs):
    """leading(P_k) == prod_j (r_k - r_j) * p^(k-1) * c~_{r_k} * a0^(2k-1)."""
    out = []
    for t in traces:
        if t.rk not in coeffs:
            out.append((f"leading_k{t.k}", False))
            continue
        if t.k == 0:
            out.append(("leading_k0", coeffs[t.rk] == t.leading))
            continue
        rhs = Fraction(par.p) ** (t.k - 1) * coeffs[t.rk] * par.a0 ** (2 * t.k - 1)
        for s in traces[:t.k]:
            rhs *= t.rk - s.rk
        out.append((f"leading_k{t.k}", t.leading == rhs))
    return out


def _status_agrees(a, b):
    if a.kind == b.kind:
        if a.kind == "insufficient_precision":
            return a.needed_bound == b.needed_bound
        return a.covering_degree == b.covering_degree or a.kind != "non_injective"
    # the expansion cannot certify non-injectivity; it stalls at the same gcd
    return (a.kind == "non_injective" and b.kind == "insufficient_precision"
            and a.covering_degree == b.covering_degree)


def cmd_check(doc, timed=False, max_bound=DEFAULT_MAX_BOUND):
    """Run both engines and compare verdict, r-sequence, characteristic
    sequence and the leading-coefficient identity at every step."""
    (eng, traces, eng_upto), t_eng = _timed(_engine, doc)
    full = InputDocument(doc.x, doc.y, doc.truncation, doc.max_steps, True, doc.output_format)
    (orc, coeffs, orc_upto), t_orc = _timed(_oracle, full, max_bound)
    checks = [("status", _status_agrees(eng.status, orc.status))]
    if eng_upto is not None and orc_upto is not None:
        common = min(eng_upto, orc_upto)
        eng_rs = [r for r in eng.r_sequence if r <= common]
        orc_rs = [s for s in sorted(coeffs) if s <= common]
        checks.append(("r_sequence", eng_rs == orc_rs))
        checks.append(("char_seq", eng.char_seq == orc.char_seq))
        par = validate(*doc.series())
        checks.extend(_leading_identity(par, [t for t in traces if t.rk <= orc_upto], coeffs))
    failed = [name for name, ok in checks if not ok]
    status = eng.status
    if failed:
        status = Status("mismatch", message=f"engines disagree on {failed[0]}: "
                        f"analyze says {eng.status}, oracle says {orc.status}")
    timing = (("engine", t_eng), ("oracle", t_orc)) if timed else ()
    return replace(eng, command="check", status=status, checks=tuple(checks), timing=timing,
                    certified_bound=orc_upto,
                    coefficients=eng.coefficients if doc.report_coefficients else ())


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # exit code 2 is reserved for non-injective parametrizations
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _truncation_arg(text):
    if text == "exact":
        return EXACT
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'exact', got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("truncation must be non-negative")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", metavar="FILE",
                        help="input document (JSON or 'x = ...' lines); '-' reads stdin")
    common.add_argument("-x", dest="x_expr", metavar="EXPR", help="x(t), e.g. 't^2'")
    common.add_argument("-y", dest="y_expr", metavar="EXPR", help="y(t), e.g. 't^3'")
    common.add_argument("--format", choices=["human", "json"])
    common.add_argument("--truncation", type=_truncation_arg, metavar="N|exact",
                        help="truncate x and y at t^N (default: exact polynomials)")
    common.add_argument("--max-steps", type=_positive, metavar="N")
    common.add_argument("--coeffs", action="store_true",
                        help="report normalized Puiseux coefficients")
    common.add_argument("--time", action="store_true", help="report wall-clock time")
    common.add_argument("--max-bound", type=_positive, default=DEFAULT_MAX_BOUND, metavar="N",
                        help="largest expansion order tried by the oracle on exact input")
    ap = _Parser(prog="cusp-char",
                 description="Characteristic sequence of a cuspidal plane curve germ.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("analyze", parents=[common], help="run the P_k recursion")
    sub.add_parser("oracle", parents=[common], help="run the classical Puiseux expansion")
    chk = sub.add_parser("check", parents=[common], help="run both and compare")
    chk.add_argument("--random", type=int, metavar="SEED",
                     help="check a random parametrization drawn with this seed")
    return ap


def _load(args):
    if getattr(args, "random", None) is not None:
        x, y, _ = random_parametrization(random.Random(args.random))
        doc = InputDocument(x, y)
    elif args.x_expr is not None or args.y_expr is not None:
        if args.x_expr is None or args.y_expr is None:
            raise ParseError("both -x and -y are required")
        doc = InputDocument(parse_series_expression(args.x_expr),
                            parse_series_expression(args.y_expr))
    else:
        src = args.input or "-"
        if src == "-":
            text = sys.stdin.read()
        else:
            with open(src, encoding="utf-8") as fh:
                text = fh.read()
        doc = parse_document(text)
    return InputDocument(
        x=doc.x,
        y=doc.y,
        truncation=args.truncation if args.truncation is not None else doc.truncation,
        max_steps=args.max_steps if args.max_steps is not None else doc.max_steps,
        report_coefficients=args.coeffs or doc.report_coefficients,
        output_format=args.format or doc.output_format,
    )


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        doc = _load(args)
    except (CuspCharError, OSError) as exc:
        report = Report(args.command, Status("input_error", message=str(exc)))
        out = report.to_json() if args.format == "json" else report.render()
        print(out)
        return report.exit_code
    if args.command == "analyze":
        report = cmd_analyze(doc, args.time)
        code = report.exit_code
    elif args.command == "oracle":
        report = cmd_oracle(doc, args.time, args.max_bound)
        code = report.exit_code
    else:
        report = cmd_check(doc, args.time, args.max_bound)
        code = 0 if all(ok for _, ok in report.checks) else 4
    print(report.to_json() if doc.output_format == "json" else report.render())
    return code


if __name__ == "__main__":
    sys.exit(main())
