"""Characteristic sequence of a cuspidal germ via the P_k recursion.

Starting from P_0 = y and P_1 = y'x - (q/p) x'y, each

    P_{k+1} = x x' P_k' - ((r_k/p) x'^2 + (2k-1) x'' x) P_k

has order r_{k+1} + (2k+1)(p-1), where r_0 < r_1 < ... are exactly the
exponents s with a nonzero Puiseux coefficient.  The recursion stops as soon
as the gcd of p and the r_k reaches 1.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
import math

from .errors import (
    IncompleteSequence,
    InsufficientPrecision,
    MaxStepsExceeded,
    NonInjective,
    SmoothOrInvalid,
    UnknownOrder,
)
from .series import EXACT, TruncSeries

DEFAULT_EXACT_STEPS = 64

__all__ = [
    "CharSequence",
    "EngineResult",
    "Parametrization",
    "PkTrace",
    "extract_characteristic",
    "p1_step",
    "pk_step",
    "recover_coefficient",
    "run_algorithm",
    "validate",
]


@dataclass(frozen=True)
class Parametrization:
    x: TruncSeries
    y: TruncSeries
    p: int
    q: int
    a0: Fraction
    b0: Fraction
    swapped: bool = False

    @property
    def input_bound(self):
        """Smallest finite input precision, or EXACT."""
        return min(self.x.prec, self.y.prec)

    @cached_property
    def dx(self):
        return self.x.derivative()

    @cached_property
    def x_dx(self):
        return self.x * self.dx

    @cached_property
    def dx_sq(self):
        return self.dx * self.dx

    @cached_property
    def ddx_x(self):
        return self.dx.derivative() * self.x


@dataclass(frozen=True)
class PkTrace:
    k: int
    Pk: TruncSeries
    rk: int
    leading: Fraction
    c_tilde: Fraction

    @property
    def order(self):
        return self.Pk.order()


@dataclass(frozen=True)
class CharSequence:
    p: int
    q_list: tuple
    gcd_chain: tuple

    def __str__(self):
        return f"({self.p};{','.join(map(str, self.q_list))})"


@dataclass(frozen=True)
class EngineResult:
    par: Parametrization
    r_sequence: tuple
    traces: tuple
    char_seq: CharSequence
    inessential: tuple = field(default=())

    @property
    def coefficients(self):
        """Normalized Puiseux coefficients {r_k: c~_{r_k}}."""
        return {t.rk: t.c_tilde for t in self.traces}


def validate(x, y):
    """Check the standing hypotheses and order the pair so that p <= q."""
    ox, oy = x.order(), y.order()
    if ox is None or oy is None:
        raise UnknownOrder("order of x or y is not certified by the given truncation")
    if ox == math.inf or oy == math.inf:
        raise SmoothOrInvalid("x and y must both be nonzero")
    swapped = ox > oy
    if swapped:
        x, y, ox, oy = y, x, oy, ox
    if ox <= 1:
        raise SmoothOrInvalid(
            f"multiplicity {ox}: " + ("germ not at the origin" if ox == 0 else "germ is smooth"))
    return Parametrization(x=x, y=y, p=ox, q=oy, a0=x.leading()[1], b0=y.leading()[1],
                           swapped=swapped)


def _shift(k, p):
    return (2 * k - 1) * (p - 1)


def _running_gcd(p, rs):
    return math.gcd(p, *rs)


def recover_coefficient(par, trace, earlier):
    """Normalized Puiseux coefficient c~_{r_k} = c_{r_k} a0^{r_k/p}.

    ``earlier`` holds r_0..r_{k-1}.  The leading coefficient of P_k equals
    prod_j (r_k - r_j) * p^(k-1) * a0^(2k-1) * c~_{r_k}.
    """
    k = trace.k
    if k == 0:
        return par.b0
    if len(earlier) != k:
        raise ValueError(f"step {k} needs {k} earlier exponents, got {len(earlier)}")
    denom = Fraction(par.p) ** (k - 1) * par.a0 ** (2 * k - 1)
    for r in earlier:
        denom *= trace.rk - r
    return trace.leading / denom


def _finish(par, k, P, rs, traces):
    v = P.order()
    d = _running_gcd(par.p, rs)
    if v is None:
        # ord P > prec(P), hence r_k > prec(P) - (2k-1)(p-1)
        needed = P.prec - _shift(k, par.p) + 1
        raise InsufficientPrecision(needed, traces, covering_hint=d)
    if v == math.inf:
        raise NonInjective(d, traces)
    rk = v - _shift(k, par.p)
    assert rk > rs[-1], f"r_{k}={rk} does not exceed r_{k - 1}={rs[-1]}"
    trace = PkTrace(k=k, Pk=P, rk=rk, leading=P.leading()[1], c_tilde=Fraction(0))
    c = recover_coefficient(par, trace, rs)
    return PkTrace(k=k, Pk=P, rk=rk, leading=trace.leading, c_tilde=c)


def _p0_trace(par):
    return PkTrace(k=0, Pk=par.y, rk=par.q, leading=par.b0, c_tilde=par.b0)


def p1_step(par, traces=None):
    """P_1 = y'x - (q/p) x'y and r_1 = ord P_1 - (p-1)."""
    traces = [_p0_trace(par)] if traces is None else traces
    P = par.y.derivative() * par.x - (par.dx * par.y).scale(Fraction(par.q, par.p))
    return _finish(par, 1, P, [par.q], traces)


def pk_step(par, prev, earlier, traces=None):
    """P_{k+1} from P_k; ``earlier`` is r_0..r_{k-1} (r_k is ``prev.rk``)."""
    k = prev.k
    if k < 1:
        raise ValueError("pk_step starts from P_1; use p1_step first")
    P = prev.Pk
    corr = par.dx_sq.scale(Fraction(prev.rk, par.p)) + par.ddx_x.scale(2 * k - 1)
    nxt = par.x_dx * P.derivative() - corr * P
    rs = list(earlier) + [prev.rk]
    return _finish(par, k + 1, nxt, rs, traces if traces is not None else [prev])


def extract_characteristic(p, r_sequence):
    """Characteristic sequence from the increasing list of nonzero exponents."""
    rs = list(r_sequence)
    if any(b <= a for a, b in zip(rs, rs[1:])):
        raise ValueError(f"exponents must be strictly increasing: {rs}")
    d = p
    q_list = []
    chain = [p]
    for r in rs:
        if d == 1:
            break
        if r % d:
            if q_list:
                assert r > q_list[-1]
            q_list.append(r)
            d = math.gcd(d, r)
            chain.append(d)
    if d != 1:
        raise IncompleteSequence(d)
    return CharSequence(p=p, q_list=tuple(q_list), gcd_chain=tuple(chain))


def run_algorithm(par, max_steps=None):
    """Run the P_k recursion until the exponent gcd reaches 1.

    ``max_steps`` bounds the number of P_k computed (k >= 1); by default it
    is the input truncation bound, or 64 for exact inputs.
    """
    if max_steps is None:
        bound = par.input_bound
        max_steps = DEFAULT_EXACT_STEPS if bound == EXACT else max(int(bound), 1)
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    traces = [_p0_trace(par)]
    rs = [par.q]
    d = math.gcd(par.p, par.q)
    if d != 1:
        trace = p1_step(par, traces)
        while True:
            traces.append(trace)
            rs.append(trace.rk)
            d = math.gcd(d, trace.rk)
            if d == 1:
                break
            if trace.k >= max_steps:
                raise MaxStepsExceeded(max_steps, traces)
            trace = pk_step(par, trace, rs[:-1], traces)
    char_seq = extract_characteristic(par.p, rs)
    inessential = tuple(r for r in rs if r not in char_seq.q_list)
    return EngineResult(par=par, r_sequence=tuple(rs), traces=tuple(traces),
                        char_seq=char_seq, inessential=inessential)


def analyze(x, y, max_steps=None):
    """Validate ``(x, y)`` and run the recursion."""
    return run_algorithm(validate(x, y), max_steps)
