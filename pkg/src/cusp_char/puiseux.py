"""Classical Puiseux expansion of a parametrized germ, used as an oracle.

Write x = a0 t^p h(t) with h(0) = 1 and put u = t h(t)^(1/p), so that
x = a0 u^p exactly.  Reverting u(t) and substituting into y gives
y = sum_s c~_s u^s, where c~_s = c_s a0^(s/p) are the normalized Puiseux
coefficients.  Everything is exact rational arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction

from .engine import extract_characteristic
from .errors import IncompleteSequence, InsufficientPrecision
from .series import EXACT, TruncSeries

__all__ = [
    "PuiseuxData",
    "compose",
    "puiseux_characteristic",
    "puiseux_expand",
    "revert_root",
    "reversion",
    "unit_pow",
    "unit_root",
]


@dataclass(frozen=True)
class PuiseuxData:
    coefficients: dict
    certified_bound: int
    char_seq: object = None

    @property
    def exponents(self):
        return sorted(self.coefficients)


def _check_unit(h):
    if h.is_zero() or h.exponents[0] != 0 or h.leading()[1] != 1:
        raise ValueError("expected a unit series with constant term 1")


def unit_pow(h, alpha, bound):
    """h^alpha for a unit series h and rational alpha, up to t^bound.

    Uses the recurrence from h F' = alpha h' F:
    m F_m = sum_{k=1}^{m} ((alpha + 1) k - m) h_k F_{m-k}.
    """
    _check_unit(h)
    alpha = Fraction(alpha)
    n = min(bound, h.prec)
    hk = [(e, c) for e, c in h.items() if e]
    F = [Fraction(1)] + [Fraction(0)] * n
    a1 = alpha + 1
    for m in range(1, n + 1):
        s = Fraction(0)
        for k, c in hk:
            if k > m:
                break
            f = F[m - k]
            if f:
                s += (a1 * k - m) * c * f
        F[m] = s / m
    return TruncSeries(enumerate(F), n)


def unit_root(h, p, bound=None):
    """The unit series g with g^p = h, certified up to min(bound, prec h)."""
    if p < 1:
        raise ValueError("root index must be >= 1")
    if p == 1:
        _check_unit(h)
        return h if bound is None else h.truncate(bound)
    if bound is None:
        if h.is_exact:
            if len(h) == 1:
                return h
            raise ValueError("an explicit bound is needed for the root of an exact series")
        bound = h.prec
    return unit_pow(h, Fraction(1, p), bound)


def reversion(u, bound=None):
    """Compositional inverse t(u) of u(t) = t + ..., by Lagrange inversion.

    [u^n] t(u) = (1/n) [t^(n-1)] (t / u(t))^n, with the powers obtained from
    the unit-power recurrence applied to u(t)/t and exponent -n.
    """
    if u.is_zero() or u.exponents[0] != 1 or u.leading()[1] != 1:
        raise ValueError("reversion needs u = t + (higher terms)")
    if bound is None:
        if u.is_exact:
            if len(u) == 1:
                return u
            raise ValueError("an explicit bound is needed to revert an exact series")
        bound = u.prec
    n_max = min(bound, u.prec)
    psi = u.shift(-1)
    coeffs = {1: Fraction(1)}
    for n in range(2, n_max + 1):
        phi_n = unit_pow(psi, -n, n - 1)
        c = phi_n.coefficient(n - 1) / n
        if c:
            coeffs[n] = c
    return TruncSeries(coeffs, n_max)


def revert_root(h, p, bound):
    """t(w) for w = t * h^(1/p), without forming w.

    Lagrange inversion gives [w^n] t = (1/n) [t^(n-1)] h^(-n/p); the
    powers come straight from the sparse h, which keeps this quadratic.
    """
    _check_unit(h)
    n_max = min(bound, h.prec + 1)
    coeffs = {1: Fraction(1)}
    for n in range(2, n_max + 1):
        c = unit_pow(h, Fraction(-n, p), n - 1).coefficient(n - 1) / n
        if c:
            coeffs[n] = c
    return TruncSeries(coeffs, n_max)


def _compose_prec(f, g):
    vf, vg = f._val(), g._val()
    if vf == EXACT:
        return EXACT
    vf = max(vf, 1)
    return min(g.prec + (vf - 1) * vg, (f.prec + 1) * vg - 1)


def compose(f, g, bound=None):
    """f(g(t)) for ord g >= 1, certified where both inputs allow it.

    A coefficient of degree D is certified when D <= prec g + (ord f - 1) ord g
    and D < (prec f + 1) ord g; ``bound`` caps the work further.
    """
    if g.order() is None:
        raise ValueError("order of the inner series is not certified")
    if not g.is_zero() and g.exponents[0] < 1:
        raise ValueError("inner series must vanish at t = 0")
    prec = _compose_prec(f, g)
    if bound is not None:
        prec = min(prec, bound)
    gg = TruncSeries(g.items()).truncate(prec) if prec != EXACT else TruncSeries(g.items())
    out = TruncSeries((), prec)
    power = TruncSeries({0: 1})
    done = 0
    for e, c in f.items():
        if e and gg.is_zero():
            break
        while done < e:
            power = power * gg
            if prec != EXACT:
                power = power.truncate(prec)
            done += 1
        if prec != EXACT and power.is_zero() and e:
            break
        out = out + TruncSeries(power.items(), prec).scale(c)
    return out


def certifiable_bound(par):
    """Largest s for which the inputs determine c~_s.

    c~_{q+j} depends on the coefficients of y up to t^(q+j) and of x up to
    t^(p+j).
    """
    return min(par.y.prec, par.x.prec - par.p + par.q)


def puiseux_expand(par, bound):
    """Normalized Puiseux coefficients c~_s for s <= bound.

    Raises InsufficientPrecision when the inputs do not certify up to
    ``bound``, and IncompleteSequence (carrying the partial data) when the
    exponent gcd has not reached 1 by then.
    """
    if bound < par.q:
        raise ValueError(f"bound {bound} is below the order q = {par.q}")
    avail = certifiable_bound(par)
    if bound > avail:
        raise InsufficientPrecision(bound, covering_hint=None)
    h = par.x.shift(-par.p).scale(1 / par.a0)
    tw = revert_root(h, par.p, bound - par.q + 1)
    Y = compose(par.y, tw, bound)
    assert Y.prec >= bound, (Y.prec, bound)
    coeffs = {s: c for s, c in Y.items() if s <= bound}
    try:
        cs = extract_characteristic(par.p, sorted(coeffs))
    except IncompleteSequence as exc:
        raise IncompleteSequence(exc.gcd, PuiseuxData(coeffs, bound)) from None
    return PuiseuxData(coeffs, bound, cs)


def puiseux_characteristic(par, bound=None, max_bound=256):
    """Expand far enough to settle the characteristic sequence.

    Truncated inputs are expanded once, to their certifiable bound.  Exact
    inputs are expanded to successively doubled bounds up to ``max_bound``.
    A gcd that never drops to 1 is reported as InsufficientPrecision with
    the stuck gcd as covering hint: the expansion alone cannot certify
    non-injectivity.
    """
    avail = certifiable_bound(par)
    if bound is None:
        if avail == EXACT:
            bound = par.q + 2 * par.p
        else:
            bound = avail
            max_bound = avail
    while True:
        try:
            return puiseux_expand(par, bound)
        except IncompleteSequence as exc:
            if bound >= max_bound:
                raise InsufficientPrecision(bound + 1, covering_hint=exc.gcd) from exc
            bound = min(2 * bound, max_bound)
