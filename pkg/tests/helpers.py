"""Transformations of parametrizations shared by the invariance tests."""

from fractions import Fraction

from cusp_char.puiseux import compose
from cusp_char.series import TruncSeries


def scale_t(f, lam):
    """f(lam * t), keeping the precision."""
    lam = Fraction(lam)
    return TruncSeries({e: c * lam ** e for e, c in f.items()}, f.prec)


def reparametrize(f, unit, bound):
    """f(t * unit(t)) certified up to t^bound."""
    return compose(f, unit.shift(1), bound)
