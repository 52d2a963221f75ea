"""Truncated power series in one variable t over the rationals.

Coefficients are stored sparsely as integer numerators over one common
denominator, so the inner loops of multiplication run on plain integers
(see :mod:`cusp_char.kernels`).  Every series carries a precision: either
``EXACT`` (all coefficients known, i.e. a polynomial) or an integer K
meaning the coefficients of t^e are certified for e <= K and unknown above.
"""

from bisect import bisect_right
from fractions import Fraction
import math
from numbers import Rational

from . import kernels
from .errors import DegeneratePrecision

EXACT = math.inf

__all__ = [
    "EXACT",
    "TruncSeries",
    "format_rational",
    "monomial",
    "series_add",
    "series_mul",
    "series_scale",
    "series_derivative",
    "series_order",
    "series_truncate",
]


def _as_rational(c):
    if isinstance(c, bool) or isinstance(c, float):
        raise TypeError(f"coefficients must be exact rationals, got {c!r}")
    if isinstance(c, (int, Rational, str)):
        return Fraction(c)
    raise TypeError(f"cannot use {c!r} as a coefficient")


def _check_prec(prec):
    if prec == EXACT:
        return EXACT
    if isinstance(prec, bool) or not isinstance(prec, int) or prec < 0:
        raise ValueError(f"precision must be EXACT or a non-negative int, got {prec!r}")
    return prec


def _limit(prec):
    return -1 if prec == EXACT else prec


def format_rational(c):
    """``'p/q'`` or ``'p'``; never a float."""
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class TruncSeries:
    """Immutable truncated power series with certified precision.

    ``terms`` is a mapping (or iterable of pairs) exponent -> coefficient.
    Duplicate exponents are summed, zero coefficients dropped, and terms
    above a finite ``prec`` discarded, since they carry no certified meaning.
    """

    __slots__ = ("_exps", "_nums", "_den", "_prec")

    def __init__(self, terms=(), prec=EXACT):
        prec = _check_prec(prec)
        items = terms.items() if hasattr(terms, "items") else terms
        acc = {}
        for e, c in items:
            if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                raise ValueError(f"exponents must be non-negative ints, got {e!r}")
            c = _as_rational(c)
            if e <= prec:
                acc[e] = acc.get(e, 0) + c
        exps = sorted(e for e, c in acc.items() if c)
        den = math.lcm(*(acc[e].denominator for e in exps)) if exps else 1
        nums = [acc[e].numerator * (den // acc[e].denominator) for e in exps]
        self._init(exps, nums, den, prec)

    def _init(self, exps, nums, den, prec):
        g = math.gcd(den, *nums) if nums else den
        if g != 1:
            den //= g
            nums = [n // g for n in nums]
        self._exps = tuple(exps)
        self._nums = tuple(nums)
        self._den = den
        self._prec = prec

    @classmethod
    def _raw(cls, exps, nums, den, prec):
        obj = cls.__new__(cls)
        obj._init(exps, nums, den, prec)
        return obj

    # -- inspection ---------------------------------------------------------

    @property
    def prec(self):
        return self._prec

    @property
    def is_exact(self):
        return self._prec == EXACT

    @property
    def exponents(self):
        return self._exps

    @property
    def terms(self):
        return dict(self.items())

    def items(self):
        den = self._den
        for e, n in zip(self._exps, self._nums):
            yield e, Fraction(n, den)

    def coefficient(self, e):
        if e > self._prec:
            raise ValueError(f"coefficient of t^{e} is not certified (prec {self._prec})")
        i = bisect_right(self._exps, e) - 1
        if i >= 0 and self._exps[i] == e:
            return Fraction(self._nums[i], self._den)
        return Fraction(0)

    def leading(self):
        """(exponent, coefficient) of the lowest stored term."""
        if not self._exps:
            raise ValueError("zero series has no leading term")
        return self._exps[0], Fraction(self._nums[0], self._den)

    @property
    def degree(self):
        return self._exps[-1] if self._exps else None

    def is_zero(self):
        return not self._exps

    def order(self):
        """Certified order of vanishing at t = 0.

        Returns the order as an int, ``math.inf`` when the series is known
        to vanish identically, or ``None`` when every certified coefficient
        is zero but the series is only known up to a finite bound.
        """
        if self._exps:
            return self._exps[0]
        return math.inf if self._prec == EXACT else None

    def _val(self):
        # lower bound on the true valuation, used for precision bookkeeping
        if self._exps:
            return self._exps[0]
        return EXACT if self._prec == EXACT else self._prec + 1

    def __len__(self):
        return len(self._exps)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self._exps == other._exps and self._nums == other._nums
                and self._den == other._den and self._prec == other._prec)

    def __hash__(self):
        return hash((self._exps, self._nums, self._den, self._prec))

    def same_terms(self, other, upto=EXACT):
        """True when both series agree on every coefficient of degree <= upto."""
        a = self if upto == EXACT else self.truncate(upto)
        b = other if upto == EXACT else other.truncate(upto)
        return a._exps == b._exps and a._nums == b._nums and a._den == b._den

    def __repr__(self):
        p = "EXACT" if self.is_exact else str(self._prec)
        return f"TruncSeries({str(self)!r}, prec={p})"

    def __str__(self):
        if not self._exps:
            return "0"
        out = []
        for e, c in self.items():
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if e == 0:
                body = format_rational(c)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if c == 1 else f"{format_rational(c)}*{mono}"
            if not out:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)

    # -- arithmetic -------------------------------------------------------------

    def __neg__(self):
        return TruncSeries._raw(self._exps, [-n for n in self._nums], self._den, self._prec)

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        prec = min(self._prec, other._prec)
        den = math.lcm(self._den, other._den)
        exps, nums = kernels.lincomb_terms(
            self._exps, self._nums, den // self._den,
            other._exps, other._nums, den // other._den)
        if prec != EXACT and exps and exps[-1] > prec:
            cut = bisect_right(exps, prec)
            exps, nums = exps[:cut], nums[:cut]
        return TruncSeries._raw(exps, nums, den, prec)

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            prec = min(self._prec + other._val(), other._prec + self._val())
            exps, nums = kernels.mul_terms(
                self._exps, self._nums, other._exps, other._nums, _limit(prec))
            return TruncSeries._raw(exps, nums, self._den * other._den, prec)
        try:
            c = _as_rational(other)
        except TypeError:
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def scale(self, c):
        c = _as_rational(c)
        if c == 0:
            return TruncSeries((), self._prec)
        return TruncSeries._raw(self._exps, [n * c.numerator for n in self._nums],
                                self._den * c.denominator, self._prec)

    def derivative(self):
        if self._prec == 0:
            raise DegeneratePrecision("derivative of a series certified only at t^0")
        exps = []
        nums = []
        for e, n in zip(self._exps, self._nums):
            if e:
                exps.append(e - 1)
                nums.append(n * e)
        return TruncSeries._raw(exps, nums, self._den, self._prec - 1)

    def truncate(self, bound):
        bound = _check_prec(bound)
        if bound == EXACT:
            return self
        cut = bisect_right(self._exps, bound)
        return TruncSeries._raw(self._exps[:cut], self._nums[:cut], self._den,
                                min(self._prec, bound))

    def shift(self, n):
        """Multiply by t^n; negative n divides and requires ord >= -n."""
        if self._exps and self._exps[0] + n < 0:
            raise ValueError(f"cannot divide by t^{-n}: order is {self._exps[0]}")
        prec = self._prec + n
        if prec < 0:
            raise DegeneratePrecision("shift leaves no certified coefficient")
        return TruncSeries._raw([e + n for e in self._exps], self._nums, self._den, prec)


def monomial(e, c=1, prec=EXACT):
    return TruncSeries({e: c}, prec)


def series_add(f, g):
    return f + g


def series_mul(f, g):
    return f * g


def series_scale(f, c):
    return f.scale(c)


def series_derivative(f):
    return f.derivative()


def series_order(f):
    return f.order()


def series_truncate(f, bound):
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 0:
        raise ValueError(f"truncation bound must be a non-negative int, got {bound!r}")
    return f.truncate(bound)
