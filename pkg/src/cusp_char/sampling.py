"""Seeded random parametrizations for equivalence testing and benchmarks.

Structured samples follow a divisor chain p = d_0 > d_1 > ... > d_m = 1:
x is a series in t^(d_1), and y carries one term at an exponent e_i with
gcd(d_(i-1), e_i) = d_i for every level, plus optional filler terms whose
exponents are multiples of the current gcd.  The designed characteristic
sequence is then (p; e_1, ..., e_m).  Generic samples use unconstrained
supports.
"""

from fractions import Fraction
import math
import random

from .series import TruncSeries

__all__ = ["random_coefficient", "random_parametrization", "sample_cases"]


def random_coefficient(rng, size=5):
    num = rng.choice([n for n in range(-size, size + 1) if n])
    return Fraction(num, rng.randint(1, 4))


def _divisor_chain(rng, p):
    chain = [p]
    while chain[-1] > 1:
        d = chain[-1]
        chain.append(rng.choice([e for e in range(1, d) if d % e == 0]))
    return chain


def _structured(rng, p, max_degree):
    chain = _divisor_chain(rng, p)
    d1 = chain[1]
    x = {p: random_coefficient(rng)}
    for _ in range(rng.randint(0, 3)):
        e = p + d1 * rng.randint(1, 6)
        if e <= max_degree:
            x[e] = random_coefficient(rng)
    y = {}
    if rng.random() < 0.3:
        y[p * rng.randint(1, 2)] = random_coefficient(rng)
    prev = max([p] + list(y))
    designed = []
    for prev_d, d in zip(chain, chain[1:]):
        step = prev_d // d
        k = (prev + rng.randint(0, 4)) // d + 1
        while math.gcd(k, step) != 1:
            k += 1
        e = k * d
        if e > max_degree:
            return None
        y[e] = random_coefficient(rng)
        designed.append(e)
        # filler divisible by the new gcd: inessential, never cancels e_(i+1)
        if rng.random() < 0.4:
            f = (e // d + rng.randint(1, 3)) * d
            if f <= max_degree:
                y[f] = random_coefficient(rng)
        prev = max(y)
    # a y term at a multiple of p mixes with the x tail below e_1
    mixed = len(x) > 1 and min(y) % p == 0
    return TruncSeries(x), TruncSeries(y), None if mixed else (p, tuple(designed))


def _generic(rng, p, max_degree):
    x = {p: random_coefficient(rng)}
    for e in rng.sample(range(p + 1, max_degree + 1), rng.randint(0, 3)):
        x[e] = random_coefficient(rng)
    q = rng.randint(p + 1, min(max_degree, 3 * p))
    y = {q: random_coefficient(rng)}
    for e in rng.sample(range(q + 1, max_degree + 1), min(3, max_degree - q)):
        y[e] = random_coefficient(rng)
    exps = list(x) + list(y)
    if math.gcd(*exps) != 1:
        y[max(y) + 1 if max(y) < max_degree else q + 1] = random_coefficient(rng)
    if math.gcd(*(list(x) + list(y))) != 1:
        return None
    return TruncSeries(x), TruncSeries(y), None


def random_parametrization(rng, p_min=2, p_max=12, max_degree=60, generic_rate=0.25):
    """Draw ``(x, y, designed)`` with exact polynomial x, y.

    ``designed`` is ``(p, (e_1, ..., e_m))`` for structured samples and
    ``None`` for generic ones.  The gcd of all exponents of x and y is 1.
    """
    while True:
        p = rng.randint(p_min, p_max)
        if rng.random() < generic_rate:
            out = _generic(rng, p, max_degree)
        else:
            out = _structured(rng, p, max_degree)
        if out is not None:
            return out


def sample_cases(n, seed=20240611, **kwargs):
    """``n`` reproducible samples; the default seed is the documented one."""
    rng = random.Random(seed)
    return [random_parametrization(rng, **kwargs) for _ in range(n)]
