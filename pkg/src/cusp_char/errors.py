"""Exception hierarchy shared by the engine, the oracle and the CLI."""


class CuspCharError(Exception):
    """Base class for every error raised by this package."""


class DegeneratePrecision(CuspCharError):
    """An operation would leave no certified coefficient at all."""


class UnknownOrder(CuspCharError):
    """A series has no certified order (all known coefficients vanish)."""


class SmoothOrInvalid(CuspCharError):
    """The germ is smooth (multiplicity 1) or not a germ at the origin."""


class NonInjective(CuspCharError):
    """Some P_k vanishes identically: the map factors through t -> t^d."""

    def __init__(self, covering_degree, traces=()):
        self.covering_degree = covering_degree
        self.traces = list(traces)
        super().__init__(
            f"parametrization is not one to one (covering degree {covering_degree})")


class InsufficientPrecision(CuspCharError):
    """The inputs are truncated too low to certify the next exponent.

    ``needed_bound`` is the smallest Puiseux exponent that must become
    certified to decide the pending step: y truncated at ``needed_bound``
    (x at ``needed_bound - q + p``).  ``covering_hint`` is the running gcd at
    the point of failure, i.e. the covering degree should the map turn out
    to be non-injective.
    """

    def __init__(self, needed_bound, traces=(), covering_hint=None):
        self.needed_bound = needed_bound
        self.traces = list(traces)
        self.covering_hint = covering_hint
        super().__init__(f"insufficient precision: need truncation >= {needed_bound}")


class MaxStepsExceeded(CuspCharError):
    def __init__(self, max_steps, traces=()):
        self.max_steps = max_steps
        self.traces = list(traces)
        super().__init__(f"no conclusion after {max_steps} P_k steps")


class IncompleteSequence(CuspCharError):
    """The exponent gcd never reached 1 over the supplied exponents."""

    def __init__(self, gcd, data=None):
        self.gcd = gcd
        self.data = data
        super().__init__(f"exponent gcd stuck at {gcd}")


class ParseError(CuspCharError, ValueError):
    """Malformed series expression or input document."""

    def __init__(self, message, offset=None, expected=()):
        self.offset = offset
        self.expected = tuple(expected)
        where = "" if offset is None else f" at offset {offset}"
        want = f" (expected {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message}{where}{want}")


class ExpressionSyntaxError(ParseError):
    pass


class ZeroDenominator(ParseError):
    pass
