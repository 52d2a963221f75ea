"""Series expressions and input documents.

Expressions follow the notation used for hand-written parametrizations::

    series := ["-"] term (("+" | "-") term)*
    term   := [coef ["*"]] ["t" ["^" nat]] | coef
    coef   := ["-"] nat ["/" nat]

for example ``t^12 + t^13 + 37/28 t^14``.  Whitespace between tokens is
ignored.  Documents are JSON objects (see :func:`parse_document`) or two
``x = ...`` / ``y = ...`` lines.
"""

from dataclasses import dataclass
from fractions import Fraction
import json
import re

from .errors import ExpressionSyntaxError, ParseError, ZeroDenominator
from .series import EXACT, TruncSeries

__all__ = [
    "InputDocument",
    "parse_document",
    "parse_series_expression",
    "parse_term_list",
    "render_series",
    "term_list",
]

_TOKEN = re.compile(r"\s*(?:(\d+)|(\S))")


def _tokenize(src):
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(src, pos)
        if not m:
            break
        if m.group(1) is not None:
            toks.append(("nat", int(m.group(1)), m.start(1)))
        else:
            ch = m.group(2)
            if ch not in "t^/*+-":
                raise ExpressionSyntaxError(f"unexpected character {ch!r}", m.start(2))
            toks.append((ch, ch, m.start(2)))
        pos = m.end()
    toks.append(("end", None, len(src)))
    return toks


class _Parser:
    def __init__(self, src):
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0]

    def take(self, *kinds):
        kind, val, off = self.toks[self.i]
        if kind not in kinds:
            shown = "end of input" if kind == "end" else repr(val)
            raise ExpressionSyntaxError(f"unexpected {shown}", off,
                                        ["natural number" if k == "nat" else repr(k) for k in kinds])
        self.i += 1
        return val, off

    def coef(self):
        neg = False
        if self.peek() == "-":
            self.take("-")
            neg = True
        num, _ = self.take("nat")
        den = 1
        if self.peek() == "/":
            self.take("/")
            den, off = self.take("nat")
            if den == 0:
                raise ZeroDenominator("zero denominator", off)
        c = Fraction(num, den)
        return -c if neg else c

    def term(self):
        if self.peek() not in ("t", "nat", "-"):
            self.take("nat", "t", "-")
        if self.peek() == "t":
            self.take("t")
            return self.power(), Fraction(1)
        c = self.coef()
        if self.peek() == "*":
            self.take("*")
            self.take("t")
            return self.power(), c
        if self.peek() == "t":
            self.take("t")
            return self.power(), c
        return 0, c

    def power(self):
        if self.peek() == "^":
            self.take("^")
            e, _ = self.take("nat")
            return e
        return 1

    def series(self):
        terms = []
        sign = 1
        if self.peek() == "-" and self.toks[self.i + 1][0] == "t":
            self.take("-")
            sign = -1
        e, c = self.term()
        terms.append((e, sign * c))
        while self.peek() != "end":
            op, _ = self.take("+", "-")
            e, c = self.term()
            terms.append((e, c if op == "+" else -c))
        return terms


def parse_series_expression(src):
    """Parse an expression into an exact series; repeated powers are summed."""
    return TruncSeries(_Parser(src).series())


def render_series(f):
    """Inverse of :func:`parse_series_expression` on the stored terms."""
    return str(f)


def term_list(f):
    """``[[exp, "num/den"], ...]`` with increasing exponents."""
    out = []
    for e, c in f.items():
        out.append([e, str(c)])
    return out


def parse_term_list(items):
    terms = []
    last = -1
    for item in items:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ParseError(f"term must be [exponent, coefficient], got {item!r}")
        e, c = item
        if isinstance(e, bool) or not isinstance(e, int) or e < 0:
            raise ParseError(f"bad exponent {e!r}")
        if e <= last:
            raise ParseError(f"exponents must be strictly increasing, got {e} after {last}")
        last = e
        if isinstance(c, bool) or isinstance(c, float):
            raise ParseError(f"coefficient {c!r} must be an integer or a 'num/den' string")
        if isinstance(c, str):
            if not re.fullmatch(r"\s*-?\d+(\s*/\s*\d+)?\s*", c):
                raise ParseError(f"bad coefficient {c!r}")
            num, _, den = c.partition("/")
            if den and int(den) == 0:
                raise ZeroDenominator(f"zero denominator in {c!r}")
            c = Fraction(int(num), int(den) if den else 1)
        elif not isinstance(c, int):
            raise ParseError(f"bad coefficient {c!r}")
        terms.append((e, c))
    return TruncSeries(terms)


def _series_field(value, name):
    if isinstance(value, str):
        return parse_series_expression(value)
    if isinstance(value, list):
        return parse_term_list(value)
    raise ParseError(f"{name!r} must be an expression string or a term list")


def _truncation(value):
    if value is None or value == "exact":
        return EXACT
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ParseError(f"truncation must be a non-negative int or 'exact', got {value!r}")
    return value


@dataclass(frozen=True)
class InputDocument:
    x: TruncSeries
    y: TruncSeries
    truncation: object = EXACT
    max_steps: object = None
    report_coefficients: bool = False
    output_format: str = "human"

    def series(self):
        """x and y with the document truncation applied."""
        if self.truncation == EXACT:
            return self.x, self.y
        return self.x.truncate(self.truncation), self.y.truncate(self.truncation)

    def to_json(self):
        doc = {"x": term_list(self.x), "y": term_list(self.y),
               "truncation": "exact" if self.truncation == EXACT else self.truncation}
        if self.max_steps is not None:
            doc["max_steps"] = self.max_steps
        return doc


_LINE = re.compile(r"\s*([xy])\s*(?:\(\s*t\s*\))?\s*=\s*(.*)$")


def parse_document(text):
    """Read an input document from JSON or from ``x = ...`` / ``y = ...`` lines.

    JSON keys: ``x``, ``y`` (expression string or ``[[exp, "coef"], ...]``),
    optional ``truncation`` (int or ``"exact"``), ``max_steps``, ``coeffs``
    and ``format``.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            raw = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
        missing = {"x", "y"} - raw.keys()
        if missing:
            raise ParseError(f"missing keys: {', '.join(sorted(missing))}")
        max_steps = raw.get("max_steps")
        if max_steps is not None and (isinstance(max_steps, bool)
                                      or not isinstance(max_steps, int) or max_steps < 1):
            raise ParseError(f"max_steps must be a positive int, got {max_steps!r}")
        fmt = raw.get("format", "human")
        if fmt not in ("human", "json"):
            raise ParseError(f"format must be 'human' or 'json', got {fmt!r}")
        return InputDocument(
            x=_series_field(raw["x"], "x"),
            y=_series_field(raw["y"], "y"),
            truncation=_truncation(raw.get("truncation")),
            max_steps=max_steps,
            report_coefficients=bool(raw.get("coeffs", False)),
            output_format=fmt,
        )
    found = {}
    for line in stripped.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        m = _LINE.match(line)
        if not m:
            raise ParseError(f"expected 'x = ...' or 'y = ...', got {line.strip()!r}")
        found[m.group(1)] = parse_series_expression(m.group(2))
    if set(found) != {"x", "y"}:
        raise ParseError("document must define both x and y")
    return InputDocument(x=found["x"], y=found["y"])
