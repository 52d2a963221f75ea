"""Reports produced by the CLI commands, with a lossless JSON form."""

from dataclasses import asdict, dataclass, field
from fractions import Fraction
import json

from .series import format_rational

EXIT_CODES = {
    "ok": 0,
    "input_error": 1,
    "smooth_or_invalid": 1,
    "non_injective": 2,
    "insufficient_precision": 3,
    "max_steps_exceeded": 3,
    "mismatch": 4,
}


@dataclass(frozen=True)
class Status:
    kind: str = "ok"
    covering_degree: object = None
    needed_bound: object = None
    message: str = ""

    @property
    def exit_code(self):
        return EXIT_CODES[self.kind]

    def __str__(self):
        if self.kind == "non_injective":
            return f"NonInjective({self.covering_degree})"
        if self.kind == "insufficient_precision":
            return f"InsufficientPrecision({self.needed_bound})"
        return self.kind


@dataclass(frozen=True)
class Step:
    k: int
    order: int
    rk: int
    leading: Fraction


@dataclass(frozen=True)
class Report:
    command: str
    status: Status = field(default_factory=Status)
    p: object = None
    q: object = None
    swapped: bool = False
    r_sequence: tuple = ()
    char_seq: object = None
    gcd_chain: tuple = ()
    inessential: tuple = ()
    coefficients: tuple = ()
    steps: tuple = ()
    certified_bound: object = None
    timing: tuple = ()
    checks: tuple = ()

    @property
    def exit_code(self):
        return self.status.exit_code

    def to_dict(self):
        d = asdict(self)
        d["status"] = {k: v for k, v in asdict(self.status).items() if v not in (None, "")}
        d["coefficients"] = [[s, format_rational(c)] for s, c in self.coefficients]
        d["steps"] = [{"k": s.k, "order": s.order, "r": s.rk,
                       "leading": format_rational(s.leading)} for s in self.steps]
        d["r_sequence"] = list(self.r_sequence)
        d["gcd_chain"] = list(self.gcd_chain)
        d["inessential"] = list(self.inessential)
        d["timing"] = {name: seconds for name, seconds in self.timing}
        d["checks"] = [[name, ok] for name, ok in self.checks]
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d):
        return cls(
            command=d["command"],
            status=Status(**d["status"]),
            p=d["p"],
            q=d["q"],
            swapped=d["swapped"],
            r_sequence=tuple(d["r_sequence"]),
            char_seq=d["char_seq"],
            gcd_chain=tuple(d["gcd_chain"]),
            inessential=tuple(d["inessential"]),
            coefficients=tuple((s, Fraction(c)) for s, c in d["coefficients"]),
            steps=tuple(Step(s["k"], s["order"], s["r"], Fraction(s["leading"]))
                        for s in d["steps"]),
            certified_bound=d["certified_bound"],
            timing=tuple(d["timing"].items()),
            checks=tuple((name, ok) for name, ok in d["checks"]),
        )

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def render(self):
        """Human-readable text; coefficients are printed as exact fractions."""
        lines = [f"command: {self.command}", f"status: {self.status}"]
        if self.status.message:
            lines.append(f"  {self.status.message}")
        if self.p is not None:
            swap = "  (x and y swapped)" if self.swapped else ""
            lines.append(f"p = {self.p}, q = {self.q}{swap}")
        if self.r_sequence:
            lines.append("r-sequence: " + ", ".join(map(str, self.r_sequence)))
        if self.char_seq:
            lines.append(f"characteristic sequence: {self.char_seq}")
        if self.gcd_chain:
            lines.append("gcd chain: " + " > ".join(map(str, self.gcd_chain)))
        if self.inessential:
            lines.append("inessential: " + ", ".join(map(str, self.inessential)))
        if self.certified_bound is not None:
            lines.append(f"certified up to exponent {self.certified_bound}")
        if self.steps:
            lines.append("steps:")
            for s in self.steps:
                lines.append(f"  k={s.k}  ord P_{s.k} = {s.order}  r_{s.k} = {s.rk}"
                             f"  leading = {format_rational(s.leading)}")
        if self.coefficients:
            lines.append("normalized Puiseux coefficients:")
            for s, c in self.coefficients:
                lines.append(f"  c~_{s} = {format_rational(c)}")
        for name, ok in self.checks:
            lines.append(f"check {name}: {'ok' if ok else 'FAILED'}")
        for name, seconds in self.timing:
            lines.append(f"time {name}: {seconds * 1000:.2f} ms")
        return "\n".join(lines)
