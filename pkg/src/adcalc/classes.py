"""Exact eigenvalues, conjugacy classes as eigenvalue -> Young diagram maps,
alpha-truncation/extension, minimal markings and legs."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from . import young
from .errors import EmptyClass, NotAMarking, ParseError
from .young import YoungDiagram


@dataclass(frozen=True)
class Eigenvalue:
    """``modulus * exp(2*pi*i*phase)`` with rational modulus > 0 and phase in [0, 1)."""

    modulus: Fraction = Fraction(1)
    phase: Fraction = Fraction(0)

    def __post_init__(self):
        mod = Fraction(self.modulus)
        if mod <= 0:
            raise ValueError(f"modulus must be positive, got {mod}")
        object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "phase", Fraction(self.phase) % 1)

    def __mul__(self, other: "Eigenvalue") -> "Eigenvalue":
        return Eigenvalue(self.modulus * other.modulus, self.phase + other.phase)

    def inverse(self) -> "Eigenvalue":
        return Eigenvalue(1 / self.modulus, -self.phase)

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.phase, self.modulus)

    def __lt__(self, other: "Eigenvalue") -> bool:
        return self.sort_key() < other.sort_key()

    def is_one(self) -> bool:
        return self.modulus == 1 and self.phase == 0

    def __str__(self) -> str:
        if self.phase == 0:
            return _frac(self.modulus)
        if self.phase == Fraction(1, 2):
            return "-" + _frac(self.modulus)
        root = f"e({self.phase.numerator}/{self.phase.denominator})"
        if self.modulus == 1:
            return root
        return f"{_frac(self.modulus)}*{root}"

    def to_json(self) -> dict:
        return {
            "mod": [self.modulus.numerator, self.modulus.denominator],
            "phase": [self.phase.numerator, self.phase.denominator],
        }

    @classmethod
    def from_json(cls, obj) -> "Eigenvalue":
        if isinstance(obj, (str, int)):
            return parse_eigenvalue(str(obj))
        try:
            return cls(Fraction(*obj["mod"]), Fraction(*obj["phase"]))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad eigenvalue {obj!r}") from exc


ONE = Eigenvalue()


def _frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def root_of_unity(num: int, den: int) -> Eigenvalue:
    return Eigenvalue(Fraction(1), Fraction(num, den))


_EIG = re.compile(
    r"^(?P<sign>-)?(?:(?P<mod>\d+(?:/\d+)?)(?:\*(?P<e1>e\((?P<p1>-?\d+/\d+)\)))?"
    r"|(?P<e2>e\((?P<p2>-?\d+/\d+)\))|(?P<i>i))$"
)


def parse_eigenvalue(text: str) -> Eigenvalue:
    """Parse ``1``, ``-1``, ``i``, ``-i``, ``e(a/b)``, ``p/q*e(a/b)``, ``-p/q``."""
    m = _EIG.match(str(text).replace(" ", ""))
    if not m:
        raise ParseError(f"bad eigenvalue {text!r}")
    if m.group("i"):
        mod, phase = Fraction(1), Fraction(1, 4)
    elif m.group("e2"):
        mod, phase = Fraction(1), Fraction(m.group("p2"))
    else:
        mod = Fraction(m.group("mod"))
        phase = Fraction(m.group("p1")) if m.group("e1") else Fraction(0)
    if mod == 0:
        raise ParseError(f"zero is not an eigenvalue: {text!r}")
    if m.group("sign"):
        phase += Fraction(1, 2)
    return Eigenvalue(mod, phase)


@dataclass(frozen=True)
class ConjugacyClass:
    """Jordan type of an invertible matrix: eigenvalue -> nonempty Young diagram.

    ``parts`` is kept sorted by eigenvalue so that structural equality and
    hashing ignore insertion order.
    """

    parts: tuple[tuple[Eigenvalue, YoungDiagram], ...] = ()

    def __post_init__(self):
        seen: dict[Eigenvalue, YoungDiagram] = {}
        for eig, diag in self.parts:
            if not isinstance(diag, YoungDiagram):
                diag = YoungDiagram(tuple(diag))
            if eig in seen:
                raise ValueError(f"eigenvalue {eig} listed twice")
            if diag:
                seen[eig] = diag
        object.__setattr__(self, "parts", tuple(sorted(seen.items(), key=lambda kv: kv[0].sort_key())))

    @classmethod
    def from_map(cls, mapping: Mapping[Eigenvalue, YoungDiagram]) -> "ConjugacyClass":
        return cls(tuple(mapping.items()))

    @classmethod
    def unipotent(cls, diagram) -> "ConjugacyClass":
        return cls(((ONE, young.parse(diagram)),))

    def as_dict(self) -> dict[Eigenvalue, YoungDiagram]:
        return dict(self.parts)

    def get(self, eig: Eigenvalue) -> YoungDiagram:
        for e, d in self.parts:
            if e == eig:
                return d
        return YoungDiagram()

    def eigenvalues(self) -> tuple[Eigenvalue, ...]:
        return tuple(e for e, _ in self.parts)

    @property
    def rank(self) -> int:
        return class_rank(self)

    def is_unipotent(self) -> bool:
        return len(self.parts) == 1 and self.parts[0][0].is_one()

    def is_regular_semisimple(self) -> bool:
        return all(d.columns == (1,) for _, d in self.parts)

    def merged_diagram(self) -> YoungDiagram:
        """All columns of all eigenvalues, tallest first (eigenvalues forgotten)."""
        return young.concat(*(d for _, d in self.parts))

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{e}:{d}" for e, d in self.parts) + "}"

    def to_json(self) -> list:
        return [{"eig": e.to_json(), "cols": list(d.columns)} for e, d in self.parts]

    @classmethod
    def from_json(cls, obj) -> "ConjugacyClass":
        if not isinstance(obj, list):
            raise ParseError(f"conjugacy class must be a list of parts, got {obj!r}")
        parts = []
        for part in obj:
            try:
                parts.append((Eigenvalue.from_json(part["eig"]), young.parse(part["cols"])))
            except (KeyError, TypeError) as exc:
                raise ParseError(f"bad class part {part!r}") from exc
        return cls(tuple(parts))


EMPTY = ConjugacyClass()


def class_rank(c: ConjugacyClass) -> int:
    return sum(young.rank(d) for _, d in c.parts)


def scale(c: ConjugacyClass, alpha: Eigenvalue) -> ConjugacyClass:
    return ConjugacyClass(tuple((e * alpha, d) for e, d in c.parts))


def _replace(c: ConjugacyClass, eig: Eigenvalue, diag: YoungDiagram) -> ConjugacyClass:
    parts = dict(c.parts)
    parts[eig] = diag
    return ConjugacyClass(tuple(parts.items()))


def truncate_at(c: ConjugacyClass, alpha: Eigenvalue) -> ConjugacyClass:
    """Delete the first column of the diagram at ``alpha`` (if present)."""
    if alpha not in c.eigenvalues():
        return c
    return _replace(c, alpha, young.truncate(c.get(alpha)))


def extend_at(c: ConjugacyClass, h: int, alpha: Eigenvalue) -> ConjugacyClass:
    """Prepend a height-``h`` column to the diagram at ``alpha``."""
    return _replace(c, alpha, young.prepend_column(c.get(alpha), h))


Marking = tuple  # tuple[Eigenvalue, ...]


def minimal_marking(c: ConjugacyClass) -> Marking:
    """Greedy order: the eigenvalue whose current diagram has the tallest
    first column goes next; ties by (phase, modulus)."""
    if class_rank(c) == 0:
        raise EmptyClass("the rank-0 class has no minimal marking")
    current = c.as_dict()
    out = []
    while current:
        best = min(current, key=lambda e: (-young.first_column_height(current[e]), e.sort_key()))
        out.append(best)
        rest = young.truncate(current[best])
        if rest:
            current[best] = rest
        else:
            del current[best]
    return tuple(out)


class Leg(NamedTuple):
    length: int
    dims: tuple[int, ...]


def leg(c: ConjugacyClass, marking: Iterable[Eigenvalue]) -> Leg:
    """Type-A chain dimensions ``d_i = rk((A - xi_1)...(A - xi_{i-1}))``."""
    current = c.as_dict()
    running = class_rank(c)
    dims = []
    for xi in marking:
        dims.append(running)
        diag = current.get(xi, YoungDiagram())
        running -= young.first_column_height(diag)
        current[xi] = young.truncate(diag)
    if running != 0:
        raise NotAMarking(f"{tuple(str(x) for x in marking)} does not annihilate {c}")
    while dims and dims[-1] == 0:
        dims.pop()
    return Leg(len(dims), tuple(dims))
