"""AD-A parameters ``(m, s/r, C0, Cinf)``: validation, classification, slope
arithmetic and the translation to ``D_p^b(sl_N, [Y])`` labels."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import young
from .classes import EMPTY, ConjugacyClass, root_of_unity
from .errors import (
    Inconsistent,
    NotCoprime,
    NotStandard,
    ParseError,
    RankMismatch,
    SlopeOne,
)
from .young import YoungDiagram


@dataclass(frozen=True, order=True)
class Slope:
    s: int
    r: int

    def __post_init__(self):
        if self.s < 1 or self.r < 1:
            raise ValueError(f"slope entries must be positive, got {self.s}/{self.r}")

    @property
    def value(self) -> Fraction:
        return Fraction(self.s, self.r)

    def __str__(self) -> str:
        return f"{self.s}/{self.r}"

    @classmethod
    def parse(cls, text: str) -> "Slope":
        num, _, den = str(text).partition("/")
        try:
            return cls(int(num), int(den or 1))
        except ValueError as exc:
            raise ParseError(f"bad slope {text!r}") from exc


@dataclass(frozen=True)
class ADAParameter:
    m: int
    slope: Slope
    c0: ConjugacyClass
    cinf: ConjugacyClass = EMPTY

    @property
    def s(self) -> int:
        return self.slope.s

    @property
    def r(self) -> int:
        return self.slope.r

    @property
    def k(self) -> Fraction:
        return self.slope.value

    @property
    def rank(self) -> int:
        return self.c0.rank

    def __str__(self) -> str:
        return f"({self.m}, {self.slope}, {self.c0}, {self.cinf})"

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "slope": {"s": self.s, "r": self.r},
            "c0": self.c0.to_json(),
            "cinf": self.cinf.to_json(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def key(self) -> str:
        """Canonical structural key; equal parameters have equal keys."""
        return self.dumps()

    @classmethod
    def from_json(cls, obj) -> "ADAParameter":
        try:
            slope = obj["slope"]
            if isinstance(slope, str):
                sl = Slope.parse(slope)
            else:
                sl = Slope(int(slope["s"]), int(slope["r"]))
            return cls(
                int(obj["m"]),
                sl,
                ConjugacyClass.from_json(obj.get("c0", [])),
                ConjugacyClass.from_json(obj.get("cinf", [])),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad parameter JSON: {exc}") from exc


@dataclass(frozen=True)
class ReducedParameter:
    m: int
    slope: Slope
    y: YoungDiagram

    @property
    def rank(self) -> int:
        return young.rank(self.y)


def make(m: int, s: int, r: int, c0, cinf=None) -> ADAParameter:
    """Shorthand constructor; bare diagrams are read as unipotent classes."""

    def as_class(c):
        if c is None:
            return EMPTY
        if isinstance(c, ConjugacyClass):
            return c
        return ConjugacyClass.unipotent(c)

    return ADAParameter(m, Slope(s, r), as_class(c0), as_class(cinf))


def validate(t: ADAParameter) -> ADAParameter:
    """Raise on structural violations; return ``t`` unchanged otherwise."""
    if gcd(t.s, t.r) != 1:
        raise NotCoprime(f"slope {t.slope} is not in lowest terms")
    if t.m < 1:
        raise RankMismatch(f"need at least one wild circle, got m={t.m}")
    if t.c0.rank != t.m * t.r + t.cinf.rank:
        raise RankMismatch(
            f"rk(C0)={t.c0.rank} but m*r + rk(Cinf) = {t.m * t.r} + {t.cinf.rank}"
        )
    return t


class Kind(str, enum.Enum):
    GENERALIZED = "generalized"
    GENERALIZED_TYPE_I = "generalized-type-I"
    STANDARD = "standard"
    STANDARD_TYPE_I = "standard-type-I"


def classify(t: ADAParameter) -> Kind:
    validate(t)
    if t.c0.is_unipotent():
        if not t.cinf:
            return Kind.STANDARD_TYPE_I
        if t.cinf.is_regular_semisimple() and not any(e.is_one() for e in t.cinf.eigenvalues()):
            return Kind.STANDARD
        if t.cinf.is_unipotent():
            return Kind.GENERALIZED_TYPE_I
    return Kind.GENERALIZED


def is_standard(t: ADAParameter) -> bool:
    return classify(t) in (Kind.STANDARD, Kind.STANDARD_TYPE_I)


def euclid(sl: Slope) -> tuple[int, int]:
    """``r = kappa*s + rho`` with ``1 <= rho <= s-1``."""
    if sl.s == 1:
        raise SlopeOne("slope 1/r has no remainder decomposition")
    kappa, rho = divmod(sl.r, sl.s)
    return kappa, rho


@dataclass(frozen=True)
class PhysicsLabel:
    p: int
    b: int
    N: int
    y: YoungDiagram

    def __str__(self) -> str:
        return f"D_{self.p}^{self.b}(sl_{self.N}, {self.y})"

    def short(self) -> str:
        """Drops ``b`` when ``b = N``, as is customary."""
        if self.b == self.N:
            return f"D_{self.p}(sl_{self.N}, {self.y})"
        return str(self)


def to_physics_label(t: ADAParameter) -> PhysicsLabel:
    if not is_standard(t):
        raise NotStandard(f"{t} is not of standard AD-A type")
    y = t.c0.parts[0][1]
    return PhysicsLabel(t.m * t.s, t.m * t.r, young.rank(y), y)


def from_physics(p: int, b: int, N: int, y) -> ADAParameter:
    """Inverse dictionary; ``Cinf`` gets the eigenvalues ``e(j/(n+1))``, j=1..n."""
    y = young.parse(y)
    if young.rank(y) != N:
        raise Inconsistent(f"rk{y} = {young.rank(y)} differs from N = {N}")
    m = gcd(p, b)
    s, r = p // m, b // m
    n = N - m * r
    if n < 0:
        raise Inconsistent(f"b = {b} exceeds N = {N}")
    cinf = ConjugacyClass(tuple((root_of_unity(j, n + 1), YoungDiagram((1,))) for j in range(1, n + 1)))
    return validate(ADAParameter(m, Slope(s, r), ConjugacyClass.unipotent(y), cinf))


def loads(text: str) -> ADAParameter:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return validate(ADAParameter.from_json(obj))
