"""Elementary AD-A operations acting on parameters by closed formulas.

Notation: ``h`` is the first-column height of the diagram at ``alpha`` in
the class being truncated; the other class receives a column of height
``m*s - h``.

    F_alpha   (k > 1):  s/r -> s/(s-r)   C0' = ext(Cinf), Cinf' = trunc(C0)
    F+_alpha  (always): s/r -> s/(s+r)   C0' = ext(C0),   Cinf' = trunc(Cinf)
    F-_alpha  (k < 1):  s/r -> s/(r-s)   C0' = trunc(C0), Cinf' = ext(Cinf)
    T_alpha:            both classes multiplied by alpha
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from . import young
from .classes import ONE, ConjugacyClass, Eigenvalue, extend_at, parse_eigenvalue, scale, truncate_at
from .errors import MalformedDiagram, NotAllowed, ParseError
from .params import ADAParameter, Slope, validate


class OpKind(str, enum.Enum):
    F = "F"
    FPLUS = "F+"
    FMINUS = "F-"
    TWIST = "T"


@dataclass(frozen=True)
class Operation:
    kind: OpKind
    alpha: Eigenvalue = ONE

    def __str__(self) -> str:
        if self.kind is OpKind.TWIST or not self.alpha.is_one():
            return f"{self.kind.value}@{self.alpha}"
        return self.kind.value

    def inverse_twist(self) -> "Operation":
        return Operation(OpKind.TWIST, self.alpha.inverse())


F = Operation(OpKind.F)
FPLUS = Operation(OpKind.FPLUS)
FMINUS = Operation(OpKind.FMINUS)


def twist(alpha: Eigenvalue) -> Operation:
    return Operation(OpKind.TWIST, alpha)


def parse_op(text: str) -> Operation:
    """``F``, ``F+``, ``F-``, ``T@<eig>``, ``F@<eig>``, ``F+@<eig>``, ``F-@<eig>``."""
    head, sep, tail = text.strip().partition("@")
    try:
        kind = OpKind(head.strip())
    except ValueError as exc:
        raise ParseError(f"unknown operation {text!r}") from exc
    if kind is OpKind.TWIST and not sep:
        raise ParseError("a twist needs an eigenvalue, e.g. T@-1")
    alpha = parse_eigenvalue(tail) if sep else ONE
    return Operation(kind, alpha)


def parse_ops(text: str) -> list[Operation]:
    return [parse_op(tok) for tok in text.split(",") if tok.strip()]


def is_allowed(op: Operation, t: ADAParameter) -> bool:
    if op.kind is OpKind.F:
        return t.s > t.r
    if op.kind is OpKind.FMINUS:
        return t.s < t.r
    return True


def _receive(c: ConjugacyClass, height: int, alpha: Eigenvalue) -> ConjugacyClass:
    # A zero-height column can only be added where there is nothing to
    # reconstruct; otherwise the input was not a consistent parameter.
    if height == 0 and c.get(alpha):
        raise MalformedDiagram(
            f"zero-height column in front of {c.get(alpha)} at eigenvalue {alpha}"
        )
    return extend_at(c, height, alpha)


def apply(op: Operation, t: ADAParameter) -> ADAParameter:
    if not is_allowed(op, t):
        raise NotAllowed(f"{op} is not allowed at slope {t.slope}")
    m, s, r, a = t.m, t.s, t.r, op.alpha
    if op.kind is OpKind.TWIST:
        out = ADAParameter(m, t.slope, scale(t.c0, a), scale(t.cinf, a))
    elif op.kind is OpKind.F:
        h = young.first_column_height(t.c0.get(a))
        out = ADAParameter(m, Slope(s, s - r), _receive(t.cinf, m * s - h, a), truncate_at(t.c0, a))
    elif op.kind is OpKind.FPLUS:
        h = young.first_column_height(t.cinf.get(a))
        out = ADAParameter(m, Slope(s, s + r), _receive(t.c0, m * s - h, a), truncate_at(t.cinf, a))
    else:
        h = young.first_column_height(t.c0.get(a))
        out = ADAParameter(m, Slope(s, r - s), truncate_at(t.c0, a), _receive(t.cinf, m * s - h, a))
    return validate(out)


def apply_seq(ops: Iterable[Operation], t: ADAParameter) -> ADAParameter:
    """Left-to-right fold: the first operation in the list acts first."""
    for i, op in enumerate(ops):
        if not is_allowed(op, t):
            raise NotAllowed(f"step {i}: {op} is not allowed at slope {t.slope}", step=i)
        t = apply(op, t)
    return t
