"""Closed forms of the three Argyres-Douglas dualities.

Each closed form has a companion ``*_sequence`` giving the operation word
it is supposed to equal, so callers can compare the two with
:func:`adcalc.ops.apply_seq`.
"""

from __future__ import annotations

from . import young
from .classes import EMPTY, ONE, ConjugacyClass
from .errors import IndexOutOfRange, NotStandardNonTypeI, NotStandardTypeI, PreconditionFailed
from .ops import FMINUS, FPLUS, F, Operation, OpKind
from .params import ADAParameter, Kind, Slope, classify, euclid, validate
from .young import YoungDiagram


def _type_one_diagram(t: ADAParameter) -> YoungDiagram:
    if classify(t) is not Kind.STANDARD_TYPE_I:
        raise NotStandardTypeI(f"{t} is not of standard type I")
    return t.c0.get(ONE)


def duality_add_columns(t: ADAParameter, l: int) -> ADAParameter:
    """``(m, s/r, Y) -> (m, s/(r+ls), [(ms)^l, Y])``."""
    y = _type_one_diagram(t)
    if l < 0:
        raise IndexOutOfRange(f"l must be nonnegative, got {l}")
    for _ in range(l):
        y = young.prepend_column(y, t.m * t.s)
    return validate(ADAParameter(t.m, Slope(t.s, t.r + l * t.s), ConjugacyClass.unipotent(y)))


def duality_add_columns_sequence(l: int) -> list[Operation]:
    return [FPLUS] * l


def _complement_data(t: ADAParameter) -> tuple[YoungDiagram, int]:
    y = _type_one_diagram(t)
    if t.s == 1:
        raise PreconditionFailed("needs s > 1")
    kappa, _ = euclid(t.slope)
    if len(y) <= kappa:
        raise PreconditionFailed(f"needs L > kappa, got L={len(y)}, kappa={kappa}")
    if young.first_column_height(y) > t.m * t.s:
        raise PreconditionFailed(f"needs Y inside a box of height ms={t.m * t.s}, got {y}")
    return y, kappa


def duality_complement(t: ADAParameter) -> ADAParameter:
    """``(m, s/r, Y) -> (m, s/(Ls-r), Y^c)`` with ``Y^c`` the complement in
    an ``L x ms`` box."""
    y, _ = _complement_data(t)
    L = len(y)
    out = young.complement(y, t.m * t.s)
    return validate(ADAParameter(t.m, Slope(t.s, L * t.s - t.r), ConjugacyClass.unipotent(out)))


def duality_complement_sequence(t: ADAParameter) -> list[Operation]:
    y, kappa = _complement_data(t)
    return [FMINUS] * kappa + [F] + [FPLUS] * (len(y) - 1 - kappa)


def _partial_complement(y: YoungDiagram, box: int, l: int) -> YoungDiagram:
    # columns box - h_l, ..., box - h_1, zero columns dropped
    heights = [y.columns[j] if j < len(y) else 0 for j in range(l)]
    return YoungDiagram(tuple(box - h for h in reversed(heights) if box - h > 0))


def intermediate(t: ADAParameter, l: int) -> ADAParameter:
    """The parameter reached after the first ``l`` steps of the complement
    word."""
    y, kappa = _complement_data(t)
    if not 0 <= l <= len(y):
        raise IndexOutOfRange(f"step {l} outside 0..{len(y)}")
    m, s, r = t.m, t.s, t.r
    rest = young.YoungDiagram(y.columns[l:])
    built = _partial_complement(y, m * s, l)
    if l <= kappa:
        out = ADAParameter(m, Slope(s, r - l * s), ConjugacyClass.unipotent(rest), ConjugacyClass.unipotent(built))
    else:
        out = ADAParameter(m, Slope(s, l * s - r), ConjugacyClass.unipotent(built), ConjugacyClass.unipotent(rest))
    return validate(out)


def duality_iii(t: ADAParameter) -> ADAParameter:
    """Move every nontrivial eigenvalue of ``Cinf`` into ``C0``, each with a
    single Jordan block of size one and multiplicity ``ms-1``."""
    if classify(t) is not Kind.STANDARD:
        raise NotStandardNonTypeI(f"{t} is not of standard type with nonempty C_inf")
    betas = t.cinf.eigenvalues()
    ms = t.m * t.s
    parts = [(ONE, t.c0.get(ONE))] + [(b, YoungDiagram((ms - 1,) if ms > 1 else ())) for b in betas]
    slope = Slope(t.s, len(betas) * t.s + t.r)
    return validate(ADAParameter(t.m, slope, ConjugacyClass(tuple(parts)), EMPTY))


def duality_iii_sequence(t: ADAParameter) -> list[Operation]:
    if classify(t) is not Kind.STANDARD:
        raise NotStandardNonTypeI(f"{t} is not of standard type with nonempty C_inf")
    return [Operation(OpKind.FPLUS, b) for b in t.cinf.eigenvalues()]
