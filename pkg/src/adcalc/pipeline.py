"""Formal-data route to the elementary operations.

Fourier transform in three steps: pass to modified formal data (truncate the
tame class at the finite point), transport Stokes circles, then reconstruct
the class at the finite point from the total rank.  Mobius swaps 0 and
infinity.  This module deliberately avoids :mod:`adcalc.ops`; the two are
compared against each other in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import young
from .classes import ONE, ConjugacyClass, Eigenvalue, scale
from .errors import MalformedDiagram, NotAllowed, RankDeficit, ShapeError, SlopeOneAtInfinity
from .ops import Operation, OpKind
from .params import ADAParameter, Slope

ZERO, INF = "0", "inf"


@dataclass(frozen=True)
class FormalData:
    """m wild circles of a common slope at one of {0, inf}, plus tame classes."""

    m: int
    wild_at: str
    slope: Slope
    tame0: ConjugacyClass
    tameinf: ConjugacyClass

    @property
    def wild_rank(self) -> int:
        return self.m * self.slope.r

    @property
    def rank(self) -> int:
        return self.rank_at(INF)

    def rank_at(self, point: str) -> int:
        tame = self.tame0 if point == ZERO else self.tameinf
        return tame.rank + (self.wild_rank if self.wild_at == point else 0)

    def check(self) -> "FormalData":
        if self.wild_at not in (ZERO, INF):
            raise ShapeError(f"wild circles must sit at 0 or inf, not {self.wild_at!r}")
        if self.rank_at(ZERO) != self.rank_at(INF):
            raise ShapeError(f"ranks at 0 and inf differ: {self.rank_at(ZERO)} vs {self.rank_at(INF)}")
        return self


@dataclass(frozen=True)
class ModifiedFormalData:
    """Same shape; the tame class at 0 is replaced by its truncation."""

    m: int
    wild_at: str
    slope: Slope
    tame0: ConjugacyClass
    tameinf: ConjugacyClass

    def rank_at(self, point: str) -> int:
        tame = self.tame0 if point == ZERO else self.tameinf
        wild = self.m * self.slope.r if self.wild_at == point else 0
        return tame.rank + wild


def from_parameter(t: ADAParameter) -> FormalData:
    return FormalData(t.m, INF, t.slope, t.c0, t.cinf)


def to_parameter(fd: FormalData) -> ADAParameter:
    if fd.wild_at != INF:
        raise ShapeError("wild circles at 0: not of AD-A shape")
    return ADAParameter(fd.m, fd.slope, fd.tame0, fd.tameinf)


def _unipotent_part(c: ConjugacyClass) -> young.YoungDiagram:
    for e, d in c.parts:
        if e == ONE:
            return d
    return young.YoungDiagram()


def _with_unipotent_part(c: ConjugacyClass, d: young.YoungDiagram) -> ConjugacyClass:
    parts = [(e, x) for e, x in c.parts if e != ONE]
    parts.append((ONE, d))
    return ConjugacyClass(tuple(parts))


def modify(fd: FormalData) -> ModifiedFormalData:
    # A(restricted to Im(A - 1)) loses one Jordan block per block at 1.
    tame0 = _with_unipotent_part(fd.tame0, young.truncate(_unipotent_part(fd.tame0)))
    return ModifiedFormalData(fd.m, fd.wild_at, fd.slope, tame0, fd.tameinf)


def unmodify(mfd: ModifiedFormalData, total_rank: int) -> FormalData:
    h = total_rank - mfd.rank_at(ZERO)
    if h < 0:
        raise RankDeficit(f"total rank {total_rank} is below the modified rank {mfd.rank_at(ZERO)} at 0")
    base = _unipotent_part(mfd.tame0)
    if h == 0 and base:
        raise MalformedDiagram(f"rank leaves no room to rebuild the first column in front of {base}")
    tame0 = _with_unipotent_part(mfd.tame0, young.prepend_column(base, h))
    return FormalData(mfd.m, mfd.wild_at, mfd.slope, tame0, mfd.tameinf).check()


def _sign(irregularity: int) -> Eigenvalue:
    return Eigenvalue(1, 0) if irregularity % 2 == 0 else Eigenvalue(1, "1/2")


def fourier_modified(mfd: ModifiedFormalData) -> ModifiedFormalData:
    s, r = mfd.slope.s, mfd.slope.r
    if mfd.wild_at == ZERO:
        wild_at, slope = INF, Slope(s, r + s)
    elif s > r:
        wild_at, slope = INF, Slope(s, s - r)
    elif s < r:
        wild_at, slope = ZERO, Slope(s, r - s)
    else:
        raise SlopeOneAtInfinity("slope-1 circles at infinity go to finite points")
    # Tame circles have irregularity 0, so the sign twist is trivial on them.
    return ModifiedFormalData(
        mfd.m, wild_at, slope, scale(mfd.tameinf, _sign(0)), scale(mfd.tame0, _sign(0))
    )


def fourier(fd: FormalData) -> FormalData:
    mfd = fourier_modified(modify(fd))
    # Nothing at infinity is modified, so the new total rank is read there.
    return unmodify(mfd, mfd.rank_at(INF))


def mobius(fd: FormalData) -> FormalData:
    return FormalData(fd.m, INF if fd.wild_at == ZERO else ZERO, fd.slope, fd.tameinf, fd.tame0)


def kummer(fd: FormalData, alpha: Eigenvalue) -> FormalData:
    return replace(fd, tame0=scale(fd.tame0, alpha), tameinf=scale(fd.tameinf, alpha))


def full_op(op: Operation, fd: FormalData) -> FormalData:
    if op.kind is OpKind.TWIST:
        return kummer(fd, op.alpha)
    if not op.alpha.is_one():
        inner = Operation(op.kind)
        return kummer(full_op(inner, kummer(fd, op.alpha.inverse())), op.alpha)
    if op.kind is OpKind.F:
        out = fourier(fd)
    elif op.kind is OpKind.FPLUS:
        out = fourier(mobius(fd))
    else:
        out = mobius(fourier(fd))
    if out.wild_at != INF:
        raise NotAllowed(f"{op} moves the wild circles to 0")
    return out


def apply_via_formal_data(op: Operation, t: ADAParameter) -> ADAParameter:
    return to_parameter(full_op(op, from_parameter(t)))
