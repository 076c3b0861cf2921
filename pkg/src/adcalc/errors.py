"""Exception hierarchy.

Every domain error carries a short machine-readable ``code`` so the CLI can
report it as JSON.
"""

from __future__ import annotations


class ADError(Exception):
    code = "error"

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self)}


class MalformedDiagram(ADError):
    code = "MalformedDiagram"


class BoxTooSmall(ADError):
    code = "BoxTooSmall"


class EmptyClass(ADError):
    code = "EmptyClass"


class NotAMarking(ADError):
    code = "NotAMarking"


class RankMismatch(ADError):
    code = "RankMismatch"


class NotCoprime(ADError):
    code = "NotCoprime"


class SlopeOne(ADError):
    code = "SlopeOne"


class NotStandard(ADError):
    code = "NotStandard"


class Inconsistent(ADError):
    code = "Inconsistent"


class NotAllowed(ADError):
    code = "NotAllowed"

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step

    def to_json(self) -> dict:
        out = super().to_json()
        if self.step is not None:
            out["step"] = self.step
        return out


class RankDeficit(ADError):
    code = "RankDeficit"


class SlopeOneAtInfinity(ADError):
    code = "SlopeOneAtInfinity"


class ShapeError(ADError):
    """Formal data left the two-point AD-A shape."""

    code = "ShapeError"


class StructureViolation(ADError):
    code = "StructureViolation"

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotStandardTypeI(ADError):
    code = "NotStandardTypeI"


class NotStandardNonTypeI(ADError):
    code = "NotStandardNonTypeI"


class PreconditionFailed(ADError):
    code = "PreconditionFailed"


class IndexOutOfRange(ADError):
    code = "IndexOutOfRange"


class Unsupported(ADError):
    code = "Unsupported"


class ParseError(ADError):
    code = "ParseError"
