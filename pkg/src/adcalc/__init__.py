"""Exact calculus of AD-A irregular-curve parameters on the Riemann sphere."""

from .classes import EMPTY, ONE, ConjugacyClass, Eigenvalue, parse_eigenvalue
from .diagrams import Diagram, are_isomorphic, full_diagram, gamma_plus, wcv_dimension
from .errors import ADError
from .ops import FMINUS, FPLUS, F, Operation, OpKind, apply, apply_seq, parse_ops, twist
from .params import ADAParameter, Kind, Slope, classify, make, validate
from .young import YoungDiagram

__all__ = [
    "ADAParameter", "ADError", "ConjugacyClass", "Diagram", "EMPTY", "Eigenvalue", "F", "FMINUS",
    "FPLUS", "Kind", "ONE", "OpKind", "Operation", "Slope", "YoungDiagram", "apply", "apply_seq",
    "are_isomorphic", "classify", "full_diagram", "gamma_plus", "make", "parse_eigenvalue",
    "parse_ops", "twist", "validate", "wcv_dimension",
]
