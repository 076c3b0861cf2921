"""Bounded breadth-first orbits under the elementary operations."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field

from .classes import ONE
from .errors import ADError, SlopeOne, StructureViolation
from .ops import Operation, OpKind, apply, is_allowed
from .params import ADAParameter, Slope, euclid, validate

NONE, C0 = "none", "c0"


@dataclass
class OrbitGraph:
    nodes: list[ADAParameter] = field(default_factory=list)
    edges: list[tuple[int, Operation, int]] = field(default_factory=list)
    # (source index, operation, error code) for operations the formulas refuse
    rejected: list[tuple[int, Operation, str]] = field(default_factory=list)

    def index(self, t: ADAParameter) -> int:
        for i, n in enumerate(self.nodes):
            if n == t:
                return i
        raise KeyError(str(t))

    def slopes(self) -> set[Slope]:
        return {n.slope for n in self.nodes}

    def to_json(self) -> dict:
        return {
            "nodes": [n.to_json() for n in self.nodes],
            "edges": [{"source": a, "op": str(op), "target": b} for a, op, b in self.edges],
            "rejected": [{"source": a, "op": str(op), "error": err} for a, op, err in self.rejected],
        }

    def to_dot(self) -> str:
        lines = ["digraph orbit {"]
        for i, n in enumerate(self.nodes):
            label = f"{n.slope}\\nC0={n.c0}\\nCinf={n.cinf}"
            lines.append(f'  n{i} [label="{label}"];')
        for a, op, b in self.edges:
            lines.append(f'  n{a} -> n{b} [label="{op}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def slope_set(sl: Slope, r_max: int) -> set[Slope]:
    """All ``s/(l*s +- rho)`` with positive denominator at most ``r_max``."""
    _, rho = euclid(sl)
    s = sl.s
    out = set()
    l = 0
    while l * s - rho <= r_max:
        for den in (l * s + rho, l * s - rho):
            if 0 < den <= r_max:
                out.add(Slope(s, den))
        l += 1
    return out


def s1_slope_set(r_max: int) -> set[Slope]:
    return {Slope(1, l) for l in range(1, r_max + 1)}


def orbit_slopes(sl: Slope, r_max: int) -> set[Slope]:
    try:
        return slope_set(sl, r_max)
    except SlopeOne:
        return s1_slope_set(r_max)


def _target_denominator(op: Operation, t: ADAParameter) -> int:
    if op.kind is OpKind.F:
        return t.s - t.r
    if op.kind is OpKind.FPLUS:
        return t.s + t.r
    if op.kind is OpKind.FMINUS:
        return t.r - t.s
    return t.r


def _candidates(t: ADAParameter, twist_policy: str) -> list[Operation]:
    if twist_policy == NONE:
        alphas = [ONE]
    elif twist_policy == C0:
        alphas = sorted(t.c0.eigenvalues(), key=lambda e: e.sort_key())
    else:
        raise ValueError(f"unknown twist policy {twist_policy!r}")
    return [Operation(kind, a) for a in alphas for kind in (OpKind.F, OpKind.FPLUS, OpKind.FMINUS)]


def default_rank_bound(t: ADAParameter, r_max: int) -> int:
    """Largest rank a type-I parameter reaches inside the window, shifted by
    the rank at infinity.  Twisted operations can otherwise raise the rank
    forever at a fixed slope."""
    return t.m * r_max + t.cinf.rank


def enumerate_orbit(t: ADAParameter, r_max: int, twist_policy: str = NONE,
                    rank_max: int | None = None) -> OrbitGraph:
    """Breadth-first closure with target denominators at most ``r_max``.

    With ``twist_policy="c0"`` the conjugated operations use the current
    eigenvalues of ``C0``, and targets of rank above ``rank_max`` (default
    :func:`default_rank_bound`) are not expanded.
    """
    validate(t)
    if rank_max is None and twist_policy == C0:
        rank_max = default_rank_bound(t, r_max)
    g = OrbitGraph(nodes=[t])
    seen = {t.key(): 0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        node = g.nodes[i]
        for op in _candidates(node, twist_policy):
            if not is_allowed(op, node) or _target_denominator(op, node) > r_max:
                continue
            try:
                new = apply(op, node)
            except ADError as exc:
                g.rejected.append((i, op, exc.code))
                continue
            if rank_max is not None and new.rank > rank_max:
                continue
            key = new.key()
            if key not in seen:
                seen[key] = len(g.nodes)
                g.nodes.append(new)
                queue.append(seen[key])
            g.edges.append((i, op, seen[key]))
    return g


def count_per_slope(g: OrbitGraph) -> dict[Slope, int]:
    return dict(sorted(Counter(n.slope for n in g.nodes).items()))


def check_structure(g: OrbitGraph) -> dict[Slope, int]:
    """Per-slope counts of a type-I orbit; raises on a count pattern the
    orbit structure forbids."""
    counts = count_per_slope(g)
    s = g.nodes[0].s
    values = set(counts.values())
    if s == 2:
        if len(values) != 1 or not values <= {1, 2}:
            bad = max(counts, key=lambda sl: (counts[sl] != min(values), counts[sl]))
            raise StructureViolation(f"s=2 counts are not uniform: {counts}", witness=bad)
    else:
        for sl, n in counts.items():
            if n != 1:
                raise StructureViolation(f"{n} parameters with slope {sl}", witness=sl)
    return counts
