"""Nonabelian Hodge diagrams of AD-A parameters.

A diagram is a vertex list with a symmetric integer matrix ``B`` (off the
diagonal: signed edge multiplicities; on it: twice the signed loop count)
and a positive dimension vector ``d``.  The wild character variety has
dimension ``2 - d^T (2I - B) d``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import young
from .classes import ONE, ConjugacyClass, leg, minimal_marking, truncate_at
from .errors import MalformedDiagram, StructureViolation, Unsupported
from .orbits import C0, enumerate_orbit
from .params import ADAParameter, Kind, Slope, classify, euclid, validate


@dataclass(frozen=True)
class Diagram:
    labels: tuple[str, ...]
    B: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(self.d) != n or len(self.B) != n or any(len(row) != n for row in self.B):
            raise StructureViolation("labels, B and d disagree in size", witness=n)
        for i in range(n):
            if self.B[i][i] % 2:
                raise StructureViolation(f"odd diagonal entry at {self.labels[i]}", witness=self.labels[i])
            if self.d[i] < 1:
                raise StructureViolation(f"vertex {self.labels[i]} has dimension {self.d[i]}", witness=self.labels[i])
            for j in range(i):
                if self.B[i][j] != self.B[j][i]:
                    raise StructureViolation("B is not symmetric", witness=(self.labels[i], self.labels[j]))

    def __len__(self) -> int:
        return len(self.labels)

    def to_json(self) -> dict:
        return {"vertices": list(self.labels), "B": [list(row) for row in self.B], "d": list(self.d)}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def to_dot(self) -> str:
        lines = ["graph nah {"]
        for i, name in enumerate(self.labels):
            lines.append(f'  "{name}" [label="{name}:{self.d[i]}"];')
        for i, a in enumerate(self.labels):
            if self.B[i][i]:
                lines.append(f'  "{a}" -- "{a}" [loops={self.B[i][i] // 2}];')
            for j in range(i + 1, len(self.labels)):
                if self.B[i][j]:
                    lines.append(f'  "{a}" -- "{self.labels[j]}" [mult={self.B[i][j]}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


class _Builder:
    def __init__(self):
        self.labels: list[str] = []
        self.d: list[int] = []
        self.edges: dict[tuple[int, int], int] = {}

    def vertex(self, label: str, dim: int) -> int:
        self.labels.append(label)
        self.d.append(dim)
        return len(self.labels) - 1

    def edge(self, i: int, j: int, mult: int) -> None:
        key = (min(i, j), max(i, j))
        self.edges[key] = self.edges.get(key, 0) + mult

    def build(self) -> Diagram:
        n = len(self.labels)
        B = [[0] * n for _ in range(n)]
        for (i, j), mult in self.edges.items():
            B[i][j] = mult
            B[j][i] = mult
        return Diagram(tuple(self.labels), tuple(map(tuple, B)), tuple(self.d))


def _core(t: ADAParameter) -> tuple[_Builder, int | None, int | None]:
    validate(t)
    s, r = t.s, t.r
    b = _Builder()
    wild = [b.vertex(f"w{i + 1}", 1) for i in range(t.m)]
    for i in wild:
        # diagonal stores (r-1)(s-r-1), i.e. twice the loop count
        b.edge(i, i, (r - 1) * (s - r - 1))
    for a, i in enumerate(wild):
        for j in wild[a + 1:]:
            b.edge(i, j, r * (s - r))
    dim0 = truncate_at(t.c0, ONE).rank
    diminf = t.cinf.rank
    tame0 = b.vertex("t0", dim0) if dim0 > 0 else None
    tameinf = b.vertex("tinf", diminf) if diminf > 0 else None
    for i in wild:
        if tame0 is not None:
            b.edge(i, tame0, r)
        if tameinf is not None:
            b.edge(i, tameinf, s - r)
    if tame0 is not None and tameinf is not None:
        b.edge(tame0, tameinf, 1)
    return b, tame0, tameinf


def core_diagram(t: ADAParameter) -> Diagram:
    return _core(t)[0].build()


def _attach_leg(b: _Builder, root: int, name: str, c: ConjugacyClass, marking=None) -> None:
    dims = leg(c, minimal_marking(c) if marking is None else marking).dims
    if dims[0] != b.d[root]:
        raise StructureViolation(f"leg {dims} does not start at dimension {b.d[root]}", witness=name)
    prev = root
    for pos, dim in enumerate(dims[1:], start=2):
        v = b.vertex(f"{name}_{pos}", dim)
        b.edge(prev, v, 1)
        prev = v


def full_diagram(t: ADAParameter, marking0=None, marking_inf=None) -> Diagram:
    """Core plus legs; the legs use the minimal markings unless given."""
    b, tame0, tameinf = _core(t)
    if tame0 is not None:
        _attach_leg(b, tame0, "t0", truncate_at(t.c0, ONE), marking0)
    if tameinf is not None:
        _attach_leg(b, tameinf, "tinf", t.cinf, marking_inf)
    return b.build()


def cartan_pairing(g: Diagram) -> int:
    n = len(g)
    total = 2 * sum(x * x for x in g.d)
    total -= sum(g.B[i][j] * g.d[i] * g.d[j] for i in range(n) for j in range(n))
    return total


def wcv_dimension(g: Diagram) -> int:
    return 2 - cartan_pairing(g)


def is_nonnegative(g: Diagram) -> bool:
    return all(x >= 0 for row in g.B for x in row)


def _signature(g: Diagram, i: int, with_dimensions: bool) -> tuple:
    dim = (lambda j: g.d[j]) if with_dimensions else (lambda j: 0)
    row = sorted((g.B[i][j], dim(j)) for j in range(len(g)) if j != i and g.B[i][j])
    return (dim(i), g.B[i][i], tuple(row))


def are_isomorphic(g1: Diagram, g2: Diagram, with_dimensions: bool = True) -> bool:
    """Exact search for a vertex bijection preserving ``B`` (and ``d``
    unless ``with_dimensions`` is false)."""
    n = len(g1)
    if n != len(g2):
        return False
    sig1 = [_signature(g1, i, with_dimensions) for i in range(n)]
    sig2 = [_signature(g2, i, with_dimensions) for i in range(n)]
    if sorted(sig1) != sorted(sig2):
        return False
    # most constrained vertices first
    order = sorted(range(n), key=lambda i: (sum(1 for x in sig1 if x == sig1[i]), i))
    image = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for j in range(n):
            if used[j] or sig2[j] != sig1[i]:
                continue
            if any(g1.B[i][p] != g2.B[j][image[p]] for p in order[:k]):
                continue
            image[i], used[j] = j, True
            if extend(k + 1):
                return True
            image[i], used[j] = -1, False
        return False

    return extend(0)


def _plus_parameter(t: ADAParameter) -> ADAParameter:
    kind = classify(t)
    if kind is Kind.GENERALIZED:
        raise Unsupported("closed-form Gamma_+ needs a unipotent C0 and C_inf unipotent or regular semisimple")
    m, s = t.m, t.s
    if s == 1:
        kappa, rho = t.r - 1, 1
    else:
        kappa, rho = euclid(t.slope)
    y0 = t.c0.get(ONE)
    heights = y0.columns
    target = t.cinf.get(ONE)
    for l in range(1, kappa + 1):
        h = heights[l - 1] if l <= len(heights) else 0
        if m * s - h == 0 and target:
            raise MalformedDiagram(f"zero-height column in front of {target}")
        target = young.prepend_column(target, m * s - h)
    tail = young.YoungDiagram(heights[kappa:])
    parts = dict(t.cinf.parts)
    parts[ONE] = target
    return validate(ADAParameter(m, Slope(s, rho), ConjugacyClass.unipotent(tail), ConjugacyClass(tuple(parts.items()))))


def gamma_plus(t: ADAParameter) -> tuple[ADAParameter, Diagram]:
    plus = _plus_parameter(t)
    g = full_diagram(plus)
    if not is_nonnegative(g):
        raise StructureViolation(f"Gamma_+ diagram of {t} has a negative entry", witness=str(plus))
    return plus, g


def gamma_plus_scan(t: ADAParameter, r_max: int) -> list[tuple[ADAParameter, Diagram]]:
    """One representative per isomorphism class among the nonnegative
    diagrams with fewest vertices in the bounded orbit."""
    graph = enumerate_orbit(t, r_max, twist_policy=C0)
    candidates = []
    for node in graph.nodes:
        g = full_diagram(node)
        if is_nonnegative(g):
            candidates.append((node, g))
    if not candidates:
        return []
    fewest = min(len(g) for _, g in candidates)
    reps: list[tuple[ADAParameter, Diagram]] = []
    for node, g in candidates:
        if len(g) == fewest and not any(are_isomorphic(g, h) for _, h in reps):
            reps.append((node, g))
    return reps


def graph_classes(reps: list[tuple[ADAParameter, Diagram]]) -> list[tuple[ADAParameter, Diagram]]:
    """Representatives up to isomorphism of the underlying graph (``d`` ignored)."""
    out: list[tuple[ADAParameter, Diagram]] = []
    for node, g in reps:
        if not any(are_isomorphic(g, h, with_dimensions=False) for _, h in out):
            out.append((node, g))
    return out


def check_gamma_plus(t: ADAParameter, r_max: int) -> tuple[ADAParameter, Diagram]:
    """Compare the closed form with the orbit scan.

    For unipotent ``C_inf`` (type I) the scan must find one class up to
    isomorphisms preserving ``d`` and it must be the closed form's.  With
    nontrivial eigenvalues at infinity, twisted operations reach several
    dimension vectors on the same graph, so uniqueness is required of the
    graph, and the closed form must be one of the scanned diagrams.
    """
    plus, g = gamma_plus(t)
    reps = gamma_plus_scan(t, r_max)
    type_one = classify(t) in (Kind.STANDARD_TYPE_I, Kind.GENERALIZED_TYPE_I)
    classes = reps if type_one else graph_classes(reps)
    if len(classes) != 1:
        raise StructureViolation(f"scan found {len(classes)} classes for {t}", witness=[str(p) for p, _ in classes])
    if not any(are_isomorphic(g, h) for _, h in reps):
        raise StructureViolation(f"closed form {plus} is not among the scanned minima", witness=[str(p) for p, _ in reps])
    return plus, g
