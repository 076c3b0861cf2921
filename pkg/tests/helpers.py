"""Random parameter generators and brute-force oracles shared by the tests."""

from __future__ import annotations

import random
from math import gcd

import sympy

from adcalc.classes import ONE, ConjugacyClass, Eigenvalue, parse_eigenvalue
from adcalc.params import ADAParameter, Slope
from adcalc.young import YoungDiagram

POOL = [parse_eigenvalue(x) for x in ("1", "-1", "i", "e(1/3)", "2", "1/2*e(1/4)")]
NONTRIVIAL = POOL[1:]


def random_diagram(rng: random.Random, n: int) -> YoungDiagram:
    """A random diagram with ``n`` boxes (random composition, sorted)."""
    cols = []
    while n:
        h = rng.randint(1, n)
        cols.append(h)
        n -= h
    return YoungDiagram(tuple(sorted(cols, reverse=True)))


def random_class(rng: random.Random, n: int, eigs=POOL) -> ConjugacyClass:
    if n == 0:
        return ConjugacyClass()
    k = rng.randint(1, min(n, len(eigs)))
    chosen = rng.sample(list(eigs), k)
    cuts = sorted(rng.sample(range(1, n), k - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    return ConjugacyClass(tuple((e, random_diagram(rng, size)) for e, size in zip(chosen, sizes)))


def random_slope(rng: random.Random, max_s: int = 7, max_r: int = 9, s: int | None = None) -> Slope:
    while True:
        ss = s if s is not None else rng.randint(1, max_s)
        r = rng.randint(1, max_r)
        if gcd(ss, r) == 1:
            return Slope(ss, r)


def random_parameter(rng: random.Random, max_m: int = 2, max_s: int = 7, max_r: int = 7,
                     max_inf: int = 4, slope: Slope | None = None) -> ADAParameter:
    """Any valid parameter: eigenvalues from a small pool, rank identity enforced."""
    m = rng.randint(1, max_m)
    sl = slope or random_slope(rng, max_s, max_r)
    cinf = random_class(rng, rng.randint(0, max_inf))
    c0 = random_class(rng, m * sl.r + cinf.rank)
    return ADAParameter(m, sl, c0, cinf)


def random_type_one(rng: random.Random, max_m: int = 2, max_s: int = 7, max_r: int = 9,
                    slope: Slope | None = None) -> ADAParameter:
    m = rng.randint(1, max_m)
    sl = slope or random_slope(rng, max_s, max_r)
    return ADAParameter(m, sl, ConjugacyClass.unipotent(random_diagram(rng, m * sl.r)))


def random_standard(rng: random.Random, kappa: int, max_m: int = 2, max_s: int = 7,
                    max_r: int = 7) -> ADAParameter:
    """Standard, non-type-I: ``kappa`` distinct nontrivial eigenvalues at infinity."""
    m = rng.randint(1, max_m)
    sl = random_slope(rng, max_s, max_r)
    betas = rng.sample(NONTRIVIAL, kappa)
    cinf = ConjugacyClass(tuple((b, YoungDiagram((1,))) for b in betas))
    c0 = ConjugacyClass.unipotent(random_diagram(rng, m * sl.r + kappa))
    return ADAParameter(m, sl, c0, cinf)


# -- brute-force linear algebra --------------------------------------------


def _value(e: Eigenvalue, table: dict) -> int:
    # The Jordan structure only depends on which eigenvalues coincide, so
    # distinct eigenvalues are replaced by distinct integers.
    return table.setdefault(e, len(table) + 2)


def jordan_matrix(c: ConjugacyClass, table: dict | None = None) -> sympy.Matrix:
    table = {} if table is None else table
    blocks = []
    for e, d in c.parts:
        lam = _value(e, table)
        for size in d.to_rows():
            blocks.append(sympy.Matrix(size, size, lambda i, j: lam if i == j else (1 if j == i + 1 else 0)))
    return sympy.diag(*blocks) if blocks else sympy.zeros(0, 0)


def brute_force_leg(c: ConjugacyClass, marking) -> tuple[int, ...]:
    """Ranks of ``(A - xi_1)...(A - xi_i)`` on an explicit Jordan matrix."""
    table: dict = {}
    a = jordan_matrix(c, table)
    n = a.shape[0]
    prod = sympy.eye(n)
    dims = []
    for xi in marking:
        dims.append(prod.rank())
        prod = prod * (a - _value(xi, table) * sympy.eye(n))
    while dims and dims[-1] == 0:
        dims.pop()
    return tuple(dims)


def brute_force_columns(d: YoungDiagram) -> tuple[int, ...]:
    """Column heights from kernel dimensions of powers of a nilpotent matrix."""
    table: dict = {}
    a = jordan_matrix(ConjugacyClass(((ONE, d),)), table)
    n = a.shape[0]
    a = a - table[ONE] * sympy.eye(n)
    kernels = [0]
    power = sympy.eye(n)
    while kernels[-1] < n:
        power = power * a
        kernels.append(n - power.rank())
    return tuple(kernels[j] - kernels[j - 1] for j in range(1, len(kernels)))


def pairing_oracle(B, d) -> int:
    bm = sympy.Matrix(B)
    dv = sympy.Matrix(d)
    return int((dv.T * (2 * sympy.eye(len(d)) - bm) * dv)[0])


def nx_isomorphic(g1, g2) -> bool:
    import networkx as nx

    def graph(g):
        G = nx.Graph()
        for i, dim in enumerate(g.d):
            G.add_node(i, dim=dim, loop=g.B[i][i])
        for i in range(len(g)):
            for j in range(i + 1, len(g)):
                if g.B[i][j]:
                    G.add_edge(i, j, mult=g.B[i][j])
        return G

    return nx.is_isomorphic(
        graph(g1), graph(g2),
        node_match=lambda a, b: a == b,
        edge_match=lambda a, b: a["mult"] == b["mult"],
    )


def outcome(fn):
    """Result or the fact of rejection, for comparing two implementations."""
    from adcalc.errors import ADError

    try:
        return fn()
    except ADError as exc:
        return ("rejected", type(exc).__name__)


def rejected(x) -> bool:
    return isinstance(x, tuple) and x[:1] == ("rejected",)
