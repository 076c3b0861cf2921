import itertools
import random
from math import gcd

import pytest

from adcalc import diagrams as dg
from adcalc.classes import ONE, ConjugacyClass, minimal_marking, parse_eigenvalue, truncate_at
from adcalc.errors import StructureViolation, Unsupported
from adcalc.ops import F, apply
from adcalc.orbits import enumerate_orbit
from adcalc.params import ADAParameter, Slope, make
from adcalc.young import YoungDiagram

from helpers import (
    nx_isomorphic,
    pairing_oracle,
    random_parameter,
    random_standard,
    random_type_one,
)

AIRY = make(1, 3, 2, [2])
PI = make(1, 5, 2, [2])
PII = make(2, 3, 1, [2])
EX = make(1, 3, 7, "2,1^5")
EX_PLUS = make(1, 3, 1, [1, 1, 1, 1], [2, 1])


def admissible(t: ADAParameter) -> bool:
    y = t.c0.get(ONE)
    return not y or y.columns[0] <= t.m * t.s


def test_core_values():
    assert dg.core_diagram(PI) == dg.Diagram(("w1",), ((2,),), (1,))
    assert dg.core_diagram(PII) == dg.Diagram(("w1", "w2"), ((0, 2), (2, 0)), (1, 1))
    g = dg.core_diagram(make(1, 5, 7, [5, 2]))
    assert g.B == ((-18, 7), (7, 0)) and g.d == (1, 2)


def test_full_diagram_of_the_mirror_parameter():
    g = dg.full_diagram(EX_PLUS)
    idx = {name: i for i, name in enumerate(g.labels)}
    assert g.d[idx["w1"]] == 1
    assert [g.d[idx[v]] for v in ("t0", "t0_2", "t0_3")] == [3, 2, 1]
    assert [g.d[idx[v]] for v in ("tinf", "tinf_2")] == [3, 1]
    assert g.B[idx["w1"]][idx["t0"]] == 1
    assert g.B[idx["w1"]][idx["tinf"]] == 2
    assert g.B[idx["t0"]][idx["tinf"]] == 1
    assert g.B[idx["w1"]][idx["w1"]] == 0
    assert dg.wcv_dimension(g) == 10


@pytest.mark.parametrize(
    "t,pairing,dim",
    [(AIRY, 2, 0), (PI, 0, 2), (PII, 0, 2), (make(1, 5, 7, [5, 2]), 0, 2), (EX, -8, 10)],
)
def test_pairing_and_dimension(t, pairing, dim):
    g = dg.full_diagram(t)
    assert dg.cartan_pairing(g) == pairing
    assert dg.wcv_dimension(g) == dim


def test_pairing_matches_matrix_product():
    rng = random.Random(31)
    for _ in range(150):
        g = dg.full_diagram(random_parameter(rng))
        assert dg.cartan_pairing(g) == pairing_oracle(g.B, g.d)


def test_nonnegativity_tracks_the_slope():
    rng = random.Random(32)
    assert dg.is_nonnegative(dg.full_diagram(PI))
    assert not dg.is_nonnegative(dg.full_diagram(make(1, 5, 7, [5, 2])))
    for _ in range(200):
        t = random_parameter(rng)
        assert dg.is_nonnegative(dg.full_diagram(t)) == (t.s >= t.r)


def test_even_diagonal_and_symmetry():
    for s, r in itertools.product(range(1, 30), repeat=2):
        if gcd(s, r) == 1:
            assert (r - 1) * (s - r - 1) % 2 == 0
    with pytest.raises(StructureViolation):
        dg.Diagram(("a",), ((1,),), (1,))
    with pytest.raises(StructureViolation):
        dg.Diagram(("a", "b"), ((0, 1), (2, 0)), (1, 1))
    with pytest.raises(StructureViolation):
        dg.Diagram(("a",), ((0,),), (0,))


def test_isomorphism_values():
    g = dg.full_diagram(EX)
    assert dg.are_isomorphic(g, g)
    assert not dg.are_isomorphic(dg.full_diagram(PI), dg.full_diagram(AIRY))
    assert dg.are_isomorphic(dg.full_diagram(PI), dg.full_diagram(apply(F, PI)))


def _shuffled(g: dg.Diagram, rng: random.Random) -> dg.Diagram:
    perm = list(range(len(g)))
    rng.shuffle(perm)
    return dg.Diagram(
        tuple(g.labels[p] for p in perm),
        tuple(tuple(g.B[p][q] for q in perm) for p in perm),
        tuple(g.d[p] for p in perm),
    )


def test_isomorphism_agrees_with_networkx():
    rng = random.Random(33)
    for _ in range(100):
        a = dg.full_diagram(random_parameter(rng))
        b = dg.full_diagram(random_parameter(rng)) if rng.random() < 0.5 else _shuffled(a, rng)
        assert dg.are_isomorphic(a, b) == nx_isomorphic(a, b)


def test_fourier_invariance():
    rng = random.Random(34)
    done = 0
    while done < 100:
        t = random_parameter(rng)
        if t.s <= t.r:
            continue
        assert dg.are_isomorphic(dg.full_diagram(t), dg.full_diagram(apply(F, t)))
        done += 1


def test_dimension_is_constant_on_orbit_windows():
    rng = random.Random(35)
    done = 0
    while done < 25:
        t = random_type_one(rng, max_s=5, max_r=7)
        if not admissible(t):
            continue
        window = enumerate_orbit(t, 12)
        dims = {dg.wcv_dimension(dg.full_diagram(n)) for n in window.nodes}
        assert len(dims) == 1
        done += 1


def test_dimension_is_constant_on_twisted_windows():
    rng = random.Random(36)
    done = 0
    while done < 15:
        t = random_standard(rng, rng.randint(1, 2), max_s=4, max_r=5)
        if not admissible(t):
            continue
        window = enumerate_orbit(t, t.r + t.s, "c0")
        assert len({dg.wcv_dimension(dg.full_diagram(n)) for n in window.nodes}) == 1
        done += 1


def test_marking_independence_of_the_pairing():
    rng = random.Random(37)
    for _ in range(120):
        t = random_parameter(rng, max_inf=4)
        tame0 = truncate_at(t.c0, ONE)
        base = dg.cartan_pairing(dg.full_diagram(t))

        def orders(c):
            if not c or len(c.parts) > 3:
                return [None]
            mk = minimal_marking(c)
            return set(itertools.permutations(mk)) if len(mk) <= 5 else [mk]

        for m0 in orders(tame0):
            for minf in orders(t.cinf):
                assert dg.cartan_pairing(dg.full_diagram(t, m0, minf)) == base


def test_gamma_plus_values():
    plus, g = dg.gamma_plus(EX)
    assert plus == EX_PLUS
    assert plus.c0.rank == 4
    assert dg.are_isomorphic(g, dg.full_diagram(EX_PLUS))
    assert dg.gamma_plus(PI) == (PI, dg.full_diagram(PI))
    assert dg.gamma_plus(make(1, 5, 7, [5, 2]))[0] == PI
    with pytest.raises(Unsupported):
        dg.gamma_plus(ADAParameter(1, Slope(2, 1), ConjugacyClass(((parse_eigenvalue("-1"), YoungDiagram.of(1)),))))


def test_gamma_plus_scan_values():
    (node, g), = dg.gamma_plus_scan(PI, 8)
    assert g.B == ((2,),) and g.d == (1,)
    (node, g), = dg.gamma_plus_scan(EX, 8)
    assert dg.are_isomorphic(g, dg.full_diagram(EX_PLUS))
    (node, g), = dg.gamma_plus_scan(make(1, 1, 2, [1, 1]), 4)
    assert node.slope == Slope(1, 1)
    assert dg.are_isomorphic(g, dg.gamma_plus(make(1, 1, 2, [1, 1]))[1])


def test_gamma_plus_scan_agrees_for_type_one():
    rng = random.Random(38)
    done = 0
    while done < 30:
        t = random_type_one(rng, max_s=5, max_r=9)
        if t.s == 1 or not admissible(t):
            continue
        dg.check_gamma_plus(t, t.r + 2 * t.s)
        done += 1


def test_gamma_plus_scan_agrees_for_standard_without_full_columns():
    rng = random.Random(39)
    done = 0
    while done < 20:
        t = random_standard(rng, rng.randint(1, 3), max_s=5, max_r=7)
        y = t.c0.get(ONE)
        if t.s == 1 or not admissible(t) or t.m * t.s in y.columns:
            continue
        dg.check_gamma_plus(t, t.r + 2 * t.s)
        done += 1


def test_full_column_counterexample_to_closed_form_minimality():
    # Y has a column of height ms; twisted operations reach a nonnegative
    # diagram with fewer vertices than the (F-)^kappa closed form.
    beta1, beta2 = parse_eigenvalue("1/2*e(1/4)"), parse_eigenvalue("e(1/3)")
    cinf = ConjugacyClass(((beta1, YoungDiagram.of(1)), (beta2, YoungDiagram.of(1))))
    t = make(1, 4, 3, [4, 1], cinf)
    plus, g = dg.gamma_plus(t)
    assert plus == t and len(g) == 4
    (node, h), = dg.gamma_plus_scan(t, 10)
    assert node == ADAParameter(
        1, Slope(4, 3), ConjugacyClass(((ONE, YoungDiagram.of(1)), (beta1, YoungDiagram.of(3)))),
        ConjugacyClass(((beta2, YoungDiagram.of(1)),)))
    assert len(h) == 3
    assert dg.wcv_dimension(g) == dg.wcv_dimension(h) == 6
    with pytest.raises(StructureViolation):
        dg.check_gamma_plus(t, 10)


def test_dot_and_json():
    g = dg.full_diagram(make(1, 5, 7, [5, 2]))
    dot = g.to_dot()
    assert '"w1" [label="w1:1"];' in dot
    assert '"w1" -- "w1" [loops=-9];' in dot
    assert '"w1" -- "t0" [mult=7];' in dot
    assert g.to_json() == {"vertices": ["w1", "t0"], "B": [[-18, 7], [7, 0]], "d": [1, 2]}
