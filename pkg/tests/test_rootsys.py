from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from lagorbits.rootsys import (
    add, build_root_system, dominant_representative, dot, is_root, neg, scale,
    simple_reflection, sub, vec, weyl_orbit,
)

from strategies import SIMPLE_LABELS, integral_weights, root_systems

CLASSICAL_COUNTS = {"A1": 2, "A2": 6, "A3": 12, "A4": 20, "B2": 8, "B3": 18, "B4": 32,
                    "C2": 8, "C3": 18, "C4": 32, "D3": 12, "D4": 24, "D5": 40,
                    "G2": 12, "F4": 48, "E6": 72, "E7": 126, "E8": 240}


def e(n, *pairs):
    v = [0] * n
    for i, c in pairs:
        v[i - 1] = c
    return vec(*v)


def test_c3_roots_match_the_explicit_list():
    rs = build_root_system("C3")
    expected = set()
    for i in range(1, 4):
        expected |= {e(3, (i, 2)), e(3, (i, -2))}
        for j in range(i + 1, 4):
            for si, sj in product((1, -1), repeat=2):
                expected.add(e(3, (i, si), (j, sj)))
    assert rs.roots == expected
    assert len(rs.roots) == 18


def test_a1_roots():
    rs = build_root_system("A1")
    assert rs.roots == {vec(1, -1), vec(-1, 1)}


def test_g2_long_and_short_roots():
    rs = build_root_system("G2")
    lengths = sorted(dot(r, r) for r in rs.roots)
    assert len(rs.roots) == 12
    assert lengths.count(lengths[0]) == 6 and lengths.count(lengths[-1]) == 6
    assert lengths[-1] == 3 * lengths[0]


@pytest.mark.parametrize("label", SIMPLE_LABELS)
def test_root_counts_and_structure(label):
    rs = build_root_system(label)
    assert len(rs.roots) == CLASSICAL_COUNTS[label] == rs.classical_root_count()
    assert all(neg(r) in rs.roots for r in rs.roots)
    for r in rs.roots:
        c = rs.simple_root_coefficients(r)
        assert all(x >= 0 for x in c) or all(x <= 0 for x in c)
        s = vec(*[0] * rs.ambient_dim)
        for ci, a in zip(c, rs.simple_roots):
            s = add(s, scale(ci, a))
        assert s == r
    two_rho = vec(*[0] * rs.ambient_dim)
    for r in rs.positive_roots:
        two_rho = add(two_rho, r)
    assert two_rho == scale(2, rs.rho)


@pytest.mark.parametrize("label", SIMPLE_LABELS)
def test_fundamental_weights_dual_to_simple_coroots(label):
    rs = build_root_system(label)
    for i, w in enumerate(rs.fundamental_weights):
        for j, c in enumerate(rs.simple_coroots):
            assert dot(w, c) == (1 if i == j else 0)


@pytest.mark.parametrize("label", SIMPLE_LABELS)
def test_roots_are_orbits_of_simple_roots(label):
    rs = build_root_system(label)
    orbits = set()
    for a in rs.simple_roots:
        orbits |= weyl_orbit(rs, a)
    assert orbits == rs.roots


def test_is_root_examples():
    b2 = build_root_system("B2")
    assert is_root(b2, (1, -1))
    assert not is_root(b2, (2, 0))
    assert is_root(build_root_system("C3"), (0, 2, 0))
    with pytest.raises(ValueError, match="dimension mismatch"):
        is_root(b2, (1, 0, 0))


def test_simple_reflection_examples():
    a1 = build_root_system("A1")
    assert simple_reflection(a1, 1, vec(1, -1)) == vec(-1, 1)
    b2 = build_root_system("B2")
    # B2 simple roots: e1 - e2, e2; reflecting in e2 fixes e1
    assert b2.simple_roots[1] == vec(0, 1)
    assert simple_reflection(b2, 2, vec(1, 0)) == vec(1, 0)
    g2 = build_root_system("G2")
    for i in (1, 2):
        assert simple_reflection(g2, i, g2.rho) == sub(g2.rho, g2.simple_roots[i - 1])
    with pytest.raises(IndexError):
        simple_reflection(b2, 3, vec(1, 0))


def test_weyl_orbit_examples():
    b2 = build_root_system("B2")
    assert weyl_orbit(b2, vec(1, 0)) == {vec(1, 0), vec(-1, 0), vec(0, 1), vec(0, -1)}
    for label in SIMPLE_LABELS:
        rs = build_root_system(label)
        zero = vec(*[0] * rs.ambient_dim)
        assert weyl_orbit(rs, zero) == {zero}
    a2 = build_root_system("A2")
    assert len(weyl_orbit(a2, a2.fundamental_weights[0])) == 3


def test_dominant_representative_examples():
    b2 = build_root_system("B2")
    assert dominant_representative(b2, vec(-1, 0)) == vec(1, 0)
    a2 = build_root_system("A2")
    lam = a2.fundamental_weights[0]
    assert {dominant_representative(a2, w) for w in weyl_orbit(a2, lam)} == {lam}
    c3 = build_root_system("C3")
    d = dominant_representative(c3, vec(-1, 0, 1))
    assert d == vec(1, 1, 0)
    for w in weyl_orbit(c3, vec(3, -1, 2)):
        d = dominant_representative(c3, w)
        assert list(d) == sorted(d, reverse=True) and min(d) >= 0
        # the dominance-maximal orbit element
        assert d == max(weyl_orbit(c3, w))


@given(integral_weights(), st.data())
def test_orbit_closed_and_divides_group_order(rw, data):
    rs, w = rw
    orb = weyl_orbit(rs, w)
    for x in orb:
        for i in range(1, rs.rank + 1):
            assert simple_reflection(rs, i, x) in orb
    assert rs.weyl_group_order % len(orb) == 0
    other = data.draw(st.sampled_from(sorted(orb)))
    assert dominant_representative(rs, other) == dominant_representative(rs, w)
    d = dominant_representative(rs, w)
    assert rs.is_dominant(d) and d in orb


@given(root_systems)
def test_reflections_preserve_roots(rs):
    for i in range(1, rs.rank + 1):
        assert {simple_reflection(rs, i, r) for r in rs.roots} == rs.roots


@pytest.mark.parametrize("labels", [("A1", "A1"), ("A2", "B2"), ("G2", "A1", "C3")])
def test_product_roots_are_padded_factor_roots(labels):
    rs = build_root_system(list(labels))
    expected = set()
    offset = 0
    total = rs.ambient_dim
    for lab in labels:
        f = build_root_system(lab)
        for r in f.roots:
            expected.add(vec(*([0] * offset), *r, *([0] * (total - offset - f.ambient_dim))))
        offset += f.ambient_dim
    assert rs.roots == expected
    # no mixed roots: every root is supported on a single factor
    for r in rs.roots:
        support = {i for i, f in enumerate(rs.factors) if any(r[f.coords])}
        assert len(support) == 1


def test_labels_and_errors():
    assert build_root_system("A1*A1") is build_root_system("A1xA1")
    with pytest.raises(ValueError):
        build_root_system("E9")
    with pytest.raises(ValueError):
        build_root_system("B1")
    with pytest.raises(ValueError):
        build_root_system("Q3")


def test_weyl_group_orders_via_regular_orbit():
    for label in ("A3", "B3", "C3", "D4", "G2"):
        rs = build_root_system(label)
        assert len(weyl_orbit(rs, rs.rho)) == rs.weyl_group_order


def test_exact_coordinates():
    rs = build_root_system("E8")
    assert all(isinstance(x, Fraction) for r in rs.roots for x in r)
    assert Fraction(1, 2) in {abs(x) for r in rs.roots for x in r}
