from collections import Counter
from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given

from lagorbits.repdata import (
    DimensionCapExceeded, IrrepSpec, dual_highest_weight, frobenius_schur_type,
    weight_system, weyl_dimension,
)
from lagorbits.rootsys import add, build_root_system, scale, sub, vec, weyl_orbit

from strategies import SIMPLE_LABELS, small_specs


def unit(rank, i, c=1):
    return tuple(c if j == i else 0 for j in range(1, rank + 1))


def zero(rs):
    return (Fraction(0),) * rs.ambient_dim


# ------------------------------------------------------------- examples

def test_dimension_examples():
    assert weyl_dimension(IrrepSpec.of("B3", (0, 0, 1))) == 8
    assert weyl_dimension(IrrepSpec.of("B3", (0, 0, 0))) == 1
    assert weyl_dimension(IrrepSpec.of("E6", unit(6, 1))) == 27
    assert weyl_dimension(IrrepSpec.of("E7", unit(7, 1))) == 56
    assert weyl_dimension(IrrepSpec.of("F4", unit(4, 4))) == 26
    assert weyl_dimension(IrrepSpec.of("G2", (1, 0))) == 7
    assert weyl_dimension(IrrepSpec.of("E8", unit(8, 8))) == 248


@pytest.mark.parametrize("l", [3, 4, 5, 6])
def test_c_lambda2_zero_multiplicity(l):
    spec = IrrepSpec.of(f"C{l}", unit(l, 2))
    assert weight_system(spec).multiplicity(zero(spec.rs)) == l - 1


def test_f4_lambda4_zero_multiplicity():
    spec = IrrepSpec.of("F4", unit(4, 4))
    assert weight_system(spec).multiplicity(zero(spec.rs)) == 2


def test_b2_standard_weights():
    ws = weight_system(IrrepSpec.of("B2", (1, 0)))
    assert ws.entries == {vec(1, 0): 1, vec(-1, 0): 1, vec(0, 1): 1, vec(0, -1): 1, vec(0, 0): 1}
    assert ws.dim == 5


def test_dual_examples():
    a2 = IrrepSpec.of("A2", (1, 0))
    assert dual_highest_weight(a2) == IrrepSpec.of("A2", (0, 1))
    b3 = IrrepSpec.of("B3", (0, 0, 1))
    assert dual_highest_weight(b3) == b3
    e6 = IrrepSpec.of("E6", unit(6, 1))
    assert dual_highest_weight(e6) == IrrepSpec.of("E6", unit(6, 6))


@pytest.mark.parametrize("label,coords,expected", [
    ("E7", unit(7, 1), "quaternionic"),
    ("F4", unit(4, 4), "real"),
    ("B4", unit(4, 4), "real"),
    ("B3", unit(3, 3), "real"),
    ("D6", unit(6, 5), "quaternionic"),
    ("A1", (1,), "quaternionic"),
    ("A1", (2,), "real"),
    ("C3", unit(3, 1), "quaternionic"),
    ("A2", (1, 0), "complex"),
    ("E6", unit(6, 1), "complex"),
    ("D5", unit(5, 5), "complex"),
    ("G2", (1, 0), "real"),
])
def test_frobenius_schur_examples(label, coords, expected):
    assert frobenius_schur_type(IrrepSpec.of(label, coords)) == expected


def test_product_frobenius_schur_rule():
    assert frobenius_schur_type(IrrepSpec.of("A1xA1", (1,), (1,))) == "real"
    assert frobenius_schur_type(IrrepSpec.of("A1xA1xA1", (1,), (1,), (1,))) == "quaternionic"
    assert frobenius_schur_type(IrrepSpec.of("A1xA2", (1,), (1, 0))) == "complex"


def test_dimension_cap():
    spec = IrrepSpec.of("E8", unit(8, 1))   # 3875
    with pytest.raises(DimensionCapExceeded):
        weight_system(spec)


def test_invalid_highest_weights():
    with pytest.raises(ValueError):
        IrrepSpec.of("B3", (1, -1, 0))
    with pytest.raises(ValueError):
        IrrepSpec.of("B3", (1, 0))
    with pytest.raises(ValueError):
        IrrepSpec.from_weight(build_root_system("A1"), vec(Fraction(1, 4), Fraction(-1, 4)))


def test_label_roundtrip():
    for text in ("B3[0,0,1]", "A1[1]xA1[1]", "G2[1,0]xC3[0,1,0]"):
        assert IrrepSpec.parse(text).label() == text


# ------------------------------------------- independent constructions

def _multiset_sum(weights, r):
    c = Counter()
    for combo in combinations(range(len(weights)), r):
        s = weights[combo[0]]
        for i in combo[1:]:
            s = add(s, weights[i])
        c[s] += 1
    return c


def _standard_weights(label):
    rs = build_root_system(label)
    return rs, [w for w, m in weight_system(IrrepSpec.of(label, unit(rs.rank, 1))).entries.items()
                for _ in range(m)]


@pytest.mark.parametrize("label", ["A2", "A3", "A4", "A5"])
def test_a_exterior_powers(label):
    rs, std = _standard_weights(label)
    for r in range(2, rs.rank + 1):
        spec = IrrepSpec.of(label, unit(rs.rank, r))
        assert Counter(weight_system(spec).entries) == _multiset_sum(std, r)


@pytest.mark.parametrize("label", ["C2", "C3", "C4", "C5"])
def test_c_lambda2_is_exterior_square_minus_trivial(label):
    rs, std = _standard_weights(label)
    expected = _multiset_sum(std, 2)
    expected[zero(rs)] -= 1
    assert Counter(weight_system(IrrepSpec.of(label, unit(rs.rank, 2))).entries) == +expected


@pytest.mark.parametrize("label", ["A2", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"])
def test_adjoint_weights_are_roots_and_zero(label):
    rs = build_root_system(label)
    top = max(rs.roots, key=lambda r: sum(rs.simple_root_coefficients(r)))
    spec = IrrepSpec.from_weight(rs, top)
    ws = weight_system(spec, dim_cap=300)
    expected = {r: 1 for r in rs.roots}
    expected[zero(rs)] = rs.rank
    assert ws.entries == expected


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_spin_weights(n):
    half = Fraction(1, 2)
    signs = [tuple(s * half for s in v) for v in product((1, -1), repeat=n)]
    b = weight_system(IrrepSpec.of(f"B{n}", unit(n, n)))
    assert b.entries == {w: 1 for w in signs}
    if n >= 3:
        d = weight_system(IrrepSpec.of(f"D{n}", unit(n, n)))
        even = {w for w in signs if sum(1 for x in w if x < 0) % 2 == 0}
        assert d.entries == {w: 1 for w in even}


# ------------------------------------------------------------- properties

@given(small_specs)
def test_weight_system_invariants(spec):
    rs = spec.rs
    ws = weight_system(spec)
    assert ws.dim == weyl_dimension(spec)
    total = zero(rs)
    for w, m in ws.entries.items():
        total = add(total, scale(m, w))
    assert total == zero(rs)
    for w, m in ws.entries.items():
        assert all(ws.entries[x] == m for x in weyl_orbit(rs, w))
        diff = sub(spec.highest_weight, w)
        # difference from the highest weight is a nonnegative integer combination of simple roots
        coeffs = [x for x in (sum(d * c for d, c in zip(diff, cw)) for cw in _coweights(rs))]
        assert all(c.denominator == 1 and c >= 0 for c in coeffs)
    assert frobenius_schur_type(spec) == frobenius_schur_type(dual_highest_weight(spec))


def _coweights(rs):
    return [scale(Fraction(2) / sum(x * x for x in a), w) for a, w in zip(rs.simple_roots, rs.fundamental_weights)]


@given(small_specs)
def test_product_dimension_and_convolution(spec):
    if spec.rs.is_simple:
        return
    parts = spec.factor_specs()
    dim = 1
    conv = Counter({zero(spec.rs): 1})
    for f, fs in zip(spec.rs.factors, parts):
        dim *= weyl_dimension(fs)
        nxt = Counter()
        for w, m in conv.items():
            for v, k in weight_system(fs).entries.items():
                padded = (Fraction(0),) * f.offset + v + (Fraction(0),) * (spec.rs.ambient_dim - f.offset - len(v))
                nxt[add(w, padded)] += m * k
        conv = nxt
    assert weyl_dimension(spec) == dim
    assert Counter(weight_system(spec).entries) == conv


@pytest.mark.parametrize("label,idx", [("A4", 1), ("A4", 2), ("B4", 4), ("C4", 1), ("D5", 1),
                                       ("D5", 5), ("E6", 1), ("E7", 1)])
def test_minuscule_single_orbit(label, idx):
    rs = build_root_system(label)
    spec = IrrepSpec.of(label, unit(rs.rank, idx))
    ws = weight_system(spec)
    assert set(ws.entries.values()) == {1}
    assert weyl_orbit(rs, spec.highest_weight) == ws.entries.keys()


def test_weight_system_json_is_sorted():
    import json
    data = json.loads(weight_system(IrrepSpec.of("B2", (1, 0))).to_json())
    assert [d["weight"] for d in data] == [["1", "0"], ["0", "1"], ["0", "0"], ["0", "-1"], ["-1", "0"]]
