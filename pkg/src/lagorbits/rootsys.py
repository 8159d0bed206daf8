"""Exact root systems of simple Lie algebras and their finite products.

Every vector is a tuple of :class:`fractions.Fraction` in a Euclidean
ambient space with the standard dot product:

* ``A_n`` lives in R^{n+1} (sum-zero hyperplane), ``B_n``, ``C_n``, ``D_n``
  in R^n, ``G_2`` in the sum-zero plane of R^3, ``F_4`` in R^4 and the
  ``E`` series in R^8 (Bourbaki simple roots).
* ``E_7`` is numbered so that the first fundamental weight is the 56-dim
  minuscule weight (reverse of the Bourbaki chain), ``E_6``/``F_4``/``G_2``
  follow Bourbaki.
* ``C_2`` and ``D_3`` are accepted and realized in their own coordinates
  (isomorphic to ``B_2`` and ``A_3``).

Products concatenate coordinates; a root of a product is a root of one factor
padded with zeros.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Iterable, Sequence

Weight = tuple  # tuple[Fraction, ...]

__all__ = [
    "Weight",
    "RootSystem",
    "SimpleFactor",
    "build_root_system",
    "parse_label",
    "vec",
    "dot",
    "add",
    "sub",
    "neg",
    "scale",
    "is_root",
    "simple_reflection",
    "weyl_orbit",
    "dominant_representative",
    "format_weight",
]

F = Fraction
HALF = Fraction(1, 2)


def vec(*xs) -> Weight:
    if len(xs) == 1 and not isinstance(xs[0], (int, Fraction)):
        xs = tuple(xs[0])
    return tuple(Fraction(x) for x in xs)


def dot(u: Weight, v: Weight) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Weight, v: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Weight, v: Weight) -> Weight:
    return tuple(a - b for a, b in zip(u, v))


def neg(u: Weight) -> Weight:
    return tuple(-a for a in u)


def scale(c, u: Weight) -> Weight:
    return tuple(c * a for a in u)


def _unit(n: int, i: int, c=1) -> Weight:
    v = [F(0)] * n
    v[i] = F(c)
    return tuple(v)


def _solve(rows: list[list[Fraction]], rhs: list[list[Fraction]]) -> list[list[Fraction]]:
    """Solve A X = B exactly for square nonsingular A (Gauss-Jordan)."""
    n = len(rows)
    m = len(rhs[0])
    a = [list(r) + list(b) for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[col])]
    return [row[n:n + m] for row in a]


# ---------------------------------------------------------------- simple roots

def _simple_roots_A(n):
    d = n + 1
    return [sub(_unit(d, i), _unit(d, i + 1)) for i in range(n)], d


def _simple_roots_B(n):
    roots = [sub(_unit(n, i), _unit(n, i + 1)) for i in range(n - 1)]
    roots.append(_unit(n, n - 1))
    return roots, n


def _simple_roots_C(n):
    roots = [sub(_unit(n, i), _unit(n, i + 1)) for i in range(n - 1)]
    roots.append(_unit(n, n - 1, 2))
    return roots, n


def _simple_roots_D(n):
    roots = [sub(_unit(n, i), _unit(n, i + 1)) for i in range(n - 1)]
    roots.append(add(_unit(n, n - 2), _unit(n, n - 1)))
    return roots, n


def _bourbaki_e8():
    a1 = vec(HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF)
    a2 = add(_unit(8, 0), _unit(8, 1))
    rest = [sub(_unit(8, i), _unit(8, i - 1)) for i in range(1, 7)]
    return [a1, a2] + rest


def _simple_roots_E(n):
    b = _bourbaki_e8()[:n]
    if n == 7:
        # chain 7-6-5-4-3-1 with node 2 on node 4: first weight is the 56
        b = [b[6], b[5], b[4], b[3], b[2], b[0], b[1]]
    return b, 8


def _simple_roots_F(n):
    return [
        vec(0, 1, -1, 0),
        vec(0, 0, 1, -1),
        vec(0, 0, 0, 1),
        vec(HALF, -HALF, -HALF, -HALF),
    ], 4


def _simple_roots_G(n):
    return [vec(1, -1, 0), vec(-2, 1, 1)], 3


_BUILDERS = {
    "A": _simple_roots_A,
    "B": _simple_roots_B,
    "C": _simple_roots_C,
    "D": _simple_roots_D,
    "E": _simple_roots_E,
    "F": _simple_roots_F,
    "G": _simple_roots_G,
}

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

_WEYL_ORDER_FIXED = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                     ("F", 4): 1152, ("G", 2): 12}


def _classical_root_count(t: str, n: int) -> int:
    return {
        "A": n * (n + 1),
        "B": 2 * n * n,
        "C": 2 * n * n,
        "D": 2 * n * (n - 1),
        "E": {6: 72, 7: 126, 8: 240}.get(n, -1),
        "F": 48,
        "G": 12,
    }[t]


# --------------------------------------------------------------- data classes

@dataclass(frozen=True)
class SimpleFactor:
    """One simple summand of a (possibly product) root system."""

    type: str
    rank: int
    offset: int          # first ambient coordinate owned by this factor
    ambient_dim: int
    root_offset: int     # index of this factor's first simple root

    @property
    def label(self) -> str:
        return f"{self.type}{self.rank}"

    @property
    def coords(self) -> slice:
        return slice(self.offset, self.offset + self.ambient_dim)


def parse_label(label) -> list[tuple[str, int]]:
    """``"B3"``, ``"A1xA1"``, ``"A1*A2"`` or a list of such -> [(type, rank)]."""
    if isinstance(label, (list, tuple)) and label and isinstance(label[0], tuple):
        parts = [f"{t}{r}" for t, r in label]
    elif isinstance(label, (list, tuple)):
        parts = list(label)
    else:
        parts = re.split(r"\s*[x×*]\s*", str(label).strip())
    out = []
    for p in parts:
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", p)
        if not m:
            raise ValueError(f"unknown root system label: {p!r}")
        t, r = m.group(1).upper(), int(m.group(2))
        if t in _FIXED_RANKS:
            if r not in _FIXED_RANKS[t]:
                raise ValueError(f"rank out of range for type {t}: {r}")
        elif r < _MIN_RANK[t]:
            raise ValueError(f"rank out of range for type {t}: {r}")
        out.append((t, r))
    if not out:
        raise ValueError("empty root system label")
    return out


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable root datum. Equality and hashing go through ``label``."""

    label: str
    factors: tuple
    ambient_dim: int
    simple_roots: tuple
    roots: frozenset
    fundamental_weights: tuple
    _simple_coords: dict = field(repr=False)   # root -> coefficients in simple roots

    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.label == self.label

    def __hash__(self):
        return hash(("RootSystem", self.label))

    def __reduce__(self):
        return (build_root_system, (self.label,))

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @property
    def is_simple(self) -> bool:
        return len(self.factors) == 1

    @property
    def dim(self) -> int:
        """Dimension of the Lie algebra."""
        return len(self.roots) + self.rank

    @cached_property
    def positive_roots(self) -> tuple:
        pos = [r for r in self.roots if sum(self._simple_coords[r]) > 0]
        return tuple(sorted(pos, key=lambda r: (sum(self._simple_coords[r]), r)))

    @cached_property
    def rho(self) -> Weight:
        s = tuple(F(0) for _ in range(self.ambient_dim))
        for r in self.positive_roots:
            s = add(s, r)
        return scale(HALF, s)

    @cached_property
    def simple_coroots(self) -> tuple:
        return tuple(scale(F(2) / dot(a, a), a) for a in self.simple_roots)

    @cached_property
    def inner_product(self):
        """Gram matrix of the (standard) ambient form."""
        n = self.ambient_dim
        return tuple(tuple(F(int(i == j)) for j in range(n)) for i in range(n))

    def simple_root_coefficients(self, root: Weight) -> tuple:
        """Integer coefficients of ``root`` in the simple-root basis."""
        try:
            return self._simple_coords[tuple(root)]
        except KeyError:
            raise ValueError(f"not a root: {format_weight(root)}") from None

    def factor_of(self, index: int) -> SimpleFactor:
        for f in self.factors:
            if f.root_offset <= index < f.root_offset + f.rank:
                return f
        raise IndexError(index)

    def pairing(self, w: Weight, i: int) -> Fraction:
        """<w, alpha_i^vee> for 0-based simple index ``i``."""
        return dot(w, self.simple_coroots[i])

    def is_dominant(self, w: Weight) -> bool:
        return all(dot(w, c) >= 0 for c in self.simple_coroots)

    def from_fundamental(self, coords: Sequence) -> Weight:
        """Weight with the given coordinates in the fundamental-weight basis."""
        if len(coords) != self.rank:
            raise ValueError(f"{self.label} needs {self.rank} fundamental coordinates, got {len(coords)}")
        w = tuple(F(0) for _ in range(self.ambient_dim))
        for c, fw in zip(coords, self.fundamental_weights):
            if c:
                w = add(w, scale(F(c), fw))
        return w

    def to_fundamental(self, w: Weight) -> tuple:
        return tuple(dot(w, c) for c in self.simple_coroots)

    @cached_property
    def weyl_group_order(self) -> int:
        order = 1
        for f in self.factors:
            t, n = f.type, f.rank
            if (t, n) in _WEYL_ORDER_FIXED:
                order *= _WEYL_ORDER_FIXED[(t, n)]
            elif t == "A":
                order *= factorial(n + 1)
            elif t in "BC":
                order *= 2 ** n * factorial(n)
            else:
                order *= 2 ** (n - 1) * factorial(n)
        return order

    def classical_root_count(self) -> int:
        return sum(_classical_root_count(f.type, f.rank) for f in self.factors)

    def to_json(self) -> str:
        """Canonical listing of the root datum with sorted exact coordinates."""
        data = {
            "label": self.label,
            "ambient_dim": self.ambient_dim,
            "simple_roots": [_coords_str(r) for r in self.simple_roots],
            "fundamental_weights": [_coords_str(w) for w in self.fundamental_weights],
            "rho": _coords_str(self.rho),
            "roots": [_coords_str(r) for r in sorted(self.roots)],
        }
        return json.dumps(data, indent=1, sort_keys=True)


def _coords_str(w: Weight) -> list[str]:
    return [str(x) for x in w]


def format_weight(w: Weight) -> str:
    return "(" + ", ".join(str(x) for x in w) + ")"


# ----------------------------------------------------------------- building

def _closure(simple: list[Weight]) -> dict:
    """All roots generated from the simple roots, with simple-root coefficients."""
    r = len(simple)
    cor = [scale(F(2) / dot(a, a), a) for a in simple]
    coords = {a: tuple(int(i == j) for j in range(r)) for i, a in enumerate(simple)}
    work = list(coords)
    while work:
        x = work.pop()
        cx = coords[x]
        for i, a in enumerate(simple):
            p = dot(x, cor[i])
            if p == 0:
                continue
            y = sub(x, scale(p, a))
            if y not in coords:
                cy = list(cx)
                cy[i] -= int(p)
                coords[y] = tuple(cy)
                work.append(y)
    return coords


def _fundamental_weights(simple: list[Weight]) -> list[Weight]:
    # omega_i = sum_k c_ik alpha_k with <omega_i, alpha_j^vee> = delta_ij
    r = len(simple)
    cor = [scale(F(2) / dot(a, a), a) for a in simple]
    # Cartan-type matrix M[k][j] = <alpha_k, alpha_j^vee>; C M = I => M^T C^T = I
    m_t = [[dot(simple[k], cor[j]) for k in range(r)] for j in range(r)]
    ident = [[F(int(i == j)) for j in range(r)] for i in range(r)]
    c_t = _solve(m_t, ident)
    out = []
    d = len(simple[0])
    for i in range(r):
        w = tuple(F(0) for _ in range(d))
        for k in range(r):
            if c_t[k][i]:
                w = add(w, scale(c_t[k][i], simple[k]))
        out.append(w)
    return out


_CACHE: dict = {}


def build_root_system(label) -> RootSystem:
    """Build the standard Euclidean realization for ``label``.

    ``label`` is ``"B3"``, ``"E6"``, a product such as ``"A1xA1"``, or a list
    of component labels.
    """
    parts = parse_label(label)
    key = "x".join(f"{t}{r}" for t, r in parts)
    if key in _CACHE:
        return _CACHE[key]
    factors = []
    blocks = []
    offset = 0
    root_offset = 0
    for t, r in parts:
        simple, d = _BUILDERS[t](r)
        blocks.append((simple, d))
        factors.append(SimpleFactor(t, r, offset, d, root_offset))
        offset += d
        root_offset += r
    total = offset

    def pad(w, f):
        return tuple([F(0)] * f.offset) + tuple(w) + tuple([F(0)] * (total - f.offset - f.ambient_dim))

    simple_all, fund_all, coords_all = [], [], {}
    for (simple, d), f in zip(blocks, factors):
        closure = _closure(simple)
        simple_all += [pad(a, f) for a in simple]
        fund_all += [pad(w, f) for w in _fundamental_weights(simple)]
        for root, c in closure.items():
            full = [0] * root_offset
            full[f.root_offset:f.root_offset + f.rank] = c
            coords_all[pad(root, f)] = tuple(full)
    for k, c in list(coords_all.items()):
        coords_all[k] = tuple(c) + (0,) * (root_offset - len(c))
    rs = RootSystem(
        label=key,
        factors=tuple(factors),
        ambient_dim=total,
        simple_roots=tuple(simple_all),
        roots=frozenset(coords_all),
        fundamental_weights=tuple(fund_all),
        _simple_coords=coords_all,
    )
    _CACHE[key] = rs
    return rs


# ------------------------------------------------------------ Weyl machinery

def _check_dim(rs: RootSystem, v: Weight):
    if len(v) != rs.ambient_dim:
        raise ValueError(f"dimension mismatch: {len(v)} coordinates for {rs.label} "
                         f"(ambient dimension {rs.ambient_dim})")


def is_root(rs: RootSystem, v: Iterable) -> bool:
    v = tuple(F(x) for x in v)
    _check_dim(rs, v)
    return v in rs.roots


def simple_reflection(rs: RootSystem, i: int, w: Weight) -> Weight:
    """Reflect ``w`` in the ``i``-th simple root (1-based)."""
    if not 1 <= i <= rs.rank:
        raise IndexError(f"simple root index {i} out of range 1..{rs.rank}")
    a = rs.simple_roots[i - 1]
    p = dot(w, rs.simple_coroots[i - 1])
    return sub(w, scale(p, a)) if p else tuple(w)


def weyl_orbit(rs: RootSystem, w: Weight) -> frozenset:
    """Orbit of ``w`` under the Weyl group, by worklist closure."""
    w = tuple(F(x) for x in w)
    _check_dim(rs, w)
    seen = {w}
    work = [w]
    cor = rs.simple_coroots
    while work:
        x = work.pop()
        for a, c in zip(rs.simple_roots, cor):
            p = dot(x, c)
            if p:
                y = sub(x, scale(p, a))
                if y not in seen:
                    seen.add(y)
                    work.append(y)
    return frozenset(seen)


def dominant_representative(rs: RootSystem, w: Weight) -> Weight:
    w = tuple(F(x) for x in w)
    _check_dim(rs, w)
    cor = rs.simple_coroots
    while True:
        for a, c in zip(rs.simple_roots, cor):
            p = dot(w, c)
            if p < 0:
                w = sub(w, scale(p, a))
                break
        else:
            return w
