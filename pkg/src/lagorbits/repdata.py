"""Weight systems of irreducible representations.

Multiplicities come from Freudenthal's recursion over dominant weights,
extended to the whole weight system by Weyl invariance. Representations of
product algebras are outer tensor products of one irrep per simple factor.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .rootsys import (
    RootSystem,
    Weight,
    add,
    build_root_system,
    dominant_representative,
    dot,
    neg,
    scale,
    sub,
    weyl_orbit,
)

__all__ = [
    "IrrepSpec",
    "WeightSystem",
    "DimensionCapExceeded",
    "weyl_dimension",
    "weight_system",
    "dual_highest_weight",
    "frobenius_schur_type",
    "DEFAULT_DIM_CAP",
]

DEFAULT_DIM_CAP = 1024


class DimensionCapExceeded(ValueError):
    pass


def _factor_system(rs: RootSystem, i: int) -> RootSystem:
    return build_root_system(rs.factors[i].label)


@dataclass(frozen=True)
class IrrepSpec:
    """An irreducible representation, one dominant highest weight per factor.

    ``fundamental`` holds, per simple factor, the integer coordinates of the
    highest weight in that factor's fundamental-weight basis.
    """

    rs: RootSystem
    fundamental: tuple

    def __post_init__(self):
        fund = tuple(tuple(int(c) for c in f) for f in self.fundamental)
        object.__setattr__(self, "fundamental", fund)
        if len(fund) != len(self.rs.factors):
            raise ValueError(f"{self.rs.label} has {len(self.rs.factors)} factors, "
                             f"got {len(fund)} highest weights")
        for f, coords in zip(self.rs.factors, fund):
            if len(coords) != f.rank:
                raise ValueError(f"{f.label} needs {f.rank} fundamental coordinates")
            if any(c < 0 for c in coords):
                raise ValueError(f"highest weight {coords} of {f.label} is not dominant")

    @classmethod
    def of(cls, label, *coords) -> "IrrepSpec":
        """``IrrepSpec.of("B3", (0, 0, 1))`` or ``IrrepSpec.of("A1xA1", (1,), (1,))``."""
        rs = label if isinstance(label, RootSystem) else build_root_system(label)
        if len(rs.factors) == 1 and coords and not isinstance(coords[0], (tuple, list)):
            coords = (tuple(coords),)
        return cls(rs, tuple(coords))

    @classmethod
    def from_weight(cls, rs: RootSystem, w: Weight) -> "IrrepSpec":
        """Spec from a dominant ambient-coordinate highest weight."""
        fund = rs.to_fundamental(w)
        if any(c < 0 or c.denominator != 1 for c in fund):
            raise ValueError("highest weight must be dominant and integral")
        out, pos = [], 0
        for f in rs.factors:
            out.append(tuple(int(c) for c in fund[pos:pos + f.rank]))
            pos += f.rank
        return cls(rs, tuple(out))

    @property
    def flat_fundamental(self) -> tuple:
        return tuple(c for f in self.fundamental for c in f)

    @cached_property
    def highest_weight(self) -> Weight:
        return self.rs.from_fundamental(self.flat_fundamental)

    @property
    def highest_weights(self) -> tuple:
        """Per-factor highest weights in each factor's own coordinates."""
        hw = self.highest_weight
        return tuple(hw[f.coords] for f in self.rs.factors)

    @property
    def is_simple(self) -> bool:
        return self.rs.is_simple

    def factor_specs(self) -> tuple:
        return tuple(IrrepSpec(_factor_system(self.rs, i), (c,))
                     for i, c in enumerate(self.fundamental))

    def label(self) -> str:
        parts = []
        for f, coords in zip(self.rs.factors, self.fundamental):
            parts.append(f"{f.label}[{','.join(map(str, coords))}]")
        return "x".join(parts)

    def __str__(self):
        return self.label()

    @classmethod
    def parse(cls, text: str) -> "IrrepSpec":
        """Inverse of :meth:`label`, e.g. ``"B3[0,0,1]"`` or ``"A1[1]xA1[1]"``."""
        labels, coords = [], []
        for part in text.split("x"):
            name, _, rest = part.partition("[")
            labels.append(name)
            coords.append(tuple(int(c) for c in rest.rstrip("]").split(",") if c != ""))
        return cls(build_root_system(labels), tuple(coords))

    def __reduce__(self):
        return (IrrepSpec.parse, (self.label(),))


@dataclass(frozen=True)
class WeightSystem:
    entries: dict          # Weight -> multiplicity

    @cached_property
    def dim(self) -> int:
        return sum(self.entries.values())

    @cached_property
    def weights(self) -> tuple:
        """Weights in a deterministic order (descending coordinates)."""
        return tuple(sorted(self.entries, reverse=True))

    def multiplicity(self, w) -> int:
        return self.entries.get(tuple(Fraction(x) for x in w), 0)

    def __contains__(self, w):
        return tuple(w) in self.entries

    def __len__(self):
        return len(self.entries)

    def to_json(self) -> str:
        data = [{"weight": [str(x) for x in w], "multiplicity": self.entries[w]}
                for w in self.weights]
        return json.dumps(data, indent=1)


# -------------------------------------------------------------- dimensions

_coroot_cache: dict = {}


def _positive_coroot_coefficients(rs: RootSystem) -> tuple:
    """Each positive coroot in the simple-coroot basis (nonnegative integers)."""
    if rs.label not in _coroot_cache:
        norms = [dot(a, a) for a in rs.simple_roots]
        rows = []
        for a in rs.positive_roots:
            na = dot(a, a)
            c = [x * n / na for x, n in zip(rs.simple_root_coefficients(a), norms)]
            assert all(x.denominator == 1 for x in c)
            rows.append(tuple(int(x) for x in c))
        _coroot_cache[rs.label] = tuple(rows)
    return _coroot_cache[rs.label]


def weyl_dimension(spec: IrrepSpec) -> int:
    """Weyl's formula: prod over positive coroots of <lam + rho, a^v> / <rho, a^v>."""
    lam = spec.flat_fundamental
    num = den = 1
    for c in _positive_coroot_coefficients(spec.rs):
        num *= sum(ci * (li + 1) for ci, li in zip(c, lam))
        den *= sum(c)
    assert num % den == 0
    return num // den


# -------------------------------------------------------------- Freudenthal

def _dominant_weights(rs: RootSystem, lam: Weight) -> list:
    """Dominant weights of V(lam), sorted by depth below ``lam``."""
    found = {lam: 0}
    frontier = [lam]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for mu in frontier:
            for a in rs.positive_roots:
                nu = sub(mu, a)
                if nu not in found and rs.is_dominant(nu):
                    found[nu] = depth
                    nxt.append(nu)
        frontier = nxt
    # depth = height of lam - nu in simple roots; recompute it exactly
    heights = {}
    for nu in found:
        diff = sub(lam, nu)
        heights[nu] = sum(dot(diff, w) for w in _coweights(rs))
    return sorted(found, key=lambda nu: (heights[nu], tuple(-x for x in nu)))


def _coweights(rs: RootSystem):
    # fundamental coweights: pairing with them gives simple-root coefficients
    return tuple(scale(Fraction(2) / dot(a, a), w) for a, w in zip(rs.simple_roots, rs.fundamental_weights))


def _simple_weight_system(rs: RootSystem, lam: Weight) -> dict:
    rho = rs.rho
    lr = add(lam, rho)
    norm_top = dot(lr, lr)
    dom = _dominant_weights(rs, lam)
    mult: dict = {}

    def m(nu):
        d = dominant_representative(rs, nu)
        return mult.get(d, 0)

    for mu in dom:
        if mu == lam:
            mult[mu] = 1
            continue
        total = Fraction(0)
        for a in rs.positive_roots:
            j = 1
            while True:
                nu = add(mu, scale(j, a))
                mn = m(nu)
                if mn == 0:
                    break
                total += mn * dot(nu, a)
                j += 1
        mr = add(mu, rho)
        val = 2 * total / (norm_top - dot(mr, mr))
        assert val.denominator == 1 and val >= 0, (mu, val)
        if val:
            mult[mu] = int(val)
    entries = {}
    for mu, k in mult.items():
        for w in weyl_orbit(rs, mu):
            entries[w] = k
    return entries


_ws_cache: dict = {}
_ws_lock = threading.Lock()


def weight_system(spec: IrrepSpec, dim_cap: int = DEFAULT_DIM_CAP) -> WeightSystem:
    """All weights of ``spec`` with multiplicities."""
    dim = weyl_dimension(spec)
    if dim > dim_cap:
        raise DimensionCapExceeded(f"{spec.label()} has dimension {dim} > cap {dim_cap}")
    key = spec.label()
    with _ws_lock:
        if key in _ws_cache:
            return _ws_cache[key]
    rs = spec.rs
    total = {tuple(Fraction(0) for _ in range(rs.ambient_dim)): 1}
    for f, fs in zip(rs.factors, spec.factor_specs()):
        part = _simple_weight_system(fs.rs, fs.highest_weight)
        pre = (Fraction(0),) * f.offset
        post = (Fraction(0),) * (rs.ambient_dim - f.offset - f.ambient_dim)
        nxt: dict = {}
        for w, k in total.items():
            for v, m in part.items():
                key2 = add(w, pre + v + post)
                nxt[key2] = nxt.get(key2, 0) + k * m
        total = nxt
    ws = WeightSystem(total)
    assert ws.dim == dim, (spec.label(), ws.dim, dim)
    with _ws_lock:
        _ws_cache[key] = ws
    return ws


# ---------------------------------------------------------------- duality

def dual_highest_weight(spec: IrrepSpec) -> IrrepSpec:
    """Highest weight of the dual, ``-w0(lambda)``."""
    lam = dominant_representative(spec.rs, neg(spec.highest_weight))
    return IrrepSpec.from_weight(spec.rs, lam)


def _simple_fs_type(spec: IrrepSpec) -> str:
    if dual_highest_weight(spec) != spec:
        return "complex"
    rs = spec.rs
    lam = spec.highest_weight
    # <lambda, 2 rho^vee> = sum over positive coroots
    s = sum((2 * dot(lam, a) / dot(a, a) for a in rs.positive_roots), Fraction(0))
    assert s.denominator == 1
    return "real" if s.numerator % 2 == 0 else "quaternionic"


def frobenius_schur_type(spec: IrrepSpec) -> str:
    """One of ``"real"``, ``"complex"``, ``"quaternionic"``."""
    types = [_simple_fs_type(fs) for fs in spec.factor_specs()]
    if "complex" in types:
        return "complex"
    return "quaternionic" if types.count("quaternionic") % 2 else "real"
