"""Torus-invariant k-planes and the isotropic/Lagrangian test.

A torus-invariant plane is a sum of whole weight spaces ``V_lam`` over a
subset ``Q`` of the weights. Its orbit is

* isotropic iff ``sum(m_lam * lam for lam in Q) == 0``;
* of real dimension ``#{alpha in R : lam + alpha in Lambda \\ Q for some lam in Q}``;
* Lagrangian iff isotropic and that dimension equals ``k * (n - k)``.

Weights whose difference is never a root must sit on the same side of ``Q``
for the orbit to be Lagrangian, so the search runs over unions of connected
components of the "non-root difference" graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable

from .repdata import IrrepSpec, WeightSystem, weight_system
from .rootsys import RootSystem, Weight, add, scale, simple_reflection, sub

__all__ = [
    "Component",
    "PlaneCandidate",
    "nonroot_difference_components",
    "find_Q_candidates",
    "orbit_dimension",
    "is_lagrangian",
    "isotropic_weyl_orbit_plane",
    "evaluate_plane",
    "brute_force_candidates",
    "weyl_orbit_of_subset",
    "MEET_IN_MIDDLE_THRESHOLD",
]

MEET_IN_MIDDLE_THRESHOLD = 24


@dataclass(frozen=True)
class Component:
    weights: frozenset
    size: int            # sum of multiplicities
    weight_sum: Weight   # multiplicity-weighted


def _zero(d):
    return (Fraction(0),) * d


def _canon(q: Iterable) -> tuple:
    return tuple(sorted(q, reverse=True))


@dataclass(frozen=True)
class PlaneCandidate:
    spec: IrrepSpec
    Q: frozenset
    k: int
    condition_1_2: bool      # every mu - lam (lam in Q, mu outside) is a root
    condition_1_3: bool      # multiplicity-weighted sum over Q vanishes
    condition_1_4: bool      # every weight space is a line
    orbit_dim: int
    lagrangian: bool
    complemented: bool = field(default=False, compare=False)

    @property
    def n(self) -> int:
        return weight_system(self.spec).dim

    @property
    def isotropic(self) -> bool:
        return self.condition_1_3

    @property
    def target_dim(self) -> int:
        return self.k * (self.n - self.k)

    def sorted_Q(self) -> tuple:
        return _canon(self.Q)

    def complement(self) -> "PlaneCandidate":
        ws = weight_system(self.spec)
        return evaluate_plane(self.spec, frozenset(ws.entries) - self.Q)

    def to_dict(self) -> dict:
        return {
            "algebra": self.spec.rs.label,
            "highest_weight": [list(c) for c in self.spec.fundamental],
            "spec": self.spec.label(),
            "k": self.k,
            "Q": [[str(x) for x in w] for w in self.sorted_Q()],
            "flags": {
                "condition_1_2": self.condition_1_2,
                "condition_1_3": self.condition_1_3,
                "condition_1_4": self.condition_1_4,
            },
            "orbit_dim": self.orbit_dim,
            "lagrangian": self.lagrangian,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# ----------------------------------------------------------------- graph

def nonroot_difference_components(ws: WeightSystem, rs: RootSystem) -> list:
    """Connected components of the graph joining weights whose difference is
    not a root. Components come out in canonical order."""
    weights = ws.weights
    roots = rs.roots
    parent = {w: w for w in weights}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, a in enumerate(weights):
        for b in weights[i + 1:]:
            if sub(b, a) not in roots:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
    groups: dict = {}
    for w in weights:
        groups.setdefault(find(w), []).append(w)
    d = rs.ambient_dim
    comps = []
    for members in groups.values():
        s = _zero(d)
        size = 0
        for w in members:
            m = ws.entries[w]
            size += m
            s = add(s, scale(m, w))
        comps.append(Component(frozenset(members), size, s))
    comps.sort(key=lambda c: _canon(c.weights), reverse=True)
    return comps


# ---------------------------------------------------------- orbit dimension

def orbit_dimension(spec: IrrepSpec, Q: Iterable) -> int:
    """Real dimension of the orbit of the plane spanned by the ``Q`` blocks."""
    ws = weight_system(spec)
    Q = frozenset(tuple(Fraction(x) for x in w) for w in Q)
    if not Q <= ws.entries.keys():
        raise ValueError("Q is not a subset of the weight system")
    entries = ws.entries
    count = 0
    for a in spec.rs.roots:
        for lam in Q:
            mu = add(lam, a)
            if mu in entries and mu not in Q:
                count += 1
                break
    return count


def evaluate_plane(spec: IrrepSpec, Q: Iterable, complemented: bool = False) -> PlaneCandidate:
    ws = weight_system(spec)
    Q = frozenset(tuple(Fraction(x) for x in w) for w in Q)
    if not Q <= ws.entries.keys():
        raise ValueError("Q is not a subset of the weight system")
    entries = ws.entries
    roots = spec.rs.roots
    d = spec.rs.ambient_dim
    k = sum(entries[w] for w in Q)
    s = _zero(d)
    for w in Q:
        s = add(s, scale(entries[w], w))
    rest = [w for w in entries if w not in Q]
    c12 = all(sub(mu, lam) in roots for lam in Q for mu in rest)
    c13 = s == _zero(d)
    proper = 0 < len(Q) < len(entries)
    c14 = not proper or all(m == 1 for m in entries.values())
    odim = orbit_dimension(spec, Q)
    n = ws.dim
    lag = c13 and odim == k * (n - k)
    return PlaneCandidate(spec, Q, k, c12, c13, c14, odim, lag, complemented)


def is_lagrangian(spec: IrrepSpec, Q: Iterable) -> tuple:
    """``(verdict, PlaneCandidate)`` for the plane spanned by ``Q``."""
    cand = evaluate_plane(spec, Q)
    return cand.lagrangian, cand


# ------------------------------------------------------------------ search

def _subsets_direct(comps, k, d):
    """Unions of components with total size ``k`` and zero weight sum."""
    zero = _zero(d)
    out = []
    n = len(comps)
    # suffix sizes bound the recursion
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + comps[i].size

    def rec(i, size, s, chosen):
        if size == k:
            if s == zero:
                out.append(tuple(chosen))
            return
        if i == n or size + suffix[i] < k:
            return
        c = comps[i]
        if size + c.size <= k:
            chosen.append(i)
            rec(i + 1, size + c.size, add(s, c.weight_sum), chosen)
            chosen.pop()
        rec(i + 1, size, s, chosen)

    rec(0, 0, zero, [])
    return out


def _half_table(comps, idx, k, d):
    table: dict = {}
    zero = _zero(d)

    def rec(j, size, s, chosen):
        if j == len(idx):
            table.setdefault((size, s), []).append(tuple(chosen))
            return
        rec(j + 1, size, s, chosen)
        c = comps[idx[j]]
        if size + c.size <= k:
            chosen.append(idx[j])
            rec(j + 1, size + c.size, add(s, c.weight_sum), chosen)
            chosen.pop()

    rec(0, 0, zero, [])
    return table


def _subsets_mitm(comps, k, d):
    n = len(comps)
    left = list(range(n // 2))
    right = list(range(n // 2, n))
    lt = _half_table(comps, left, k, d)
    rt = _half_table(comps, right, k, d)
    out = []
    for (size, s), ls in lt.items():
        rs_ = rt.get((k - size, tuple(-x for x in s)))
        if rs_:
            for a in ls:
                for b in rs_:
                    out.append(a + b)
    return sorted(out)


def find_Q_candidates(spec: IrrepSpec, k: int, components=None) -> list:
    """Zero-sum unions of non-root-difference components of total size ``k``."""
    ws = weight_system(spec)
    if not 1 <= k <= ws.dim // 2:
        raise ValueError(f"k={k} out of range 1..{ws.dim // 2}")
    comps = components if components is not None else nonroot_difference_components(ws, spec.rs)
    d = spec.rs.ambient_dim
    if len(comps) > MEET_IN_MIDDLE_THRESHOLD:
        picks = _subsets_mitm(comps, k, d)
    else:
        picks = _subsets_direct(comps, k, d)
    cands = []
    for pick in picks:
        Q = frozenset().union(*(comps[i].weights for i in pick))
        cands.append(evaluate_plane(spec, Q))
    cands.sort(key=lambda c: c.sorted_Q(), reverse=True)
    return cands


def size_k_unions_exist(comps, k) -> bool:
    """Whether some union of components has total size ``k`` (subset sum)."""
    reach = 1
    for c in comps:
        reach |= reach << c.size
    return bool(reach >> k & 1)


def brute_force_candidates(spec: IrrepSpec, k: int) -> list:
    """Reference search: every subset of weight blocks of total size ``k``
    that satisfies the root-difference and zero-sum conditions."""
    ws = weight_system(spec)
    roots = spec.rs.roots
    weights = ws.weights
    mult = [ws.entries[w] for w in weights]
    # integer coordinates make the zero-sum test cheap
    den = lcm(*(x.denominator for w in weights for x in w))
    ints = [tuple(int(x * den) for x in w) for w in weights]
    n = len(weights)
    diff_is_root = [[sub(weights[j], weights[i]) in roots for j in range(n)] for i in range(n)]
    found = []
    # every block has multiplicity >= 1, so at most k blocks
    for r in range(1, min(k, n) + 1):
        for combo in combinations(range(n), r):
            if sum(mult[i] for i in combo) != k:
                continue
            if any(sum(mult[i] * ints[i][c] for i in combo) for c in range(len(ints[0]))):
                continue
            inside = set(combo)
            if all(diff_is_root[i][j] for i in combo for j in range(n) if j not in inside):
                found.append(frozenset(weights[i] for i in combo))
    return sorted(found, key=_canon, reverse=True)


# ------------------------------------------------------------ Weyl planes

def weyl_orbit_of_subset(rs: RootSystem, Q: frozenset) -> set:
    """Orbit of a set of weights under the Weyl group (as frozensets)."""
    start = frozenset(Q)
    seen = {start}
    work = [start]
    while work:
        x = work.pop()
        for i in range(1, rs.rank + 1):
            y = frozenset(simple_reflection(rs, i, w) for w in x)
            if y not in seen:
                seen.add(y)
                work.append(y)
    return seen


def isotropic_weyl_orbit_plane(spec: IrrepSpec, lam0) -> PlaneCandidate:
    """Plane spanned by the Weyl orbit of ``lam0``.

    The orbit sums to zero, so the plane is isotropic. When the orbit is more
    than half the representation, the complementary plane is returned instead
    (``complemented=True``); the two verdicts agree.
    """
    from .rootsys import weyl_orbit

    ws = weight_system(spec)
    lam0 = tuple(Fraction(x) for x in lam0)
    if lam0 not in ws.entries:
        raise ValueError("starting weight is not a weight of the representation")
    orbit = weyl_orbit(spec.rs, lam0)
    if orbit == ws.entries.keys():
        raise ValueError("the Weyl orbit exhausts the weight system")
    k = sum(ws.entries[w] for w in orbit)
    if k > ws.dim // 2:
        return evaluate_plane(spec, frozenset(ws.entries) - orbit, complemented=True)
    return evaluate_plane(spec, orbit)
