"""Exact-side helpers for comparing the numeric moment map with the weight criterion."""

from fractions import Fraction
from itertools import combinations

import numpy as np

from lagorbits.momentmap import build_realization, plane_from_weights

REALIZATIONS = ([("su", n) for n in range(2, 6)] + [("so", n) for n in range(3, 9)]
                + [("sp", m) for m in range(1, 4)])


def realization_roots(real):
    roots = set()
    for g in real.generators:
        if g.kind == "root":
            roots.add(g.root)
            roots.add(tuple(-x for x in g.root))
    return roots


def realization_components(real):
    """Components of the non-root-difference graph on the realization's weights."""
    roots = realization_roots(real)
    ws = list(real.weights)
    parent = list(range(len(ws)))

    def find(i):
        while parent[i] != i:
            i = parent[i]
        return i

    for i, j in combinations(range(len(ws)), 2):
        if tuple(a - b for a, b in zip(ws[i], ws[j])) not in roots:
            parent[find(i)] = find(j)
    groups = {}
    for i, w in enumerate(ws):
        groups.setdefault(find(i), []).append(w)
    return sorted(groups.values())


def component_unions(real, k_max=3):
    """Every union of components with at most ``k_max`` weights (all multiplicities are 1)."""
    comps = realization_components(real)
    out = []
    for r in range(1, len(comps) + 1):
        for pick in combinations(comps, r):
            q = [w for c in pick for w in c]
            if len(q) <= k_max and len(q) < len(real.weights):
                out.append(q)
    return out


def zero_sum(q):
    return all(sum(col, Fraction(0)) == 0 for col in zip(*q))


def trace_formula_moment(real, plane, x):
    """Im tr((V^H V)^{-1} V^H X V): the moment map without Plücker coordinates."""
    v = plane.vectors
    g = v.conj().T @ v
    return float(np.trace(np.linalg.solve(g, v.conj().T @ x @ v)).imag)


def cofactor_det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total
