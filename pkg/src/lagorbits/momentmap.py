"""Numeric moment map of a classical group acting on a Grassmannian.

The plane is pushed into the k-th exterior power through its Plücker
coordinates, the Lie algebra acts on wedges by the Leibniz rule, and

    <mu(pi), X> = Im (X.w, w) / (w, w),    w = v_1 ^ ... ^ v_k.

Everything here is binary64 on purpose; it is an oracle independent of the
exact weight combinatorics. Tolerances: 1e-12 for construction checks,
1e-9 for isotropy, 1e-6 for equivariance under matrix exponentials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

import numpy as np
from scipy.linalg import expm

from .repdata import IrrepSpec

__all__ = [
    "Generator",
    "MatrixRealization",
    "KPlane",
    "build_realization",
    "plucker_coordinates",
    "wedge_action",
    "moment_value",
    "moment_vector",
    "isotropy_check",
    "plane_from_weights",
    "random_plane",
    "parse_complex_matrix",
    "parse_weight_list",
    "CONSTRUCTION_TOL",
    "ISOTROPY_TOL",
    "EQUIVARIANCE_TOL",
]

CONSTRUCTION_TOL = 1e-12
ISOTROPY_TOL = 1e-9
EQUIVARIANCE_TOL = 1e-6


@dataclass(frozen=True)
class Generator:
    matrix: np.ndarray
    kind: str                  # "torus" or "root"
    root: Optional[tuple] = None

    def __repr__(self):
        return f"Generator({self.kind}, root={self.root})"


@dataclass(frozen=True)
class MatrixRealization:
    family: str
    size: int
    spec: Optional[IrrepSpec]      # None for so(4), which is not simple
    weights: tuple             # exact Weight attached to each basis vector
    generators: tuple

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def torus(self) -> list:
        return [g for g in self.generators if g.kind == "torus"]

    def weight_array(self) -> np.ndarray:
        return np.array([[float(x) for x in w] for w in self.weights])

    def basis_index(self, weight) -> int:
        w = tuple(Fraction(x) for x in weight)
        for i, v in enumerate(self.weights):
            if v == w:
                return i
        raise KeyError(f"not a weight of {self.family}({self.size}): {weight}")


@dataclass(frozen=True)
class KPlane:
    vectors: np.ndarray        # n x k, columns span the plane

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex)
        if v.ndim != 2:
            raise ValueError("plane basis must be an n x k matrix")
        object.__setattr__(self, "vectors", v)

    @property
    def k(self) -> int:
        return self.vectors.shape[1]

    @property
    def gram(self) -> np.ndarray:
        return self.vectors.conj().T @ self.vectors

    def rank(self, tol=1e-10) -> int:
        return int(np.linalg.matrix_rank(self.vectors, tol=tol))

    def condition_number(self) -> float:
        return float(np.linalg.cond(self.gram))


# ----------------------------------------------------------- realizations

def _compact_basis_su(n):
    mats = []
    for i in range(n):
        for j in range(i + 1, n):
            a = np.zeros((n, n), complex)
            a[i, j], a[j, i] = 1, -1
            mats.append(a)
            b = np.zeros((n, n), complex)
            b[i, j] = b[j, i] = 1j
            mats.append(b)
    for i in range(n - 1):
        h = np.zeros((n, n), complex)
        h[i, i], h[i + 1, i + 1] = 1j, -1j
        mats.append(h)
    return mats


def _compact_basis_sp(m):
    # sp(m) = {[[A, B], [-conj(B), conj(A)]] : A anti-Hermitian, B symmetric}
    n = 2 * m
    mats = []
    for a in _u_basis(m):
        x = np.zeros((n, n), complex)
        x[:m, :m] = a
        x[m:, m:] = a.conj()
        mats.append(x)
    for i in range(m):
        for j in range(i, m):
            for c in (1, 1j):
                b = np.zeros((m, m), complex)
                b[i, j] = b[j, i] = c
                x = np.zeros((n, n), complex)
                x[:m, m:] = b
                x[m:, :m] = -b.conj()
                mats.append(x)
    return mats


def _u_basis(m):
    mats = []
    for i in range(m):
        d = np.zeros((m, m), complex)
        d[i, i] = 1j
        mats.append(d)
    for i in range(m):
        for j in range(i + 1, m):
            a = np.zeros((m, m), complex)
            a[i, j], a[j, i] = 1, -1
            mats.append(a)
            b = np.zeros((m, m), complex)
            b[i, j] = b[j, i] = 1j
            mats.append(b)
    return mats


def _so_change_of_basis(n):
    """Unitary P whose columns are u_j, conj(u_j) (and e_n for odd n)."""
    l = n // 2
    p = np.zeros((n, n), complex)
    s = 1 / np.sqrt(2)
    for j in range(l):
        p[2 * j, j] = s
        p[2 * j + 1, j] = -1j * s
        p[2 * j, l + j] = s
        p[2 * j + 1, l + j] = 1j * s
    if n % 2:
        p[n - 1, n - 1] = 1
    return p


def _compact_basis_so(n):
    p = _so_change_of_basis(n)
    mats = []
    for a in range(n):
        for b in range(a + 1, n):
            x = np.zeros((n, n), complex)
            x[a, b], x[b, a] = -1, 1
            mats.append(p.conj().T @ x @ p)
    return mats


def _weights_for(family, size):
    F = Fraction
    if family == "su":
        spec = IrrepSpec.of(f"A{size - 1}", (1,) + (0,) * (size - 2))
        ws = []
        for i in range(size):
            ws.append(tuple(F(int(i == j)) - F(1, size) for j in range(size)))
        return spec, ws
    if family == "sp":
        spec = IrrepSpec.of(f"C{size}", (1,) + (0,) * (size - 1)) if size >= 2 else IrrepSpec.of("A1", (1,))
        ws = [tuple(F(int(i == j)) for j in range(size)) for i in range(size)]
        ws += [tuple(-x for x in w) for w in ws]
        if size == 1:
            # A1 coordinates: the standard rep has weights +-(e1 - e2)/2
            ws = [(F(1, 2), F(-1, 2)), (F(-1, 2), F(1, 2))]
        return spec, ws
    l = size // 2
    if size % 2:
        spec = IrrepSpec.of(f"B{l}", (1,) + (0,) * (l - 1)) if l >= 2 else IrrepSpec.of("A1", (2,))
    else:
        spec = IrrepSpec.of(f"D{l}", (1,) + (0,) * (l - 1)) if l >= 3 else None
    ws = [tuple(F(int(i == j)) for j in range(l)) for i in range(l)]
    ws += [tuple(-x for x in w) for w in ws]
    if size % 2:
        ws.append(tuple(F(0) for _ in range(l)))
    if size == 3:
        # so(3) = su(2) adjoint in A1 coordinates
        ws = [(F(1), F(-1)), (F(-1), F(1)), (F(0), F(0))]
    return spec, ws


def _labelled_generators(mats, weights, rank):
    """Torus generators ``i diag(weight coordinate)`` plus, for every positive
    root, the two compact generators built from its root vector."""
    n = len(weights)
    warr = np.array([[float(x) for x in w] for w in weights])
    gens = [Generator(np.diag(1j * warr[:, c]).astype(complex), "torus") for c in range(rank)]
    pairs: dict = {}
    for i in range(n):
        for j in range(n):
            if i != j:
                key = tuple(a - b for a, b in zip(weights[i], weights[j]))
                pairs.setdefault(key, []).append((i, j))
    zero = tuple(Fraction(0) for _ in weights[0])
    for alpha in sorted(pairs, reverse=True):
        if alpha <= zero:
            continue
        e = None
        for m in mats:
            comp = np.zeros((n, n), complex)
            for i, j in pairs[alpha]:
                comp[i, j] = m[i, j]
            if np.abs(comp).max() > 1e-9:
                e = comp
                break
        if e is None:
            continue
        x = e - e.conj().T
        y = 1j * (e + e.conj().T)
        gens.append(Generator(x / np.linalg.norm(x), "root", alpha))
        gens.append(Generator(y / np.linalg.norm(y), "root", alpha))
    return gens


def build_realization(family: str, size: int) -> MatrixRealization:
    """Defining representation of su(n), so(n) or sp(m) in a weight basis."""
    if family == "su" and size >= 2:
        mats = _compact_basis_su(size)
    elif family == "so" and size >= 3:
        mats = _compact_basis_so(size)
    elif family == "sp" and size >= 1:
        mats = _compact_basis_sp(size)
    else:
        raise ValueError(f"unsupported realization: {family}({size})")
    spec, weights = _weights_for(family, size)
    rank = {"su": size - 1, "so": max(size // 2, 1), "sp": size}[family]
    gens = _labelled_generators(mats, weights, rank)
    expected = len(mats)
    if len(gens) != expected:
        raise AssertionError(f"{family}({size}): {len(gens)} labelled generators, expected {expected}")
    return MatrixRealization(family, size, spec, tuple(weights), tuple(gens))


# ---------------------------------------------------------- wedge algebra

def _subsets(n, k):
    return list(combinations(range(n), k))


def plucker_coordinates(plane: KPlane) -> np.ndarray:
    """k x k minors of the basis matrix, indexed by lexicographic k-subsets."""
    v = plane.vectors
    n, k = v.shape
    return np.array([np.linalg.det(v[list(idx), :]) for idx in _subsets(n, k)])


def wedge_action(x: np.ndarray, coords: np.ndarray, n: int, k: int) -> np.ndarray:
    """Leibniz action of ``x`` on a vector of wedge coordinates."""
    subs = _subsets(n, k)
    index = {s: i for i, s in enumerate(subs)}
    out = np.zeros(len(subs), complex)
    cols = [np.nonzero(np.abs(x[:, a]) > 0)[0] for a in range(n)]
    for j, s in enumerate(subs):
        c = coords[j]
        if c == 0:
            continue
        members = set(s)
        for pos, a in enumerate(s):
            for b in cols[a]:
                if b != a and b in members:
                    continue
                if b == a:
                    out[j] += x[a, a] * c
                    continue
                rest = list(s[:pos]) + list(s[pos + 1:])
                # e_b placed at slot pos, then sorted: sign = parity of the moves
                new = sorted(rest + [b])
                sign = (-1) ** (sum(1 for r in rest[:pos] if r > b) + sum(1 for r in rest[pos:] if r < b))
                out[index[tuple(new)]] += sign * x[b, a] * c
    return out


def _check_plane(plane: KPlane):
    if plane.rank() < plane.k:
        raise ValueError("degenerate plane: basis vectors are linearly dependent")


def moment_value(real: MatrixRealization, plane: KPlane, x) -> float:
    """Moment-map coordinate of ``plane`` along the generator ``x``."""
    _check_plane(plane)
    mat = x.matrix if isinstance(x, Generator) else np.asarray(x)
    n, k = plane.vectors.shape
    if n != real.n:
        raise ValueError(f"plane lives in C^{n}, realization in C^{real.n}")
    w = plucker_coordinates(plane)
    xw = wedge_action(mat, w, n, k)
    pairing = np.vdot(w, xw)      # (Xw, w) with the Hermitian product linear in the first slot
    return float((pairing / np.vdot(w, w).real).imag)


def moment_vector(real: MatrixRealization, plane: KPlane) -> np.ndarray:
    return np.array([moment_value(real, plane, g) for g in real.generators])


def isotropy_check(real: MatrixRealization, plane: KPlane, tol: float = ISOTROPY_TOL) -> dict:
    vals = moment_vector(real, plane)
    m = float(np.max(np.abs(vals))) if len(vals) else 0.0
    return {"max_abs_moment": m, "isotropic": m < tol}


# ----------------------------------------------------------------- planes

def plane_from_weights(real: MatrixRealization, weights: Sequence) -> KPlane:
    idx = [real.basis_index(w) for w in weights]
    if len(set(idx)) != len(idx):
        raise ValueError("repeated weight in plane specification")
    v = np.zeros((real.n, len(idx)), complex)
    for c, i in enumerate(idx):
        v[i, c] = 1
    return KPlane(v)


def random_plane(real: MatrixRealization, k: int, rng: np.random.Generator) -> KPlane:
    v = rng.standard_normal((real.n, k)) + 1j * rng.standard_normal((real.n, k))
    return KPlane(v)


def act(g: np.ndarray, plane: KPlane) -> KPlane:
    return KPlane(g @ plane.vectors)


def group_element(x: np.ndarray, t: float) -> np.ndarray:
    return expm(t * x)


# ----------------------------------------------------------------- parsing

def _parse_complex(tok: str) -> complex:
    t = tok.strip().replace(" ", "").replace("i", "j")
    if not t:
        raise ValueError("empty matrix entry")
    if t.endswith("j") and t[:-1] in ("", "+", "-"):
        t = t[:-1] + "1j"
    t = re.sub(r"([+-])j$", r"\g<1>1j", t)
    return complex(t)


def parse_complex_matrix(text: str) -> np.ndarray:
    """Rows of comma-separated ``a+bi`` entries, one row per line (or ``;``)."""
    rows = [r for r in re.split(r"[;\n]", text) if r.strip()]
    out = []
    for lineno, row in enumerate(rows, 1):
        try:
            out.append([_parse_complex(tok) for tok in row.split(",")])
        except ValueError as exc:
            raise ValueError(f"row {lineno}: {exc}") from None
    widths = {len(r) for r in out}
    if len(widths) != 1:
        raise ValueError(f"ragged matrix: row lengths {sorted(widths)}")
    return np.array(out, complex)


def parse_weight_list(real: MatrixRealization, text: str) -> list:
    """``"e1,-e1"`` style weights for a realization.

    ``eI``/``-eI`` name the weight of the I-th basis vector of the torus
    coordinates (for su(n), ``eI`` is the weight of the I-th standard vector);
    ``0`` is the zero weight.
    """
    out = []
    for pos, tok in enumerate(text.split(","), 1):
        tok = tok.strip()
        m = re.fullmatch(r"([+-]?)e(\d+)", tok)
        if tok == "0":
            out.append(real.weights[real.basis_index(tuple(Fraction(0) for _ in real.weights[0]))])
            continue
        if not m:
            raise ValueError(f"weight {pos}: cannot parse {tok!r}")
        sign = -1 if m.group(1) == "-" else 1
        i = int(m.group(2)) - 1
        if real.family == "su":
            if sign < 0 or not 0 <= i < real.n:
                raise ValueError(f"weight {pos}: {tok!r} is not a weight of su({real.size})")
            out.append(real.weights[i])
            continue
        d = len(real.weights[0])
        if real.family == "so" and real.size == 3 or real.family == "sp" and real.size == 1:
            # rank-one realizations carry A1 coordinates
            base = real.weights[0]
            out.append(base if sign > 0 else tuple(-x for x in base))
            continue
        if not 0 <= i < d:
            raise ValueError(f"weight {pos}: index out of range in {tok!r}")
        out.append(tuple(Fraction(sign * int(j == i)) for j in range(d)))
    return out
