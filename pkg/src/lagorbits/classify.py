"""Candidate enumeration, classification sweeps and case-analysis numbers.

Bounds: a Lagrangian orbit through a torus-invariant k-plane has real
dimension ``k (n - k)`` and at most ``dim G - rank G``. For ``k >= 2`` and
``k >= 3`` this gives the floors

    n <= (dim G - rank G + 4) / 2        (k_floor = 2)
    n <= (dim G - rank G + 9) / 3        (k_floor = 3)

and for ``k = 1`` simply ``n <= dim G - rank G + 1``.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional

from .lagcrit import (
    PlaneCandidate,
    _canon,
    evaluate_plane,
    find_Q_candidates,
    nonroot_difference_components,
    orbit_dimension,
)
from .repdata import IrrepSpec, dual_highest_weight, frobenius_schur_type, weight_system, weyl_dimension
from .rootsys import RootSystem, add, build_root_system, scale

__all__ = [
    "ClassificationRecord",
    "FAMILIES",
    "simple_algebras",
    "bound_value",
    "irreps_up_to_dim",
    "canonical_spec",
    "enumerate_candidates",
    "run_classification",
    "scan_products",
    "classify_spec",
    "count_positive_roots_with_coefficient",
    "annotation",
    "table1_row",
    "case_analyses",
    "REASONS",
]

REASONS = ("no-zero-sum", "condition-1-2-fails", "dimension-mismatch", "multiplicity", "bound-excluded")

# (table name, type, minimal rank) in the order the tables list them
FAMILIES = [
    ("a_n", "A", 2),
    ("b_n", "B", 2),
    ("c_n", "C", 3),
    ("d_n", "D", 4),
    ("e_6", "E", 6),
    ("e_7", "E", 7),
    ("e_8", "E", 8),
    ("f_4", "F", 4),
    ("g_2", "G", 2),
]

_TYPE_ORDER = {t: i for i, t in enumerate("ABCDEFG")}


def simple_algebras(rank_cap: int, min_ranks: Optional[dict] = None) -> list:
    """Root systems of the classified families with rank <= ``rank_cap``."""
    out = []
    for name, t, r0 in FAMILIES:
        if t in "ABCD":
            lo = (min_ranks or {}).get(t, r0)
            out += [build_root_system(f"{t}{r}") for r in range(lo, rank_cap + 1)]
        elif r0 <= rank_cap:
            out.append(build_root_system(f"{t}{r0}"))
    return out


def bound_value(rs: RootSystem, k_floor: int) -> Fraction:
    """Largest admissible ``dim V`` for the given floor on ``k``."""
    free = rs.dim - rs.rank
    if k_floor == 1:
        return Fraction(free + 1)
    if k_floor == 2:
        return Fraction(free + 4, 2)
    if k_floor == 3:
        return Fraction(free + 9, 3)
    raise ValueError(f"k_floor must be 1, 2 or 3, got {k_floor}")


def irreps_up_to_dim(rs: RootSystem, max_dim) -> list:
    """Nontrivial irreps of a simple algebra with dimension <= ``max_dim``."""
    r = rs.rank
    found = {}
    work = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    while work:
        c = work.pop()
        if c in found:
            continue
        d = weyl_dimension(IrrepSpec(rs, (c,)))
        if d > max_dim:
            continue
        found[c] = d
        for i in range(r):
            work.append(tuple(x + (i == j) for j, x in enumerate(c)))
    return [IrrepSpec(rs, (c,)) for c in sorted(found, key=lambda c: (found[c], tuple(-x for x in c)))]


def _fork_swap(spec: IrrepSpec) -> IrrepSpec:
    c = spec.fundamental[0]
    return IrrepSpec(spec.rs, (c[:-2] + (c[-1], c[-2]),))


def canonical_spec(spec: IrrepSpec) -> IrrepSpec:
    """Representative modulo duality (and the D_n fork swap): the
    lexicographically largest fundamental-coordinate tuple."""
    if not spec.is_simple:
        variants = [spec, dual_highest_weight(spec)]
    else:
        variants = [spec, dual_highest_weight(spec)]
        f = spec.rs.factors[0]
        if f.type == "D" and f.rank >= 4:
            variants += [_fork_swap(v) for v in variants]
    return max(variants, key=lambda s: s.fundamental)


def enumerate_candidates(k_floor: int, rank_cap: int = 8) -> list:
    """Simple-algebra irreps up to duality with ``dim V`` within the floor bound."""
    if k_floor not in (2, 3):
        raise ValueError("k_floor must be 2 or 3")
    if rank_cap < 2:
        raise ValueError("rank_cap must be >= 2")
    out = []
    for rs in simple_algebras(rank_cap):
        b = bound_value(rs, k_floor)
        seen = set()
        for s in irreps_up_to_dim(rs, b):
            c = canonical_spec(s)
            if c not in seen:
                seen.add(c)
                out.append(c)
    return out


def count_positive_roots_with_coefficient(rs: RootSystem, simple_index: int) -> int:
    """Positive roots with a nonzero coefficient at simple root ``simple_index`` (1-based)."""
    if not 1 <= simple_index <= rs.rank:
        raise IndexError(f"simple index {simple_index} out of range 1..{rs.rank}")
    return sum(1 for a in rs.positive_roots
               if rs.simple_root_coefficients(a)[simple_index - 1] != 0)


# ----------------------------------------------------------- annotations

def _is(spec, label, coords):
    return spec.is_simple and spec.rs.label == label and spec.fundamental[0] == coords


def annotation(spec: IrrepSpec) -> Optional[str]:
    if _is(spec, "B2", (0, 1)) or _is(spec, "C2", (1, 0)):
        return "so(5) = sp(2): spin of B2 is the standard rep of sp(2)"
    if _is(spec, "C2", (0, 1)):
        return "sp(2) = so(5): C2 lambda_2 is the standard rep of so(5)"
    if _is(spec, "A3", (0, 1, 0)):
        return "su(4) = so(6): A3 lambda_2 is the standard rep of so(6)"
    if _is(spec, "D3", (1, 0, 0)):
        return "so(6) = su(4): D3 lambda_1 is A3 lambda_2"
    if _is(spec, "B3", (0, 0, 1)):
        return "Spin(7) in SO(8) via the spin representation"
    if _is(spec, "D4", (0, 0, 1, 0)) or _is(spec, "D4", (0, 0, 0, 1)):
        return "triality: half-spin of so(8) is equivalent to the standard rep"
    if _is(spec, "G2", (1, 0)):
        return "G2 in SO(7)"
    if _is(spec, "A1", (2,)):
        return "su(2) = so(3): adjoint is the standard rep of so(3)"
    if not spec.is_simple and [f.label for f in spec.rs.factors] == ["A1", "A1"] \
            and spec.fundamental == ((1,), (1,)):
        return "su(2) x su(2) = so(4) on C^2 x C^2 = C^4"
    return None


def table1_row(spec: IrrepSpec, k: int) -> Optional[tuple]:
    """(G, L, Grassmannian) for a positive verdict, or ``None`` if the pair is
    not one of the classified families.

    ``G_2`` at ``k = 1`` is reported under the ``SO(n)`` row (``RP^6``)."""
    n = weyl_dimension(spec)
    if spec.is_simple:
        t = spec.rs.factors[0].type
        r = spec.rs.rank
        c = spec.fundamental[0]
        std = c == (1,) + (0,) * (r - 1)
        so_n = None
        if std and t in "BD":
            so_n = n
        elif _is(spec, "A3", (0, 1, 0)) or _is(spec, "D4", (0, 0, 1, 0)) or _is(spec, "D4", (0, 0, 0, 1)):
            so_n = n
        elif _is(spec, "A1", (2,)):
            so_n = 3
        elif _is(spec, "G2", (1, 0)) and k == 1:
            so_n = 7
        if so_n is not None:
            if k * (so_n - k) % 2:
                return None
            return (f"SO({so_n})", f"Gr_{k}(R^{so_n})", f"Gr_{k}(C^{so_n})")
        if (std and t == "C") or _is(spec, "B2", (0, 1)):
            m = n // 2
            if k % 2:
                return None
            return (f"Sp({m})", f"Gr_{k // 2}(H^{m})", f"Gr_{k}(C^{n})")
        if _is(spec, "B3", (0, 0, 1)) and k == 2:
            return ("Spin(7)", "Gr_2(R^8)", "Gr_2(C^8)")
        if _is(spec, "G2", (1, 0)) and k == 2:
            return ("G2", "Gr_2(R^7)", "Gr_2(C^7)")
        return None
    if annotation(spec) and k == 2:
        return ("SO(4)", "Gr_2(R^4)", "Gr_2(C^4)")
    return None


# ------------------------------------------------------------- records

@dataclass
class ClassificationRecord:
    spec: IrrepSpec
    n: int
    k: int
    bound_used: int              # the k_floor whose bound applies (1, 2 or 3)
    bound_value: Fraction        # that floor's bound on dim V
    dim_free: int                # dim G - rank G
    target_dim: int              # k (n - k), the dimension a Lagrangian orbit needs
    lagrangian: bool
    reason: Optional[str] = None
    witness: Optional[PlaneCandidate] = None
    candidates: int = 0          # zero-sum unions of components found
    fs_type: str = ""
    note: Optional[str] = None
    table1: Optional[tuple] = field(default=None)

    @property
    def verdict(self) -> str:
        return "lagrangian" if self.lagrangian else "ruled-out"

    def sort_key(self):
        fam = tuple((_TYPE_ORDER[f.type], f.rank) for f in self.spec.rs.factors)
        return (len(self.spec.rs.factors), fam, self.n, tuple(-c for c in self.spec.flat_fundamental), self.k)

    def to_dict(self) -> dict:
        d = {
            "spec": self.spec.label(),
            "algebra": self.spec.rs.label,
            "highest_weight": [list(c) for c in self.spec.fundamental],
            "n": self.n,
            "k": self.k,
            "bound_used": self.bound_used,
            "bound_value": str(self.bound_value),
            "dim_free": self.dim_free,
            "target_dim": self.target_dim,
            "verdict": self.verdict,
            "reason": self.reason,
            "candidates": self.candidates,
            "fs_type": self.fs_type,
            "note": self.note,
            "table1": list(self.table1) if self.table1 else None,
            "witness": self.witness.to_dict() if self.witness else None,
        }
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


_SEARCH_BUDGET = 2_000_000


def _zero_sum_witness(spec: IrrepSpec, k: int):
    """First zero-sum set of weight blocks of total size ``k`` (highest weights
    tried first), ``None`` if there is none, or ``False`` if the budget ran out."""
    ws = weight_system(spec)
    weights = ws.weights
    mult = [ws.entries[w] for w in weights]
    d = spec.rs.ambient_dim
    zero = (Fraction(0),) * d
    suffix = [0] * (len(weights) + 1)
    for i in range(len(weights) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + mult[i]
    budget = [_SEARCH_BUDGET]

    class _Out(Exception):
        pass

    def rec(i, size, s, chosen):
        budget[0] -= 1
        if budget[0] < 0:
            raise _Out
        if size == k:
            return list(chosen) if s == zero else None
        if i == len(weights) or size + suffix[i] < k:
            return None
        if size + mult[i] <= k:
            chosen.append(weights[i])
            got = rec(i + 1, size + mult[i], add(s, scale(mult[i], weights[i])), chosen)
            chosen.pop()
            if got is not None:
                return got
        return rec(i + 1, size, s, chosen)

    try:
        got = rec(0, 0, zero, [])
    except _Out:
        return False
    return None if got is None else frozenset(got)


def classify_spec(spec: IrrepSpec, ks, bound_used=None) -> list:
    """One record per ``k`` in ``ks`` for the given representation."""
    rs = spec.rs
    n = weyl_dimension(spec)
    free = rs.dim - rs.rank
    fs = frobenius_schur_type(spec)
    note = annotation(spec)
    comps = None
    out = []
    for k in ks:
        floor = bound_used if bound_used is not None else min(k, 3)
        rec = ClassificationRecord(
            spec=spec, n=n, k=k, bound_used=floor,
            bound_value=bound_value(rs, floor), dim_free=free,
            target_dim=k * (n - k), lagrangian=False, fs_type=fs, note=note,
        )
        out.append(rec)
        if k * (n - k) > free:
            rec.reason = "bound-excluded"
            continue
        if comps is None:
            comps = nonroot_difference_components(weight_system(spec), rs)
        cands = find_Q_candidates(spec, k, components=comps)
        rec.candidates = len(cands)
        lag = [c for c in cands if c.lagrangian]
        if lag:
            rec.lagrangian = True
            rec.witness = lag[0]
            rec.table1 = table1_row(spec, k)
            continue
        if cands:
            rec.witness = cands[0]
            rec.reason = "multiplicity" if not any(c.condition_1_4 for c in cands) else "dimension-mismatch"
            continue
        w = _zero_sum_witness(spec, k)
        if w is False:
            rec.reason = "condition-1-2-fails"
        elif w is None:
            rec.reason = "no-zero-sum"
        else:
            cand = evaluate_plane(spec, w)
            rec.witness = cand
            if cand.lagrangian:
                # cannot happen for a plane that violates the root-difference condition
                rec.lagrangian = True
                rec.table1 = table1_row(spec, k)
            else:
                rec.reason = "dimension-mismatch"
    return out


def _classify_job(args):
    label, ks = args
    return classify_spec(IrrepSpec.parse(label), ks)


def _run_jobs(jobs_list, jobs):
    if jobs and jobs > 1 and len(jobs_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_classify_job, jobs_list, chunksize=4))
    else:
        parts = [_classify_job(j) for j in jobs_list]
    records = [r for p in parts for r in p]
    records.sort(key=ClassificationRecord.sort_key)
    return records


def run_classification(rank_cap: int = 8, k_cap: int = 8, dim_cap: int = 64, jobs: int = 1) -> list:
    """Records for every simple-algebra irrep (up to duality) that passes the
    ``k = 1`` bound with ``dim V <= dim_cap``, at every ``k <= min(k_cap, n/2)``."""
    work = []
    for rs in simple_algebras(rank_cap):
        cap = min(dim_cap, bound_value(rs, 1))
        seen = set()
        for s in irreps_up_to_dim(rs, cap):
            c = canonical_spec(s)
            if c in seen:
                continue
            seen.add(c)
            n = weyl_dimension(c)
            ks = tuple(range(1, min(k_cap, n // 2) + 1))
            if ks:
                work.append((c.label(), ks))
    return _run_jobs(work, jobs)


_PRODUCT_FACTORS = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"]


def scan_products(factor_cap: int = 3, dim_cap: int = 64, rank_cap: int = 3, jobs: int = 1) -> list:
    """Records for tensor products of 2..``factor_cap`` nontrivial irreps of
    simple algebras of rank <= ``rank_cap``, total dimension <= ``dim_cap``."""
    factors = []
    for lab in _PRODUCT_FACTORS:
        rs = build_root_system(lab)
        if rs.rank <= rank_cap:
            factors += [(s, weyl_dimension(s)) for s in irreps_up_to_dim(rs, dim_cap // 2)]
    factors.sort(key=lambda p: (p[1], p[0].label()))
    work = []
    seen = set()
    for s in range(2, factor_cap + 1):
        for combo in combinations_with_replacement(range(len(factors)), s):
            dim = 1
            for i in combo:
                dim *= factors[i][1]
            if dim > dim_cap:
                continue
            labels = [factors[i][0].rs.label for i in combo]
            coords = [factors[i][0].fundamental[0] for i in combo]
            spec = IrrepSpec(build_root_system(labels), tuple(coords))
            dual = dual_highest_weight(spec)
            key = tuple(sorted(zip(labels, coords)))
            dkey = tuple(sorted(zip(labels, dual.fundamental)))
            if dkey in seen:
                continue
            seen.add(key)
            work.append((spec.label(), tuple(range(1, dim // 2 + 1))))
    return _run_jobs(work, jobs)


# ------------------------------------------------------ case analyses

def case_analyses() -> dict:
    """The numbers behind the individual case arguments, recomputed."""
    out = {}
    for l in (3, 4, 5):
        spec = IrrepSpec.of(f"C{l}", tuple(int(i == 1) for i in range(l)))
        zero = (Fraction(0),) * spec.rs.ambient_dim
        out[f"C{l}_lambda2_zero_multiplicity"] = weight_system(spec).multiplicity(zero)
    f4 = IrrepSpec.of("F4", (0, 0, 0, 1))
    out["F4_lambda4_zero_multiplicity"] = weight_system(f4).multiplicity((Fraction(0),) * 4)
    out["E6_positive_roots_alpha1"] = count_positive_roots_with_coefficient(build_root_system("E6"), 1)
    d6 = IrrepSpec.of("D6", (0, 0, 0, 0, 1, 0))
    lam = d6.highest_weight
    out["D6_halfspin_orbit_dim"] = orbit_dimension(d6, [lam, tuple(-x for x in lam)])
    d5 = IrrepSpec.of("D5", (0, 0, 0, 0, 1))
    n5 = weyl_dimension(d5)
    out["D5_halfspin_k3_target_dim"] = 3 * (n5 - 3)
    out["D5_halfspin_k3_zero_sum_planes"] = 0 if _zero_sum_witness(d5, 3) is None else 1
    out["D5_halfspin_k3_candidates"] = len(find_Q_candidates(d5, 3))
    return out


def default_jobs() -> int:
    return os.cpu_count() or 1
