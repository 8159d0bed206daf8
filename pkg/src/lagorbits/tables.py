"""Family-level candidate tables and their golden files.

The concrete candidates of :func:`enumerate_candidates` are folded back into
one row per family (``a_n``, ``b_n``, ...). A highest weight that only occurs
for some ranks carries an explicit rank list, e.g. ``λ_n (n=2,3,4)``, and its
dimensions are then listed rank by rank.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .classify import FAMILIES, bound_value, canonical_spec, enumerate_candidates
from .repdata import IrrepSpec, weyl_dimension
from .rootsys import build_root_system

__all__ = [
    "FamilyRow",
    "family_rows",
    "render_table",
    "golden_path",
    "compare_with_golden",
    "BOUND_FORMULAS",
]

GOLDEN_DIR = Path(__file__).parent / "tables"
DEFAULT_RANK_CAP = 8

# closed forms of the bound column, checked rank by rank against bound_value
BOUND_FORMULAS: dict = {
    2: {
        "A": ("(n^2+n+4)/2", lambda n: Fraction(n * n + n + 4, 2)),
        "B": ("n^2+2", lambda n: Fraction(n * n + 2)),
        "C": ("n^2+2", lambda n: Fraction(n * n + 2)),
        "D": ("n^2-n+2", lambda n: Fraction(n * n - n + 2)),
    },
    3: {
        "A": ("(n^2+n+9)/3", lambda n: Fraction(n * n + n + 9, 3)),
        "B": ("(2n^2+9)/3", lambda n: Fraction(2 * n * n + 9, 3)),
        "C": ("(2n^2+9)/3", lambda n: Fraction(2 * n * n + 9, 3)),
        "D": ("(2n^2-2n+9)/3", lambda n: Fraction(2 * n * n - 2 * n + 9, 3)),
    },
}

DIM_FORMULAS: dict = {
    ("A", "λ_1"): ("n+1", lambda n: n + 1),
    ("A", "λ_2"): ("n(n+1)/2", lambda n: n * (n + 1) // 2),
    ("B", "λ_1"): ("2n+1", lambda n: 2 * n + 1),
    ("C", "λ_1"): ("2n", lambda n: 2 * n),
    ("D", "λ_1"): ("2n", lambda n: 2 * n),
}


def _generic_label(t: str, rank: int, coords: tuple) -> str:
    terms = []
    for i, c in enumerate(coords, 1):
        if not c:
            continue
        if t == "B" and i == rank:
            name = "λ_n"
        elif t == "D" and i == rank:
            name = "λ_n"
        elif t == "D" and i == rank - 1:
            name = "λ_{n-1}"
        else:
            name = f"λ_{i}"
        terms.append(name if c == 1 else f"{c}{name}")
    return "+".join(terms)


def _label_order(label: str):
    if label.startswith("λ_{n-1}"):
        return (1, 0, label)
    if label.startswith("λ_n"):
        return (1, 1, label)
    digits = "".join(ch for ch in label.split("λ_")[-1] if ch.isdigit())
    return (0, int(digits or 0), label)


def _coords_for(t: str, rank: int, label: str) -> Optional[tuple]:
    """Inverse of :func:`_generic_label` for single fundamental weights."""
    if label == "λ_n":
        i = rank
    elif label == "λ_{n-1}":
        i = rank - 1
    elif label.startswith("λ_") and label[2:].isdigit():
        i = int(label[2:])
        if t in "BD" and i >= rank - (t == "D"):
            return None   # that index is spelled λ_n / λ_{n-1} in this family
    else:
        return None
    if not 1 <= i <= rank:
        return None
    return tuple(int(j == i) for j in range(1, rank + 1))


@dataclass(frozen=True)
class FamilyRow:
    name: str
    weights: tuple            # (label, ranks or None when present at every rank)
    bound: str
    dims: str

    def weight_text(self) -> str:
        if not self.weights:
            return "-"
        parts = []
        for label, ranks in self.weights:
            parts.append(label if ranks is None else f"{label} (n={','.join(map(str, ranks))})")
        return ", ".join(parts)


def _fmt_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def family_rows(k_floor: int, rank_cap: int = DEFAULT_RANK_CAP) -> list:
    cands = enumerate_candidates(k_floor, rank_cap)
    by_system: dict = {}
    for c in cands:
        by_system.setdefault(c.rs.label, set()).add(c)
    rows = []
    for name, t, r0 in FAMILIES:
        if t in "ABCD":
            ranks = list(range(r0, rank_cap + 1))
        else:
            if r0 > rank_cap:
                continue
            ranks = [r0]
        systems = {r: build_root_system(f"{t}{r}") for r in ranks}
        present_specs = {r: by_system.get(systems[r].label, set()) for r in ranks}
        if t in "ABCD":
            text, fn = BOUND_FORMULAS[k_floor][t]
            for r in ranks:
                if fn(r) != bound_value(systems[r], k_floor):
                    raise AssertionError(f"bound formula {text} disagrees at {t}{r}")
            bound = text
            labels = sorted({_generic_label(t, r, s.fundamental[0]) for r in ranks for s in present_specs[r]},
                            key=_label_order)
            weights, dims = [], []
            for label in labels:
                have, defined = [], []
                for r in ranks:
                    coords = _coords_for(t, r, label)
                    if coords is None:
                        continue
                    defined.append(r)
                    if canonical_spec(IrrepSpec(systems[r], (coords,))) in present_specs[r]:
                        have.append(r)
                if have == defined and (t, label) in DIM_FORMULAS:
                    ftext, ffn = DIM_FORMULAS[(t, label)]
                    for r in have:
                        spec = IrrepSpec(systems[r], (_coords_for(t, r, label),))
                        if weyl_dimension(spec) != ffn(r):
                            raise AssertionError(f"dimension formula {ftext} disagrees at {t}{r}")
                    weights.append((label, None))
                    dims.append(ftext)
                else:
                    weights.append((label, tuple(have)))
                    dims += [str(weyl_dimension(IrrepSpec(systems[r], (_coords_for(t, r, label),))))
                             for r in have]
            rows.append(FamilyRow(name, tuple(weights), bound, ", ".join(dims) or "-"))
        else:
            r = ranks[0]
            specs = sorted(present_specs[r], key=lambda s: _label_order(_generic_label("E", r, s.fundamental[0])))
            weights = tuple((_generic_label("E", r, s.fundamental[0]), None) for s in specs)
            dims = ", ".join(str(weyl_dimension(s)) for s in specs) or "-"
            rows.append(FamilyRow(name, weights, _fmt_fraction(bound_value(systems[r], k_floor)), dims))
    return rows


_TITLES = {
    2: "k >= 2: n <= (dim G - rank G + 4)/2",
    3: "k >= 3: n <= (dim G - rank G + 9)/3",
}


def render_table(k_floor: int, rank_cap: int = DEFAULT_RANK_CAP) -> str:
    rows = family_rows(k_floor, rank_cap)
    header = ("g", "highest weight", "bound", "dim V")
    body = [(r.name, r.weight_text(), r.bound, r.dims) for r in rows]
    widths = [max(len(x[i]) for x in [header] + body) for i in range(4)]

    def line(cells):
        return " | ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    sep = "-+-".join("-" * w for w in widths)
    out = [f"Table {k_floor}  ({_TITLES[k_floor]}, ranks <= {rank_cap})", line(header), sep]
    out += [line(b) for b in body]
    return "\n".join(out) + "\n"


def golden_path(k_floor: int) -> Path:
    return GOLDEN_DIR / f"table{k_floor}.txt"


def compare_with_golden(k_floor: int, rank_cap: int = DEFAULT_RANK_CAP, path: Optional[Path] = None):
    """``(matches, rendered, diff)``."""
    rendered = render_table(k_floor, rank_cap)
    path = Path(path) if path else golden_path(k_floor)
    expected = path.read_text(encoding="utf-8") if path.exists() else ""
    diff = "".join(difflib.unified_diff(expected.splitlines(True), rendered.splitlines(True),
                                        fromfile=str(path), tofile="rendered"))
    return rendered == expected, rendered, diff
