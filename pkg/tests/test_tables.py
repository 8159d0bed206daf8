from fractions import Fraction

import pytest

from lagorbits.classify import bound_value
from lagorbits.rootsys import build_root_system
from lagorbits.tables import BOUND_FORMULAS, compare_with_golden, family_rows, golden_path, render_table

# hand transcription of the two candidate tables: family -> (highest weights, bound, dims)
TABLE2 = {
    "a_n": ("λ_1, λ_2", "(n^2+n+4)/2", "n+1, n(n+1)/2"),
    "b_n": ("λ_1, λ_n (n=2,3,4)", "n^2+2", "2n+1, 4, 8, 16"),
    "c_n": ("λ_1", "n^2+2", "2n"),
    "d_n": ("λ_1, λ_{n-1} (n=4,5,6)", "n^2-n+2", "2n, 8, 16, 32"),
    "e_6": ("λ_1", "38", "27"),
    "e_7": ("λ_1", "65", "56"),
    "e_8": ("-", "122", "-"),
    "f_4": ("λ_4", "26", "26"),
    "g_2": ("λ_1", "8", "7"),
}
TABLE3 = {
    "a_n": ("λ_1, λ_2 (n=2,3)", "(n^2+n+9)/3", "n+1, 3, 6"),
    "b_n": ("λ_1, λ_n (n=2,3)", "(2n^2+9)/3", "2n+1, 4, 8"),
    "c_n": ("λ_1", "(2n^2+9)/3", "2n"),
    "d_n": ("λ_1, λ_{n-1} (n=4,5)", "(2n^2-2n+9)/3", "2n, 8, 16"),
    "e_6": ("λ_1", "27", "27"),
    "e_7": ("-", "45", "-"),
    "e_8": ("-", "83", "-"),
    "f_4": ("-", "19", "-"),
    "g_2": ("λ_1", "7", "7"),
}


@pytest.mark.parametrize("k_floor,expected", [(2, TABLE2), (3, TABLE3)])
def test_rows_match_transcription(k_floor, expected):
    rows = {r.name: (r.weight_text(), r.bound, r.dims) for r in family_rows(k_floor)}
    assert rows == expected


@pytest.mark.parametrize("k_floor", [2, 3])
def test_golden_files_match(k_floor):
    ok, rendered, diff = compare_with_golden(k_floor)
    assert ok, diff
    assert golden_path(k_floor).read_text(encoding="utf-8") == rendered


@pytest.mark.parametrize("k_floor", [2, 3])
@pytest.mark.parametrize("t,lo", [("A", 1), ("B", 2), ("C", 2), ("D", 3)])
def test_bound_formulas(k_floor, t, lo):
    _, fn = BOUND_FORMULAS[k_floor][t]
    for n in range(lo, 12):
        assert fn(n) == bound_value(build_root_system(f"{t}{n}"), k_floor)


def test_smaller_rank_cap_differs_from_golden():
    ok, _, diff = compare_with_golden(2, rank_cap=5)
    assert not ok and diff


def test_render_is_deterministic():
    assert render_table(3) == render_table(3)
