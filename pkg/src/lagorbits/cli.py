"""Command-line front end.

Subcommands: ``tables``, ``check``, ``classify``, ``products``, ``moment``.
Exit codes: 0 success or golden match, 1 mismatch against a golden file,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import classify as _classify
from . import momentmap as _mm
from . import tables as _tables
from .lagcrit import find_Q_candidates
from .repdata import IrrepSpec, weight_system
from .rootsys import build_root_system, format_weight

__all__ = ["RunConfig", "build_parser", "main"]

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
MAX_TOL = 1e-3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    fmt: str = "text"
    output: Optional[Path] = None
    expect: Optional[Path] = None
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        for key in ("rank_cap", "dim_cap", "k_cap", "factors", "size", "k", "jobs"):
            v = self.options.get(key)
            if v is not None and v <= 0:
                raise UsageError(f"--{key.replace('_', '-')} must be positive, got {v}")
        tol = self.options.get("tol")
        if tol is not None and not 0 < tol < MAX_TOL:
            raise UsageError(f"--tol must lie in (0, {MAX_TOL:g}), got {tol:g}")


# ------------------------------------------------------------------ output

def _use_color(stream) -> bool:
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, ok: bool, color: bool) -> str:
    if not color:
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def _emit(cfg: RunConfig, text: str):
    if cfg.output:
        cfg.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _jsonl(records: Sequence[dict]) -> str:
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)


def _check_expectation(cfg: RunConfig, records: list) -> int:
    if cfg.expect is None:
        return EXIT_OK
    try:
        lines = cfg.expect.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise UsageError(f"--expect: {exc}") from None
    expected = [json.loads(l) for l in lines if l.strip()]
    got = json.loads(json.dumps(records))
    if got == expected:
        return EXIT_OK
    print(f"mismatch against {cfg.expect}: expected {len(expected)} records, got {len(got)}", file=sys.stderr)
    for i, (a, b) in enumerate(zip(expected, got), 1):
        if a != b:
            print(f"first difference at record {i}", file=sys.stderr)
            break
    return EXIT_MISMATCH


# ------------------------------------------------------------------ parsing

def _parse_int_list(text: str, flag: str) -> list:
    out = []
    for pos, tok in enumerate(text.split(","), 1):
        try:
            out.append(int(tok))
        except ValueError:
            raise UsageError(f"{flag}: entry {pos} ({tok.strip()!r}) is not an integer") from None
    return out


def _parse_fraction_list(text: str, flag: str) -> list:
    out = []
    for pos, tok in enumerate(text.split(","), 1):
        try:
            out.append(Fraction(tok.strip()))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"{flag}: entry {pos} ({tok.strip()!r}) is not a rational number") from None
    return out


def _spec_from_args(algebra: str, weight: str, ambient: bool) -> IrrepSpec:
    try:
        rs = build_root_system(algebra)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"--algebra: {exc}") from None
    if ambient:
        w = _parse_fraction_list(weight, "--weight")
        if len(w) != rs.ambient_dim:
            raise UsageError(f"--weight: {rs.label} needs {rs.ambient_dim} ambient coordinates, got {len(w)}")
        try:
            return IrrepSpec.from_weight(rs, tuple(w))
        except ValueError as exc:
            raise UsageError(f"--weight: {exc}") from None
    flat = _parse_int_list(weight, "--weight")
    if len(flat) != rs.rank:
        raise UsageError(f"--weight: {rs.label} needs {rs.rank} fundamental coordinates, got {len(flat)}")
    coords, pos = [], 0
    for f in rs.factors:
        coords.append(tuple(flat[pos:pos + f.rank]))
        pos += f.rank
    try:
        return IrrepSpec(rs, tuple(coords))
    except ValueError as exc:
        raise UsageError(f"--weight: {exc}") from None


# ---------------------------------------------------------------- commands

def cmd_tables(cfg: RunConfig) -> int:
    k_floor = cfg.options["k_floor"]
    rank_cap = cfg.options["rank_cap"]
    golden = _tables.golden_path(k_floor)
    rendered = _tables.render_table(k_floor, rank_cap)
    if cfg.options.get("update_golden"):
        golden.write_text(rendered, encoding="utf-8")
        print(f"wrote {golden}", file=sys.stderr)
    matches, rendered, diff = _tables.compare_with_golden(k_floor, rank_cap)
    if cfg.fmt == "json":
        rows = [{"g": r.name, "highest_weight": r.weight_text(), "bound": r.bound, "dim": r.dims}
                for r in _tables.family_rows(k_floor, rank_cap)]
        _emit(cfg, json.dumps({"k_floor": k_floor, "rank_cap": rank_cap, "matches_golden": matches,
                               "rows": rows}, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        _emit(cfg, rendered)
    if not matches:
        sys.stderr.write(diff or f"golden file {golden} missing\n")
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_check(cfg: RunConfig) -> int:
    o = cfg.options
    spec = _spec_from_args(o["algebra"], o["weight"], o.get("ambient", False))
    ws = weight_system(spec)
    k = o["k"]
    if k > ws.dim // 2:
        raise UsageError(f"--k: {spec.label()} has dimension {ws.dim}, so k must be at most {ws.dim // 2}")
    cands = find_Q_candidates(spec, k)
    records = [c.to_dict() for c in cands]
    verdict = any(c.lagrangian for c in cands)
    if cfg.fmt == "json":
        _emit(cfg, _jsonl(records))
    else:
        color = cfg.output is None and _use_color(sys.stdout)
        lines = [f"{spec.label()}  dim={ws.dim}  k={k}  target_dim={k * (ws.dim - k)}"]
        if not cands:
            lines.append("no candidates")
        for c in cands:
            q = ", ".join(format_weight(w) for w in c.sorted_Q())
            lines.append(f"  Q={{{q}}}  root_differences={c.condition_1_2}  zero_sum={c.condition_1_3}  "
                         f"simple_weights={c.condition_1_4}  orbit_dim={c.orbit_dim}  lagrangian={str(c.lagrangian).lower()}")
        lines.append(_paint(f"lagrangian={str(verdict).lower()}", verdict, color))
        _emit(cfg, "\n".join(lines) + "\n")
    return _check_expectation(cfg, records)


def _records_text(records: list, color: bool) -> str:
    lines = []
    for r in records:
        tag = _paint(r.verdict, r.lagrangian, color)
        extra = f"  [{r.reason}]" if r.reason else ""
        if r.table1:
            extra += "  " + " / ".join(r.table1)
        lines.append(f"{r.spec.label():<24} n={r.n:<3} k={r.k:<2} {tag}{extra}")
    pos = [r for r in records if r.lagrangian]
    lines.append(f"{len(records)} records, {len(pos)} lagrangian")
    return "\n".join(lines) + "\n"


def _sweep_output(cfg: RunConfig, records: list) -> int:
    dicts = [r.to_dict() for r in records]
    if cfg.options.get("positives_only"):
        dicts = [d for d, r in zip(dicts, records) if r.lagrangian]
        records = [r for r in records if r.lagrangian]
    if cfg.fmt == "json":
        _emit(cfg, _jsonl(dicts))
    else:
        _emit(cfg, _records_text(records, cfg.output is None and _use_color(sys.stdout)))
    return _check_expectation(cfg, dicts)


def cmd_classify(cfg: RunConfig) -> int:
    o = cfg.options
    records = _classify.run_classification(rank_cap=o["rank_cap"], k_cap=o["k_cap"],
                                           dim_cap=o["dim_cap"], jobs=o["jobs"])
    return _sweep_output(cfg, records)


def cmd_products(cfg: RunConfig) -> int:
    o = cfg.options
    records = _classify.scan_products(factor_cap=o["factors"], dim_cap=o["dim_cap"],
                                      rank_cap=o["rank_cap"], jobs=o["jobs"])
    return _sweep_output(cfg, records)


def cmd_moment(cfg: RunConfig) -> int:
    o = cfg.options
    try:
        real = _mm.build_realization(o["family"], o["size"])
    except ValueError as exc:
        raise UsageError(f"--family/--size: {exc}") from None
    if o.get("plane_weights") is not None:
        try:
            plane = _mm.plane_from_weights(real, _mm.parse_weight_list(real, o["plane_weights"]))
        except (ValueError, KeyError) as exc:
            raise UsageError(f"--plane-weights: {exc}") from None
        source = "weights"
    elif o.get("plane_matrix") is not None:
        try:
            text = Path(o["plane_matrix"]).read_text(encoding="utf-8")
            plane = _mm.KPlane(_mm.parse_complex_matrix(text))
        except (OSError, ValueError) as exc:
            raise UsageError(f"--plane-matrix: {exc}") from None
        if plane.vectors.shape[0] != real.n:
            raise UsageError(f"--plane-matrix: expected {real.n} rows, got {plane.vectors.shape[0]}")
        source = "matrix"
    else:
        if o.get("k") is None:
            raise UsageError("--random needs --k")
        plane = _mm.random_plane(real, o["k"], np.random.default_rng(o["seed"]))
        source = f"random(seed={o['seed']})"
    if o.get("k") is not None and plane.k != o["k"]:
        raise UsageError(f"--k: plane has {plane.k} columns, not {o['k']}")
    try:
        res = _mm.isotropy_check(real, plane, tol=o.get("tol") or _mm.ISOTROPY_TOL)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    record = {"family": real.family, "size": real.size, "n": real.n, "k": plane.k, "source": source,
              "max_abs_moment": float(f"{res['max_abs_moment']:.6e}"), "isotropic": res["isotropic"]}
    if cfg.fmt == "json":
        _emit(cfg, _jsonl([record]))
    else:
        color = cfg.output is None and _use_color(sys.stdout)
        _emit(cfg, f"{real.family}({real.size}) on C^{real.n}, k={plane.k}, plane from {source}\n"
                   f"max |mu| = {record['max_abs_moment']:.6e}\n"
                   + _paint(f"isotropic={str(res['isotropic']).lower()}", res["isotropic"], color) + "\n")
    return _check_expectation(cfg, [record])


_COMMANDS = {
    "tables": cmd_tables,
    "check": cmd_check,
    "classify": cmd_classify,
    "products": cmd_products,
    "moment": cmd_moment,
}


# ------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", type=Path, help="write the report here instead of stdout")
    common.add_argument("--expect", type=Path, help="golden JSONL file; exit 1 when the records differ")

    p = argparse.ArgumentParser(prog="lagorbits", description="Lagrangian orbits in complex Grassmannians.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tables", parents=[common], help="reproduce the candidate tables")
    t.add_argument("--k-floor", type=int, choices=(2, 3), required=True)
    t.add_argument("--rank-cap", type=int, default=_tables.DEFAULT_RANK_CAP)
    t.add_argument("--update-golden", action="store_true")

    c = sub.add_parser("check", parents=[common], help="search torus-invariant planes of one representation")
    c.add_argument("--algebra", required=True, help="e.g. B3, G2, A1xA1")
    c.add_argument("--weight", required=True, help="fundamental-weight coordinates, e.g. 0,0,1")
    c.add_argument("--ambient", action="store_true", help="read --weight as ambient coordinates")
    c.add_argument("--k", type=int, required=True)

    for name, helptext in (("classify", "sweep simple algebras"), ("products", "sweep product algebras")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--dim-cap", type=int, default=64)
        s.add_argument("--jobs", type=int, default=_classify.default_jobs())
        s.add_argument("--positives-only", action="store_true")
        if name == "classify":
            s.add_argument("--rank-cap", type=int, default=8)
            s.add_argument("--k-cap", type=int, default=8)
        else:
            s.add_argument("--factors", type=int, default=3)
            s.add_argument("--rank-cap", type=int, default=3)

    m = sub.add_parser("moment", parents=[common], help="evaluate the moment map on a plane")
    m.add_argument("--family", choices=("su", "so", "sp"), required=True)
    m.add_argument("--size", type=int, required=True)
    src = m.add_mutually_exclusive_group(required=True)
    src.add_argument("--plane-weights", help='e.g. "e1,-e1"')
    src.add_argument("--plane-matrix", help="file of comma-separated a+bi rows")
    src.add_argument("--random", action="store_true")
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--k", type=int)
    m.add_argument("--tol", type=float)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    opts = {k: v for k, v in vars(args).items() if k not in ("command", "format", "output", "expect")}
    try:
        cfg = RunConfig(args.command, args.format, args.output, args.expect, opts)
        return _COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
