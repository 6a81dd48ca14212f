"""Command-line front end.

Commands: ``curve`` (implicitize a planar support function), ``surface``
(degree report for a surface support function), ``table`` (computed rows
against the built-in reference values), ``plot`` (SVG/CSV samples of the
parametrized curve), and ``check`` (classification and convexity).

Exit codes: 0 success, 1 parse error, 2 degenerate input, 3 assumption
violation, 4 table mismatch.
"""

from __future__ import annotations

import json
import math
import sys
from fractions import Fraction
from typing import List, Optional, Tuple

import click

from .curves import CurveError, implicitize
from .surfaces import (SurfaceError, harmonic_surface, revolution_surface,
                       sendra_degrees)
from .tables import all_rows, compute_row, select_rows
from .trig import (SphericalSupport, SupportParseError, TrigPoly, classify,
                   is_convex, parse_spherical_text, parse_support_text)

EXIT_PARSE = 1
EXIT_DEGENERATE = 2
EXIT_ASSUMPTION = 3
EXIT_MISMATCH = 4


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise click.ClickException(str(exc))


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _parse_curve(path: str) -> TrigPoly:
    try:
        p = parse_support_text(_read_input(path))
    except SupportParseError as exc:
        _fail(EXIT_PARSE, str(exc))
    if p.is_zero():
        _fail(EXIT_DEGENERATE, "empty support function")
    return p


def _parse_spherical(path: str) -> SphericalSupport:
    try:
        h = parse_spherical_text(_read_input(path))
    except SupportParseError as exc:
        _fail(EXIT_PARSE, str(exc))
    if not h.coeffs:
        _fail(EXIT_DEGENERATE, "empty support function")
    return h


@click.group()
def main() -> None:
    """Exact implicitization of support-function curves and surfaces."""


# ---------------------------------------------------------------------------
# curve


@main.command("curve")
@click.option("--input", "input_path", required=True,
              help="Support file (- for stdin): `a0 = 1/2`, `cos 3 = 1/16`.")
@click.option("--format", "fmt", default="text",
              type=click.Choice(["text", "json"]))
@click.option("--out", default=None, help="Write the report to a file.")
@click.option("--seed", default=0, type=int, show_default=True,
              help="Recorded in the report for reproducibility.")
def cmd_curve(input_path: str, fmt: str, out: Optional[str], seed: int) -> None:
    """Implicitize a planar support function."""
    p = _parse_curve(input_path)
    try:
        rep = implicitize(p)
    except CurveError as exc:
        _fail(EXIT_DEGENERATE, str(exc))
    if fmt == "json":
        payload = rep.to_json_dict()
        payload["seed"] = seed
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", out)
        return
    lines = [
        f"classification: {rep.classification.describe()}",
        f"tracing_index: {rep.tracing_index}",
        f"total_degree: {rep.total_degree} (predicted {rep.predicted_total_degree})",
        f"deg_x: {rep.deg_x}  deg_y: {rep.deg_y}",
        f"seed: {seed}",
        f"f(x, y) = {rep.f.canonical_text()}",
    ]
    _emit("\n".join(lines) + "\n", out)


# ---------------------------------------------------------------------------
# surface


def _slow_estimate(degree: int, revolve: bool) -> Optional[str]:
    """Human-readable cost estimate for rows beyond the default tier."""
    if revolve:
        if degree >= 5:
            return (f"support degree {degree} surface of revolution: "
                    "elimination degrees up to 4N+4 = "
                    f"{4 * degree + 4}, expect tens of minutes")
        return None
    if degree >= 4:
        return (f"spherical-harmonic degree {degree}: pair resultants of "
                f"degree up to {8 * degree + 8} in each parameter, "
                "expect an hour or more")
    return None


@main.command("surface")
@click.option("--input", "input_path", required=True,
              help="Spherical file (`Y 3 1 a = 1/10`) or, with --revolve, "
                   "a planar support file.")
@click.option("--revolve", is_flag=True,
              help="Treat the input as a planar support function and "
                   "revolve the curve about the x-axis.")
@click.option("--format", "fmt", default="text",
              type=click.Choice(["text", "json"]))
@click.option("--slow", "slow_tier", is_flag=True,
              help="Allow computations beyond the default cost tier.")
@click.option("--out", default=None)
@click.option("--seed", default=0, type=int, show_default=True)
def cmd_surface(input_path: str, revolve: bool, fmt: str, slow_tier: bool,
                out: Optional[str], seed: int) -> None:
    """Degree report (map degree, partial-degree ratios) for a surface."""
    if revolve:
        p = _parse_curve(input_path)
        degree = p.degree
        surface = revolution_surface(p)
    else:
        h = _parse_spherical(input_path)
        degree = h.degree
        surface = harmonic_surface(h)
    if not slow_tier:
        estimate = _slow_estimate(degree, revolve)
        if estimate:
            _fail(EXIT_DEGENERATE,
                  f"refused without --slow: {estimate}")
    try:
        rep = sendra_degrees(surface)
    except SurfaceError as exc:
        _fail(EXIT_ASSUMPTION, str(exc))
    if fmt == "json":
        payload = rep.to_json_dict()
        payload["seed"] = seed
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", out)
        return
    lines = [
        f"map_degree: {rep.map_degree}",
        f"ratios: x {rep.table_ratio_x}  y {rep.table_ratio_y}  "
        f"z {rep.table_ratio_z}",
        f"pair_degrees: x {rep.deg_x}  y {rep.deg_y}  z {rep.deg_z}",
        f"shear: {rep.shear}  permutation: {list(rep.permutation)}",
        f"seed: {seed}",
        f"wall_time_seconds: {rep.wall_time:.3f}",
    ]
    _emit("\n".join(lines) + "\n", out)


# ---------------------------------------------------------------------------
# table


@main.command("table")
@click.option("--rows", default="",
              help="Comma-separated row names (e.g. `cos3,P21`); empty "
                   "runs the default set.")
@click.option("--slow", "slow_tier", is_flag=True,
              help="Include slow-tier rows in the default set.")
@click.option("--format", "fmt", default="text",
              type=click.Choice(["text", "csv", "json"]))
@click.option("--out", default=None)
@click.option("--seed", default=0, type=int, show_default=True)
def cmd_table(rows: str, slow_tier: bool, fmt: str, out: Optional[str],
              seed: int) -> None:
    """Recompute the built-in degree tables and flag each cell."""
    names = [r for r in (s.strip() for s in rows.split(",")) if r]
    try:
        selected = select_rows(names, slow_tier)
    except KeyError as exc:
        _fail(EXIT_PARSE, str(exc.args[0]))
    results = [compute_row(row) for row in selected]
    ok = all(r.all_match for r in results)

    if fmt == "json":
        payload = {
            "seed": seed,
            "all_match": ok,
            "rows": [
                {
                    "key": r.row.key,
                    "label": r.row.label,
                    "kind": r.row.kind,
                    "expected": list(r.row.expected),
                    "computed": list(r.computed),
                    "matches": list(r.matches),
                    "wall_time_seconds": round(r.wall_time, 3),
                }
                for r in results
            ],
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", out)
    elif fmt == "csv":
        lines = ["key,kind,map_expected,map_computed,x_expected,x_computed,"
                 "y_expected,y_computed,z_expected,z_computed,match"]
        for r in results:
            cells = []
            for e, c in zip(r.row.expected, r.computed):
                cells.extend([str(e), str(c)])
            lines.append(",".join([r.row.key, r.row.kind] + cells +
                                  ["MATCH" if r.all_match else "MISMATCH"]))
        _emit("\n".join(lines) + "\n", out)
    else:
        width = max(len(r.row.label) for r in results) if results else 0
        lines = [f"seed: {seed}"]
        for r in results:
            cells = "  ".join(
                f"{c}{'' if m else '!=' + str(e)}"
                for c, e, m in zip(r.computed, r.row.expected, r.matches))
            flag = "MATCH" if r.all_match else "MISMATCH"
            lines.append(f"{r.row.label.ljust(width)}  {cells}  {flag}  "
                         f"({r.wall_time:.1f}s)")
        _emit("\n".join(lines) + "\n", out)
    if not ok:
        sys.exit(EXIT_MISMATCH)


# ---------------------------------------------------------------------------
# plot


def _curve_samples(p: TrigPoly, count: int) -> List[Tuple[float, float, float]]:
    """(θ, x, y) at `count` uniform θ values; γ = (p cos − p′ sin, p sin + p′ cos)."""
    dp = TrigPoly(Fraction(0),
                  {k: k * v for k, v in p.b.items()},
                  {k: -k * v for k, v in p.a.items()})
    out = []
    for i in range(count):
        theta = 2.0 * math.pi * i / count
        pv = p.eval_float(theta)
        dv = dp.eval_float(theta)
        c, s = math.cos(theta), math.sin(theta)
        out.append((theta, pv * c - dv * s, pv * s + dv * c))
    return out


def _svg_polyline(samples: List[Tuple[float, float, float]]) -> str:
    xs = [x for _, x, _ in samples]
    ys = [y for _, _, y in samples]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    span = max(xmax - xmin, ymax - ymin, 1e-12)
    margin = 0.05 * span
    lo_x = (xmin + xmax) / 2 - span / 2 - margin
    lo_y = (ymin + ymax) / 2 - span / 2 - margin
    scale = 800.0 / (span + 2 * margin)
    pts = " ".join(
        f"{(x - lo_x) * scale:.3f},{800.0 - (y - lo_y) * scale:.3f}"
        for _, x, y in samples)
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" '
        'viewBox="0 0 800 800">\n'
        f'<polygon points="{pts}" fill="none" stroke="black" '
        'stroke-width="1.5"/>\n'
        "</svg>\n")


@main.command("plot")
@click.option("--input", "input_path", required=True)
@click.option("--format", "fmt", default="svg",
              type=click.Choice(["svg", "csv"]))
@click.option("--samples", "sample_count", default=720, type=int,
              show_default=True)
@click.option("--out", default=None)
@click.option("--seed", default=0, type=int, show_default=True)
def cmd_plot(input_path: str, fmt: str, sample_count: int,
             out: Optional[str], seed: int) -> None:
    """Sample the curve parametrization and emit an SVG or CSV."""
    if sample_count < 1:
        _fail(EXIT_DEGENERATE, "need at least one sample")
    p = _parse_curve(input_path)
    samples = _curve_samples(p, sample_count)
    if fmt == "svg":
        _emit(_svg_polyline(samples), out)
        return
    lines = [f"# seed={seed}", "theta,x,y"]
    lines += [f"{t:.9f},{x:.9f},{y:.9f}" for t, x, y in samples]
    _emit("\n".join(lines) + "\n", out)


# ---------------------------------------------------------------------------
# check


@main.command("check")
@click.option("--input", "input_path", required=True)
@click.option("--format", "fmt", default="text",
              type=click.Choice(["text", "json"]))
@click.option("--out", default=None)
@click.option("--seed", default=0, type=int, show_default=True)
def cmd_check(input_path: str, fmt: str, out: Optional[str],
              seed: int) -> None:
    """Classification and exact convexity certificate for a curve."""
    p = _parse_curve(input_path)
    cls = classify(p)
    conv = is_convex(p)
    # a width of zero means no convex body at all: report the spectrum
    # parity instead of a degenerate constant-width classification
    kind = cls.describe()
    if cls.kind == "constant_width" and cls.alpha == 0:
        kind = "odd_only"
    if fmt == "json":
        payload = {
            "seed": seed,
            "classification": {
                "kind": kind if kind == "odd_only" else cls.kind,
                "alpha": None if cls.alpha is None else str(cls.alpha),
                "n": cls.n,
                "rho": None if cls.rho is None else str(cls.rho),
                "witness": cls.witness,
            },
            "convex": conv.convex,
            "convexity_witness_theta": conv.witness_theta,
            "convexity_rho_value": (None if conv.rho_value is None
                                    else str(conv.rho_value)),
            "boundary_root_count": conv.boundary_root_count,
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", out)
        return
    lines = [f"classification: {kind}"]
    if conv.convex:
        lines.append("convex: yes "
                     f"(curvature-radius real zeros: {conv.boundary_root_count})")
    else:
        theta = conv.witness_theta
        lines.append("convex: no "
                     f"(witness θ = {theta:.6f}, ρ = {conv.rho_value})")
    lines.append(f"seed: {seed}")
    _emit("\n".join(lines) + "\n", out)


if __name__ == "__main__":
    main()
