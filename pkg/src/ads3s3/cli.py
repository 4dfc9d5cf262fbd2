"""Command-line front end.

Subcommands: bridge, verify, sample, scan, charges, brackets.  Exit codes:
0 success, 1 validation or usage error, 2 numeric verification failure.
Outputs are deterministic; CSV floats carry 17 significant digits so golden
files round-trip exactly.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .bridge import RegionError, bridge as bridge_invariants, f_max, scan_region
from .algebra import (
    DegenerateConfigurationError,
    UnitSphereVector,
    UnitTimelikeVector,
    ValidationError,
)
from .charges import charge_coefficients, charges_analytic, charges_numeric
from .geometry import DEFAULT_THRESHOLDS, verify_solution
from .solutions import embedding_surface, family_solution, params_from_dict
from .symplectic import ParticleChart, ParticleChartPoint, StringChart, StringChartPoint, poisson_bracket


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(x):
    x = float(x)
    if math.isnan(x):
        return "nan"
    return format(x, ".17g")


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows, columns):
    lines = [",".join(columns)]
    for row in rows:
        cells = []
        for c in columns:
            v = row[c]
            if isinstance(v, bool):
                cells.append("true" if v else "false")
            elif isinstance(v, (int, np.integer)):
                cells.append(str(int(v)))
            else:
                cells.append(_fmt(v))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _json(payload):
    return json.dumps(payload, indent=2, allow_nan=True) + "\n"


def _parse_range(spec, name):
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValidationError(f"{name} range must be start:stop:count, got {spec!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ValidationError(f"bad {name} range {spec!r}: {exc}") from exc


def _load_params(args, strict):
    if args.params:
        with open(args.params) as fh:
            return params_from_dict(json.load(fh), strict=strict)
    if args.f is None or args.b is None:
        raise ValidationError("provide --params or the family point --f, --b [--n]")
    return family_solution(args.f, args.b, args.n)


def cmd_bridge(args):
    block = bridge_invariants(args.f, args.b, args.n)
    payload = block.as_dict()
    if args.format == "csv":
        cols = list(payload)
        payload["degenerate"] = ";".join(block.degenerate)
        text = ",".join(cols) + "\n" + ",".join(
            str(payload[c]) if c in ("n", "degenerate") else _fmt(payload[c]) for c in cols) + "\n"
    else:
        text = _json(payload)
    _emit(text, args.out)
    return 0


def cmd_verify(args):
    sol = _load_params(args, strict=False)
    thresholds = None
    if args.tol is not None:
        thresholds = {k: args.tol for k in DEFAULT_THRESHOLDS}
    grid = (4, 8)
    if args.grid:
        try:
            t, s = args.grid.lower().split("x")
            grid = (int(t), int(s))
        except ValueError as exc:
            raise ValidationError(f"bad --grid {args.grid!r}; expected TxS") from exc
        if grid[0] < 1 or grid[1] < 1:
            raise ValidationError("verification grid must be at least 1x1")
    report = verify_solution(sol, grid=grid, thresholds=thresholds)
    _emit(_json(report.as_dict()), args.out)
    return 0 if report.ok else 2


def cmd_sample(args):
    sol = family_solution(args.f, args.b, args.n)
    taus = np.linspace(0.0, 2.0 * math.pi, args.tau_steps, endpoint=False)
    sigmas = np.linspace(0.0, 2.0 * math.pi, args.sigma_steps, endpoint=False)
    y, x = embedding_surface(sol, taus, sigmas)
    with np.errstate(divide="ignore", invalid="ignore"):
        proj = x[..., :3] / (1.0 + x[..., 3])[..., None]
    columns = ["tau", "sigma", "Y0p", "Y0", "Y1", "Y2",
               "X1", "X2", "X3", "X4", "P1", "P2", "P3"]
    rows = []
    for i, t in enumerate(taus):
        for j, s in enumerate(sigmas):
            vals = [t, s, *y[i, j], *x[i, j], *proj[i, j]]
            rows.append(dict(zip(columns, vals)))
    text = _csv(rows, columns) if args.format == "csv" else _json(
        [{k: float(v) for k, v in row.items()} for row in rows])
    _emit(text, args.out)
    return 0


def cmd_scan(args):
    if not args.grid:
        raise ValidationError("scan requires --grid fstart:fstop:count,bstart:bstop:count")
    try:
        f_spec, b_spec = args.grid.split(",")
    except ValueError as exc:
        raise ValidationError(f"bad --grid {args.grid!r}") from exc
    f_range = _parse_range(f_spec, "f")
    b_range = _parse_range(b_spec, "b")
    try:
        rows = scan_region(f_range, b_range, args.n)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    columns = ["f", "b", "admissible", "cosh2theta", "cos2theta_s",
               "mu2", "mubar2", "coshalpha", "cosbeta"]
    text = _csv(rows, columns) if args.format == "csv" else _json(rows)
    _emit(text, args.out)
    return 0


def cmd_charges(args):
    sol = _load_params(args, strict=True)
    analytic = charges_analytic(sol)
    numeric = charges_numeric(sol)
    gap = max(float(np.max(np.abs(a.coeffs - b.coeffs))) for a, b in (
        (analytic.L, numeric.L), (analytic.R, numeric.R),
        (analytic.L_s, numeric.L_s), (analytic.R_s, numeric.R_s)))
    c_L, c_R, c_Ls, c_Rs = charge_coefficients(analytic, sol)
    scale = args.scale
    payload = {
        "scale": scale,
        "L": [scale * v for v in analytic.L.coeffs.tolist()],
        "R": [scale * v for v in analytic.R.coeffs.tolist()],
        "L_s": [scale * v for v in analytic.L_s.coeffs.tolist()],
        "R_s": [scale * v for v in analytic.R_s.coeffs.tolist()],
        "coefficients": {"L": scale * c_L, "R": scale * c_R,
                         "L_s": scale * c_Ls, "R_s": scale * c_Rs},
        "mL": scale * analytic.m_L, "mR": scale * analytic.m_R,
        "mL_s": scale * analytic.m_L_s, "mR_s": scale * analytic.m_R_s,
        "asymmetry_mR_over_mL": analytic.m_R / analytic.m_L if analytic.m_L else math.nan,
        "quadrature_gap": gap,
    }
    _emit(_json(payload), args.out)
    return 0


def _random_particle_point(rng):
    return ParticleChartPoint(
        lhat=UnitTimelikeVector(rng.uniform(0.1, 1.0), rng.uniform(0.0, 2.0 * math.pi)),
        rhat=UnitTimelikeVector(rng.uniform(0.1, 1.0), rng.uniform(0.0, 2.0 * math.pi)),
        lhat_s=UnitSphereVector(rng.uniform(0.4, 2.4), rng.uniform(0.0, 2.0 * math.pi)),
        rhat_s=UnitSphereVector(rng.uniform(0.4, 2.4), rng.uniform(0.0, 2.0 * math.pi)),
        m_s=rng.uniform(0.4, 1.6), M=rng.uniform(0.2, 1.2),
        phi=rng.uniform(0.0, 2.0 * math.pi), phi_s=rng.uniform(0.0, 2.0 * math.pi),
    )


def _random_string_point(rng, n=1):
    b = rng.uniform(1.05, 1.5)
    f = rng.uniform(b + 0.02, f_max(b) - 0.02)
    return StringChartPoint(
        lhat=UnitTimelikeVector(rng.uniform(0.2, 0.9), rng.uniform(0.0, 2.0 * math.pi)),
        rhat=UnitTimelikeVector(rng.uniform(0.2, 0.9), rng.uniform(0.0, 2.0 * math.pi)),
        lhat_s=UnitSphereVector(rng.uniform(0.5, 1.2), rng.uniform(0.0, 2.0 * math.pi)),
        rhat_s=UnitSphereVector(rng.uniform(1.8, 2.6), rng.uniform(0.0, 2.0 * math.pi)),
        f=f, b=b, phi1=rng.uniform(0.0, 1.0), phi2=rng.uniform(0.0, 1.0), n=n,
    )


_ADS_PAIRS = [("L0", "L1"), ("L0", "L2"), ("L1", "L2"),
              ("R0", "R1"), ("R0", "R2"), ("R1", "R2")]
_SPH_PAIRS = [("Ls1", "Ls2"), ("Ls2", "Ls3"), ("Ls3", "Ls1"),
              ("Rs1", "Rs2"), ("Rs2", "Rs3"), ("Rs3", "Rs1")]


def _algebra_residual(chart, form, x):
    """Max deviation of the charge brackets from the left/right algebra."""
    from .symplectic import expected_bracket

    worst = 0.0
    names = [f"{side}{i}" for side in ("L", "R") for i in range(3)] + \
            [f"{side}{i}" for side in ("Ls", "Rs") for i in (1, 2, 3)]
    values = {name: chart.charge_function(name)(x) for name in names}
    for a in names:
        for b in names:
            got = poisson_bracket(chart.charge_function(a), chart.charge_function(b), form, x)
            worst = max(worst, abs(got - expected_bracket(a, b, values)))
    return worst


def cmd_brackets(args):
    rng = np.random.default_rng(args.seed)
    results = []
    if args.mode == "particle":
        for _ in range(5):
            point = _random_particle_point(rng)
            chart = ParticleChart(point)
            form = chart.form()
            resid = _algebra_residual(chart, form, chart.coords(point))
            results.append({"mode": "particle", "max_algebra_residual": resid,
                            "form": form.as_dict()})
    elif args.mode == "string":
        for _ in range(2):
            point = _random_string_point(rng)
            chart = StringChart(point)
            form = chart.form()
            resid = _algebra_residual(chart, form, chart.coords(point))
            results.append({"mode": "string", "max_algebra_residual": resid,
                            "orbit_coefficients": list(chart.orbit_block_coefficients(form)),
                            "form": form.as_dict()})
    else:
        raise ValidationError("--mode must be particle or string")
    payload = {"seed": args.seed, "points": results,
               "max_algebra_residual": max(r["max_algebra_residual"] for r in results)}
    _emit(_json(payload), args.out)
    return 0


def _build_parser():
    parser = _Parser(prog="ads3s3", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, helptext):
        p = sub.add_parser(name, help=helptext)
        p.set_defaults(fn=fn)
        p.add_argument("--f", type=float, default=None)
        p.add_argument("--b", type=float, default=None)
        p.add_argument("--n", type=int, default=1)
        p.add_argument("--params", default=None, help="JSON parameter file")
        p.add_argument("--grid", default=None)
        p.add_argument("--tau-steps", type=int, default=16, dest="tau_steps")
        p.add_argument("--sigma-steps", type=int, default=64, dest="sigma_steps")
        p.add_argument("--out", default=None)
        p.add_argument("--format", choices=("json", "csv"), default=None)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--mode", choices=("particle", "string"), default="particle")
        p.add_argument("--scale", type=float, default=1.0,
                       help="overall coupling scale applied to reported charges")
        return p

    add("bridge", cmd_bridge, "invariants at a family point (f, b, n)")
    add("verify", cmd_verify, "residual verification battery")
    add("sample", cmd_sample, "embedding-surface mesh export")
    add("scan", cmd_scan, "admissibility scan over an (f, b) grid")
    add("charges", cmd_charges, "conserved charges and Casimirs")
    add("brackets", cmd_brackets, "Poisson-bracket algebra residuals")
    return parser


_DEFAULT_FORMATS = {"bridge": "json", "verify": "json", "sample": "csv",
                    "scan": "csv", "charges": "json", "brackets": "json"}


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = _DEFAULT_FORMATS[args.command]
    try:
        if args.command in ("bridge", "sample") and (args.f is None or args.b is None):
            raise ValidationError(f"{args.command} requires --f and --b")
        return args.fn(args)
    except (ValidationError, RegionError, DegenerateConfigurationError,
            FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"ads3s3 {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
