"""Invariant bridge between the AdS and sphere sectors.

The one-winding family is labelled by rescaled frequency pairs (e, f) and
(a, b) with f^2 - e^2 = 1 = b^2 - a^2.  Matching the worldsheet gauge
invariants (mu^2, mubar^2, cosh alpha, cos beta) computed on either sector
leaves (f, b) as independent coordinates on the two-dimensional space of
isometry invariants:

    cosh 2theta   = b f - b^2 + 1
    cos 2theta_s  = f^2 - b f - 1
    mu^2    = (n^2/4)(f - 1)(f + cosh 2theta)  = (n^2/4)(b + 1)(b + cos 2theta_s)
    mubar^2 = (n^2/4)(f + 1)(f - cosh 2theta)  = (n^2/4)(b - 1)(b - cos 2theta_s)
    cosh alpha = e / sqrt(e^2 - sinh^2 2theta)
    cos beta   = a / sqrt(a^2 + sin^2 2theta_s)

together with the cross identities 4 mu mubar cosh alpha = E^2 and
4 mu mubar cos beta = A^2 (E = n e, A = n a).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


class RegionError(ValueError):
    """(f, b) point lies outside the admissible region."""


@dataclass(frozen=True)
class Admissibility:
    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


def admissible(f, b):
    """Check 1 <= b <= f <= (b + sqrt(b^2 + 8)) / 2, naming the first violation."""
    if not (math.isfinite(f) and math.isfinite(b)):
        return Admissibility(False, "non-finite input")
    if f < 1.0:
        return Admissibility(False, "f < 1")
    if b < 1.0:
        return Admissibility(False, "b < 1")
    if f < b:
        return Admissibility(False, "f < b (cosh2theta < 1)")
    if f * f - b * f - 2.0 > 0.0:
        return Admissibility(False, "cos2theta_s out of range (f^2 - b f - 2 > 0)")
    return Admissibility(True)


def f_max(b):
    """Upper edge of the admissible band, where cos 2theta_s reaches +1."""
    return 0.5 * (b + math.sqrt(b * b + 8.0))


def invariants_from_ads(f, b, n):
    """(mu^2, mubar^2, cosh alpha) from the AdS-sector current equations."""
    c2t = b * f - b * b + 1.0
    e2 = f * f - 1.0
    mu2 = 0.25 * n * n * (f - 1.0) * (f + c2t)
    mubar2 = 0.25 * n * n * (f + 1.0) * (f - c2t)
    sinh2_2t = c2t * c2t - 1.0
    denom = e2 - sinh2_2t
    coshalpha = math.sqrt(e2) / math.sqrt(denom) if denom > 0.0 and e2 > 0.0 else math.nan
    return mu2, mubar2, coshalpha


def invariants_from_sphere(f, b, n):
    """(mu^2, mubar^2, cos beta) from the sphere-sector current equations.

    Uses the branch cos beta = a / sqrt(a^2 + sin^2 2theta_s), the one
    consistent with 4 mu mubar cos beta = A^2.
    """
    c2ts = f * f - b * f - 1.0
    a2 = b * b - 1.0
    mu2 = 0.25 * n * n * (b + 1.0) * (b + c2ts)
    mubar2 = 0.25 * n * n * (b - 1.0) * (b - c2ts)
    denom = a2 + (1.0 - c2ts * c2ts)
    cosbeta = math.sqrt(a2) / math.sqrt(denom) if denom > 0.0 and a2 > 0.0 else math.nan
    return mu2, mubar2, cosbeta


@dataclass(frozen=True)
class InvariantBlock:
    """Gauge-invariant data of a one-winding family point."""

    n: int
    f: float
    b: float
    e: float
    a: float
    E: float
    F: float
    A: float
    B: float
    lam: float
    rho: float
    lam_s: float
    rho_s: float
    cosh2theta: float
    cos2theta_s: float
    theta: float
    theta_s: float
    mu2: float
    mubar2: float
    mu: float
    mubar: float
    coshalpha: float
    cosbeta: float
    degenerate: tuple = field(default_factory=tuple)

    def as_dict(self):
        d = {k: getattr(self, k) for k in (
            "n", "f", "b", "e", "a", "E", "F", "A", "B",
            "lam", "rho", "lam_s", "rho_s",
            "cosh2theta", "cos2theta_s", "theta", "theta_s",
            "mu2", "mubar2", "mu", "mubar", "coshalpha", "cosbeta")}
        d["degenerate"] = list(self.degenerate)
        return d


def bridge(f, b, n=1):
    """Solve the invariant bridge at (f, b) for winding n >= 1.

    Evaluates the AdS-side and sphere-side expressions independently and
    requires them to agree to 1e-12; degenerate boundary points are returned
    with flags instead of errors so that scans can traverse them.
    """
    if n < 1 or int(n) != n:
        raise ValueError("winding n must be a positive integer")
    ok = admissible(f, b)
    if not ok:
        raise RegionError(ok.reason)
    n = int(n)

    c2t = b * f - b * b + 1.0
    c2ts = f * f - b * f - 1.0
    theta = 0.5 * math.acosh(max(c2t, 1.0))
    theta_s = 0.5 * math.acos(min(1.0, max(-1.0, c2ts)))

    mu2_a, mubar2_a, coshalpha = invariants_from_ads(f, b, n)
    mu2_s, mubar2_s, cosbeta = invariants_from_sphere(f, b, n)
    gap = max(abs(mu2_a - mu2_s), abs(mubar2_a - mubar2_s))
    scale = max(1.0, abs(mu2_a), abs(mubar2_a))
    if gap > 1e-12 * scale:
        raise RegionError(f"AdS/sphere invariant mismatch {gap}")

    mu2 = max(0.0, mu2_a)
    mubar2 = max(0.0, mubar2_a)
    e = math.sqrt(max(0.0, f * f - 1.0))
    a = math.sqrt(max(0.0, b * b - 1.0))
    E, F, A, B = n * e, n * f, n * a, n * b

    flags = []
    if f <= b:
        flags.append("theta=0 (AdS center worldline)")
    if c2ts >= 1.0 - 1e-15:
        flags.append("theta_s=0 (sphere circle)")
    if c2ts <= -1.0 + 1e-15:
        flags.append("theta_s=pi/2 (sphere circle)")
    if mu2 * mubar2 <= 1e-30:
        flags.append("mu*mubar=0 (alpha/beta undefined)")

    return InvariantBlock(
        n=n, f=f, b=b, e=e, a=a, E=E, F=F, A=A, B=B,
        lam=0.5 * (E + F), rho=0.5 * (E - F),
        lam_s=0.5 * (A + B), rho_s=0.5 * (B - A),
        cosh2theta=c2t, cos2theta_s=c2ts, theta=theta, theta_s=theta_s,
        mu2=mu2, mubar2=mubar2, mu=math.sqrt(mu2), mubar=math.sqrt(mubar2),
        coshalpha=coshalpha, cosbeta=cosbeta,
        degenerate=tuple(flags),
    )


def scan_region(f_range, b_range, n=1):
    """Tabulate admissibility and invariants over a rectangular (f, b) grid.

    f_range and b_range are (start, stop, count) with count >= 1; rows are
    ordered f-major then b, one dict per grid point.
    """
    f_vals = _grid_values(f_range, "f")
    b_vals = _grid_values(b_range, "b")
    rows = []
    for f in f_vals:
        for b in b_vals:
            ok = admissible(f, b)
            c2t = b * f - b * b + 1.0
            c2ts = f * f - b * f - 1.0
            mu2_a, mubar2_a, coshalpha = invariants_from_ads(f, b, n)
            _, _, cosbeta = invariants_from_sphere(f, b, n)
            rows.append({
                "f": f, "b": b, "admissible": bool(ok),
                "cosh2theta": c2t, "cos2theta_s": c2ts,
                "mu2": mu2_a, "mubar2": mubar2_a,
                "coshalpha": coshalpha, "cosbeta": cosbeta,
            })
    return rows


def _grid_values(rng, name):
    start, stop, count = rng
    count = int(count)
    if count < 1:
        raise ValueError(f"empty {name} grid")
    if count == 1:
        return [float(start)]
    if stop < start:
        raise ValueError(f"{name} range must be monotone")
    return list(np.linspace(float(start), float(stop), count))


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    residual: float
    mu2: float
    mubar2: float
    coshalpha: float
    cosbeta: float

    def __bool__(self):
        return self.feasible


def feasibility_general(m, n, m_s, n_s, lam, rho, lam_s, rho_s,
                        cosh2theta, cos2theta_s, tol=1e-8):
    """Check whether a general winding sector admits consistent invariants.

    Given windings and frequencies plus the angle invariants, the six
    current-matching equations are linear in (mu^2, mubar^2,
    2 mu mubar cosh alpha, 2 mu mubar cos beta).  Solves them in least
    squares and reports the residual together with the range constraints
    mu^2, mubar^2 >= 0, cosh alpha >= 1, |cos beta| <= 1.  The residual is a
    diagnostic, not a classification of the sector.
    """
    for w, w_name in ((m, "m"), (n, "n"), (m_s, "m_s"), (n_s, "n_s")):
        if int(w) != w:
            raise ValueError(f"winding {w_name} must be an integer")
    if (m - n) % 2 or (m_s - n_s) % 2:
        raise ValueError("windings must have matching parity in each sector")

    lhs = np.array([
        lam ** 2 + rho ** 2 + 2.0 * lam * rho * cosh2theta,
        0.25 * (m ** 2 + n ** 2 + 2.0 * m * n * cosh2theta),
        0.5 * (lam * m + rho * n + (lam * n + rho * m) * cosh2theta),
        lam_s ** 2 + rho_s ** 2 + 2.0 * lam_s * rho_s * cos2theta_s,
        0.25 * (m_s ** 2 + n_s ** 2 + 2.0 * m_s * n_s * cos2theta_s),
        0.5 * (lam_s * m_s + rho_s * n_s + (lam_s * n_s + rho_s * m_s) * cos2theta_s),
    ])
    # unknowns x = (mu^2, mubar^2, 2 mu mubar cosh alpha, 2 mu mubar cos beta)
    design = np.array([
        [1.0, 1.0, 1.0, 0.0],
        [1.0, 1.0, -1.0, 0.0],
        [1.0, -1.0, 0.0, 0.0],
        [1.0, 1.0, 0.0, 1.0],
        [1.0, 1.0, 0.0, -1.0],
        [1.0, -1.0, 0.0, 0.0],
    ])
    x, *_ = np.linalg.lstsq(design, lhs, rcond=None)
    residual = float(np.max(np.abs(design @ x - lhs)))
    mu2, mubar2, p, q = (float(v) for v in x)

    prod = 2.0 * math.sqrt(max(mu2, 0.0) * max(mubar2, 0.0))
    if prod <= tol:
        coshalpha = math.nan
        cosbeta = math.nan
        in_range = abs(p) <= tol and abs(q) <= tol
    else:
        coshalpha = p / prod
        cosbeta = q / prod
        in_range = coshalpha >= 1.0 - tol and abs(cosbeta) <= 1.0 + tol
    feasible = residual <= tol and mu2 >= -tol and mubar2 >= -tol and in_range
    return FeasibilityResult(feasible, residual, mu2, mubar2, coshalpha, cosbeta)
