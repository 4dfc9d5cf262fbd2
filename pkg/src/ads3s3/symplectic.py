"""Particle and string phase spaces and their symplectic structure.

The particle phase space on the group manifolds is charted by the unit
directions of the left/right charges, the sphere Casimir m_s and one angle;
its symplectic form splits into coadjoint-orbit blocks,

    omega = m w_L + m w_R + m_s w_L^s + m_s w_R^s + dm_s ^ dchi,
    w_L = dl2 ^ dl1 / (2 l^0),    w_R = dr1 ^ dr2 / (2 r^0),

with m = sqrt(M^2 + m_s^2) fixed by the mass shell.  The sphere orbit
blocks carry the opposite relative orientation (w_L^s = dls_u ^ dls_v /
(2 ls_w) in a cyclic chart), which follows from the sign flip between the
sl(2,R) and su(2) structure constants; the orientation is pinned down
numerically in the test suite by differentiating the canonical 1-form
<R g^{-1} dg> directly.

The string phase space is the twelve-parameter solution chart
(l, r, l_s, r_s, f, b, phi1, phi2); its form is obtained by numerically
differentiating the presymplectic 1-form

    theta = (1/2pi) int dsigma [ <R g^{-1} dg> + <R_s h^{-1} dh> ],

whose orbit blocks reproduce the charge coefficients, the remainder being
the (f, b, phi1, phi2) sector that has no closed form here.

Poisson brackets use {F, G} = -grad(F)^T omega^{-1} grad(G); the global
sign is fixed once by matching {L_mu, L_nu} = -2 eps_{mu nu}^rho L_rho on
the AdS left block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bridge import admissible as _admissible
from .algebra import (
    AdsGroupElement,
    DegenerateConfigurationError,
    SphereGroupElement,
    UnitSphereVector,
    UnitTimelikeVector,
    ValidationError,
    ads_basis,
    exp_algebra,
    inner,
    normalized_commutator,
    sphere_basis,
)
from .charges import current_matrices
from .solutions import SimpleFamilyPoint, SolutionParams, evaluate_matrices

_T0, _T1, _T2 = ads_basis()
_S1, _S2, _S3 = sphere_basis()

DEFAULT_FORM_STEP = 2e-5
DEFAULT_GRAD_STEP = 1e-6


@dataclass(frozen=True)
class TwoFormMatrix:
    """Antisymmetric matrix of a 2-form in labelled chart coordinates."""

    matrix: np.ndarray
    labels: tuple

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.shape != (len(self.labels), len(self.labels)):
            raise ValidationError("form matrix does not match coordinate labels")
        m = 0.5 * (m - m.T)  # exact antisymmetry
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "labels", tuple(self.labels))

    def index(self, label):
        return self.labels.index(label)

    @property
    def condition_number(self):
        return float(np.linalg.cond(self.matrix))

    def inverse(self):
        det = np.linalg.det(self.matrix)
        if not np.isfinite(det) or abs(det) < 1e-300:
            raise DegenerateConfigurationError("symplectic form is singular")
        return np.linalg.inv(self.matrix)

    def entry(self, label_a, label_b):
        return float(self.matrix[self.index(label_a), self.index(label_b)])

    def as_dict(self):
        return {"labels": list(self.labels), "matrix": self.matrix.tolist()}


def gradient(fn, x, step=DEFAULT_GRAD_STEP):
    """Central-difference gradient of a scalar chart function."""
    x = np.asarray(x, dtype=float)
    g = np.empty_like(x)
    for i in range(x.size):
        e = np.zeros_like(x)
        e[i] = step
        g[i] = (fn(x + e) - fn(x - e)) / (2.0 * step)
    return g


def numeric_exterior_derivative(theta_fn, x, labels, step=DEFAULT_FORM_STEP):
    """d(theta) of a 1-form given by its component vector theta_fn(x).

    omega_ij = d_i theta_j - d_j theta_i by central differences;
    antisymmetric by construction.
    """
    x = np.asarray(x, dtype=float)
    k = x.size
    jac = np.empty((k, k))
    for i in range(k):
        e = np.zeros(k)
        e[i] = step
        jac[i] = (theta_fn(x + e) - theta_fn(x - e)) / (2.0 * step)
    return TwoFormMatrix(jac - jac.T, labels)


def poisson_bracket(F, G, omega, x, step=DEFAULT_GRAD_STEP):
    """{F, G} at x from the (possibly x-dependent) symplectic form.

    omega is a TwoFormMatrix or a callable x -> TwoFormMatrix; gradients are
    numeric.  Sign convention: the AdS left charges close on
    {L_mu, L_nu} = -2 eps_{mu nu}^rho L_rho.
    """
    form = omega(x) if callable(omega) else omega
    dF = gradient(F, x, step)
    dG = gradient(G, x, step)
    return float(-dF @ form.inverse() @ dG)


# ---------------------------------------------------------------------------
# particle sector

def particle_evaluate(charge, g0, tau, side="left"):
    """Particle trajectory exp(L tau) g0 (side='left') or g0 exp(R tau)."""
    if side == "left":
        return exp_algebra(charge, float(tau)) @ g0
    if side == "right":
        return g0 @ exp_algebra(charge, float(tau))
    raise ValueError("side must be 'left' or 'right'")


def _axis_factor(vhat, reference, basis_cls):
    """exp(theta n) with n the normalized commutator of (reference, vhat).

    Satisfies exp(theta n) reference exp(-theta n) = vhat; identity when
    vhat is the reference direction.
    """
    if np.allclose(vhat.coeffs, reference.coeffs, atol=1e-14):
        return basis_cls.identity()
    nh, gamma = normalized_commutator(reference, vhat.element)
    return exp_algebra(nh, gamma)


def g_from_LR(lhat, rhat, phi, m=None):
    """SL(2,R) point with Ad_g r = l, charted by the angle phi.

        g = exp(theta_L n_L) exp(phi t0) exp(theta_R n_R),
        cosh 2theta_L = -<l t0>,  cosh 2theta_R = -<r t0>.

    phi and phi + 2pi give the same matrix (exp(t0, 2pi) = I); the chart
    lives on the covering line and is identified mod 2pi on comparison.
    The Casimir scale m is irrelevant for the group element and accepted
    only for signature symmetry.
    """
    left = _axis_factor(lhat, _T0, AdsGroupElement)
    right = _axis_factor(rhat, _T0, AdsGroupElement).inverse()
    return left @ exp_algebra(_T0, float(phi)) @ right


def h_from_LR(lhat_s, rhat_s, phi_s, m_s=None):
    """SU(2) analogue of g_from_LR with reference axis s3."""
    left = _axis_factor(lhat_s, _S3, SphereGroupElement)
    right = _axis_factor(rhat_s, _S3, SphereGroupElement).inverse()
    return left @ exp_algebra(_S3, float(phi_s)) @ right


@dataclass(frozen=True)
class _SphereChartAxes:
    """Cyclic coordinate chart (u, v) on the unit sphere with dependent w.

    axis is the dependent component index; (u, v) are the cyclically next
    two components, so the area form is du ^ dv / w in every chart.
    """

    axis: int
    sign: float

    @classmethod
    def for_vector(cls, coeffs):
        axis = int(np.argmax(np.abs(coeffs)))
        return cls(axis=axis, sign=1.0 if coeffs[axis] >= 0.0 else -1.0)

    @property
    def u_index(self):
        return (self.axis + 1) % 3

    @property
    def v_index(self):
        return (self.axis + 2) % 3

    def to_coords(self, coeffs):
        return float(coeffs[self.u_index]), float(coeffs[self.v_index])

    def from_coords(self, u, v):
        w2 = 1.0 - u * u - v * v
        if w2 <= 0.0:
            raise DegenerateConfigurationError("sphere chart coordinates left the disk")
        out = np.empty(3)
        out[self.u_index] = u
        out[self.v_index] = v
        out[self.axis] = self.sign * math.sqrt(w2)
        return out

    def w(self, u, v):
        return self.sign * math.sqrt(max(0.0, 1.0 - u * u - v * v))


def _ads_chart_coords(vhat):
    c = vhat.coeffs
    return float(c[1]), float(c[2])


def _ads_from_chart(l1, l2):
    return np.array([math.sqrt(1.0 + l1 * l1 + l2 * l2), l1, l2])


@dataclass(frozen=True)
class ParticleChartPoint:
    """Point of the reduced ten-dimensional particle phase space.

    chi is the angle conjugate to m_s surviving the mass-shell reduction
    m = sqrt(M^2 + m_s^2); the unreduced angles (phi, phi_s) are kept for
    reconstructing group elements, with chi = phi_s - phi / m.
    """

    lhat: UnitTimelikeVector
    rhat: UnitTimelikeVector
    lhat_s: UnitSphereVector
    rhat_s: UnitSphereVector
    m_s: float
    M: float
    phi: float = 0.0
    phi_s: float = 0.0

    def __post_init__(self):
        if self.m_s <= 0.0:
            raise ValidationError("sphere Casimir m_s must be positive")
        if self.M < 0.0:
            raise ValidationError("mass M must be non-negative")

    @property
    def m(self):
        return math.sqrt(self.M ** 2 + self.m_s ** 2)

    @property
    def chi(self):
        return self.phi_s - self.phi / self.m


_PARTICLE_LABELS = ("l1", "l2", "r1", "r2", "ls_u", "ls_v", "rs_u", "rs_v", "m_s", "chi")


class ParticleChart:
    """Coordinate chart and assembled symplectic form for the particle.

    Sphere orbit charts are chosen per direction vector (dependent axis =
    largest component) so the chart stays away from its coordinate
    singularity; the AdS orbit chart (l1, l2) is global on the future
    hyperboloid.
    """

    labels = _PARTICLE_LABELS

    def __init__(self, point):
        self.M = point.M
        self.ls_axes = _SphereChartAxes.for_vector(point.lhat_s.coeffs)
        self.rs_axes = _SphereChartAxes.for_vector(point.rhat_s.coeffs)
        self._x0 = self.coords(point)

    def coords(self, point):
        l1, l2 = _ads_chart_coords(point.lhat)
        r1, r2 = _ads_chart_coords(point.rhat)
        lsu, lsv = self.ls_axes.to_coords(point.lhat_s.coeffs)
        rsu, rsv = self.rs_axes.to_coords(point.rhat_s.coeffs)
        return np.array([l1, l2, r1, r2, lsu, lsv, rsu, rsv, point.m_s, point.chi])

    def point(self, x):
        """Chart vector -> ParticleChartPoint (phi gauge-fixed to zero)."""
        return ParticleChartPoint(
            lhat=UnitTimelikeVector.from_coeffs(_ads_from_chart(x[0], x[1])),
            rhat=UnitTimelikeVector.from_coeffs(_ads_from_chart(x[2], x[3])),
            lhat_s=UnitSphereVector.from_coeffs(self.ls_axes.from_coords(x[4], x[5])),
            rhat_s=UnitSphereVector.from_coeffs(self.rs_axes.from_coords(x[6], x[7])),
            m_s=float(x[8]), M=self.M, phi=0.0, phi_s=float(x[9]),
        )

    def form(self, x=None):
        """Assembled block-diagonal symplectic form at chart vector x."""
        x = self._x0 if x is None else np.asarray(x, dtype=float)
        m_s = float(x[8])
        m = math.sqrt(self.M ** 2 + m_s ** 2)
        l0 = math.sqrt(1.0 + x[0] ** 2 + x[1] ** 2)
        r0 = math.sqrt(1.0 + x[2] ** 2 + x[3] ** 2)
        w_ls = self.ls_axes.w(x[4], x[5])
        w_rs = self.rs_axes.w(x[6], x[7])
        if abs(w_ls) < 1e-8 or abs(w_rs) < 1e-8:
            raise DegenerateConfigurationError(
                "sphere chart at its coordinate singularity; rebuild the chart")
        omega = np.zeros((10, 10))
        # AdS blocks: m dl2^dl1/(2 l0) and m dr1^dr2/(2 r0)
        omega[0, 1] = -m / (2.0 * l0)
        omega[2, 3] = m / (2.0 * r0)
        # sphere blocks: mirrored orientation (su(2) structure constants)
        omega[4, 5] = m_s / (2.0 * w_ls)
        omega[6, 7] = -m_s / (2.0 * w_rs)
        # reduced (m_s, chi) pair
        omega[8, 9] = 1.0
        return TwoFormMatrix(omega - omega.T, self.labels)

    def charge_function(self, name):
        """Chart function for a charge component or Casimir.

        Names: L0..L2, R0..R2 (AdS, lower index), Ls1..Ls3, Rs1..Rs3,
        m_L (= m_R = m) and m_s.
        """
        M = self.M

        def m_of(x):
            return math.sqrt(M ** 2 + x[8] ** 2)

        if name in ("m_L", "m_R"):
            return m_of
        if name == "m_s":
            return lambda x: float(x[8])
        kind, idx = name[0], int(name[-1])
        if name.startswith("Ls"):
            axes = self.ls_axes

            def fn(x):
                return float(x[8] * axes.from_coords(x[4], x[5])[idx - 1])
        elif name.startswith("Rs"):
            axes = self.rs_axes

            def fn(x):
                return float(x[8] * axes.from_coords(x[6], x[7])[idx - 1])
        elif kind == "L":
            def fn(x):
                vec = _ads_from_chart(x[0], x[1])
                comp = -vec[0] if idx == 0 else vec[idx]
                return float(m_of(x) * comp)
        elif kind == "R":
            def fn(x):
                vec = _ads_from_chart(x[2], x[3])
                comp = -vec[0] if idx == 0 else vec[idx]
                return float(m_of(x) * comp)
        else:
            raise ValueError(f"unknown charge function {name!r}")
        return fn


def particle_symplectic(point):
    """Reduced particle symplectic form at a chart point."""
    return ParticleChart(point).form()


# ---------------------------------------------------------------------------
# string sector

@dataclass(frozen=True)
class StringChartPoint:
    """Point of the twelve-parameter string solution chart."""

    lhat: UnitTimelikeVector
    rhat: UnitTimelikeVector
    lhat_s: UnitSphereVector
    rhat_s: UnitSphereVector
    f: float
    b: float
    phi1: float = 0.0
    phi2: float = 0.0
    n: int = 1

    def __post_init__(self):
        ok = _admissible(self.f, self.b)
        if not ok:
            raise ValidationError(f"inadmissible (f, b): {ok.reason}")
        if self.n < 1 or int(self.n) != self.n:
            raise ValidationError("winding n must be a positive integer")
        if -inner(self.lhat.element, self.rhat.element) <= 1.0 + 1e-12:
            raise ValidationError("chart needs l != r (boost axis undefined)")
        if abs(inner(self.lhat_s.element, self.rhat_s.element)) >= 1.0 - 1e-12:
            raise ValidationError("chart needs l_s and r_s non-(anti)parallel")


_STRING_LABELS = ("l1", "l2", "r1", "r2", "ls_u", "ls_v", "rs_u", "rs_v",
                  "f", "b", "phi1", "phi2")


class StringChart:
    """Chart machinery for the string solution space.

    Reconstructs a full solution from the twelve coordinates, evaluates the
    presymplectic 1-form by sigma-quadrature and the symplectic form as its
    numeric exterior derivative.

    The translation gauge pins the four constant-element phases to two chart
    angles as phi1 = phi_l = -phi_r and phi2 = phi_l^s = -phi_r^s.  In this
    winding sector (m = -n, m_s = n_s) the superficially natural choice
    phi2 = +phi_r^s leaves a residual sigma-translation acting inside the
    chart (both sectors' momentum densities cancel identically), which makes
    the 1-form's derivative a rank-10 presymplectic matrix; the sign flip is
    what renders the slice transversal and the twelve-chart honestly
    symplectic.  sphere_gauge_sign=+1 reproduces the degenerate slice.
    """

    labels = _STRING_LABELS

    def __init__(self, point, tau=0.0, sigma_points=64, step=DEFAULT_FORM_STEP,
                 sphere_gauge_sign=-1.0):
        self.n = int(point.n)
        self.tau = float(tau)
        self.sigma = np.linspace(0.0, 2.0 * math.pi, int(sigma_points), endpoint=False)
        self.step = float(step)
        self.sphere_gauge_sign = float(sphere_gauge_sign)
        self.ls_axes = _SphereChartAxes.for_vector(point.lhat_s.coeffs)
        self.rs_axes = _SphereChartAxes.for_vector(point.rhat_s.coeffs)
        self._x0 = self.coords(point)

    def coords(self, point):
        l1, l2 = _ads_chart_coords(point.lhat)
        r1, r2 = _ads_chart_coords(point.rhat)
        lsu, lsv = self.ls_axes.to_coords(point.lhat_s.coeffs)
        rsu, rsv = self.rs_axes.to_coords(point.rhat_s.coeffs)
        return np.array([l1, l2, r1, r2, lsu, lsv, rsu, rsv,
                         point.f, point.b, point.phi1, point.phi2])

    def point(self, x):
        return StringChartPoint(
            lhat=UnitTimelikeVector.from_coeffs(_ads_from_chart(x[0], x[1])),
            rhat=UnitTimelikeVector.from_coeffs(_ads_from_chart(x[2], x[3])),
            lhat_s=UnitSphereVector.from_coeffs(self.ls_axes.from_coords(x[4], x[5])),
            rhat_s=UnitSphereVector.from_coeffs(self.rs_axes.from_coords(x[6], x[7])),
            f=float(x[8]), b=float(x[9]), phi1=float(x[10]), phi2=float(x[11]),
            n=self.n,
        )

    def solution(self, x):
        """Solution parameters at chart vector x.

        g0 = exp(phi1 l) exp(-(gamma+theta) n) exp(-phi1 r) and the sphere
        analogue with the gauge-sign on the right phase; theta, theta_s come
        from the invariant bridge at (f, b).
        """
        pt = self.point(x)
        fam = SimpleFamilyPoint(pt.f, pt.b, self.n)
        c2t = pt.b * pt.f - pt.b * pt.b + 1.0
        c2ts = pt.f * pt.f - pt.b * pt.f - 1.0
        theta = 0.5 * math.acosh(max(1.0, c2t))
        theta_s = 0.5 * math.acos(min(1.0, max(-1.0, c2ts)))

        nh, gamma = normalized_commutator(pt.lhat.element, pt.rhat.element)
        g0 = (exp_algebra(pt.lhat.element, pt.phi1)
              @ exp_algebra(nh, -(gamma + theta))
              @ exp_algebra(pt.rhat.element, -pt.phi1))
        nh_s, gamma_s = normalized_commutator(pt.lhat_s.element, pt.rhat_s.element)
        h0 = (exp_algebra(pt.lhat_s.element, pt.phi2)
              @ exp_algebra(nh_s, -(gamma_s + theta_s))
              @ exp_algebra(pt.rhat_s.element, self.sphere_gauge_sign * pt.phi2))
        return SolutionParams(
            lam=fam.lam, rho=fam.rho, m=fam.m, n=fam.n,
            lhat=pt.lhat, rhat=pt.rhat, g0=g0,
            lam_s=fam.lam_s, rho_s=fam.rho_s, m_s=fam.m_s, n_s=fam.n_s,
            lhat_s=pt.lhat_s, rhat_s=pt.rhat_s, h0=h0,
        )

    def _fields(self, x):
        sol = self.solution(x)
        return evaluate_matrices(sol, self.tau, self.sigma)

    def presymplectic(self, x=None):
        """Components theta_j of the presymplectic 1-form at chart vector x."""
        x = self._x0 if x is None else np.asarray(x, dtype=float)
        sol = self.solution(x)
        ads, sph = current_matrices(sol, self.tau, self.sigma)
        g, h = evaluate_matrices(sol, self.tau, self.sigma)
        ginv = np.linalg.inv(g)
        hinv = np.linalg.inv(h)
        r_g = ads.R_tau
        r_h = sph.R_tau
        out = np.empty(12)
        for j in range(12):
            e = np.zeros(12)
            e[j] = self.step
            g_p, h_p = self._fields(x + e)
            g_m, h_m = self._fields(x - e)
            dg = (g_p - g_m) / (2.0 * self.step)
            dh = (h_p - h_m) / (2.0 * self.step)
            term_g = 0.5 * np.einsum("sij,sji->s", r_g, ginv @ dg)
            term_h = -0.5 * np.einsum("sij,sji->s", r_h, hinv @ dh)
            out[j] = float(np.mean(term_g).real + np.mean(term_h).real)
        return out

    def form(self, x=None):
        """Numeric symplectic form omega = d(theta) at chart vector x."""
        x = self._x0 if x is None else np.asarray(x, dtype=float)
        return numeric_exterior_derivative(self.presymplectic, x, self.labels, self.step)

    def presymplectic_isometry(self, generator, side="left", sector="ads", x=None):
        """theta paired with an isometry vector field (momentum-map pairing).

        Left action varies g by A g (sector 'ads') or h by A h ('sphere');
        right action by g A / h A.  The pairing equals the corresponding
        charge component <L A> or <R A>.
        """
        x = self._x0 if x is None else np.asarray(x, dtype=float)
        sol = self.solution(x)
        ads, sph = current_matrices(sol, self.tau, self.sigma)
        g, h = evaluate_matrices(sol, self.tau, self.sigma)
        a = generator.matrix
        if sector == "ads":
            delta = np.linalg.inv(g) @ (a @ g) if side == "left" else \
                np.broadcast_to(a, g.shape)
            vals = 0.5 * np.einsum("sij,sji->s", ads.R_tau, delta)
        elif sector == "sphere":
            delta = np.linalg.inv(h) @ (a @ h) if side == "left" else \
                np.broadcast_to(a, h.shape)
            vals = -0.5 * np.einsum("sij,sji->s", sph.R_tau, delta)
        else:
            raise ValueError("sector must be 'ads' or 'sphere'")
        return float(np.mean(vals).real)

    def charge_function(self, name):
        """Chart function for charge components and invariant coefficients.

        Names as in ParticleChart plus m_L, m_R, m_L_s, m_R_s for the four
        (signed) orbit coefficients lam + rho cosh2theta etc.
        """
        n = self.n

        def fam_coeffs(x):
            f, b = float(x[8]), float(x[9])
            e = math.sqrt(max(0.0, f * f - 1.0))
            a = math.sqrt(max(0.0, b * b - 1.0))
            lam, rho = 0.5 * n * (e + f), 0.5 * n * (e - f)
            lam_s, rho_s = 0.5 * n * (a + b), 0.5 * n * (b - a)
            c2t = b * f - b * b + 1.0
            c2ts = f * f - b * f - 1.0
            return (lam + rho * c2t, lam * c2t + rho,
                    lam_s + rho_s * c2ts, lam_s * c2ts + rho_s)

        coeff_index = {"m_L": 0, "m_R": 1, "m_L_s": 2, "m_R_s": 3}
        if name in coeff_index:
            k = coeff_index[name]
            return lambda x: float(fam_coeffs(x)[k])
        kind, idx = name[0], int(name[-1])
        if name.startswith("Ls"):
            axes = self.ls_axes

            def fn(x):
                return float(fam_coeffs(x)[2] * axes.from_coords(x[4], x[5])[idx - 1])
        elif name.startswith("Rs"):
            axes = self.rs_axes

            def fn(x):
                return float(fam_coeffs(x)[3] * axes.from_coords(x[6], x[7])[idx - 1])
        elif kind == "L":
            def fn(x):
                vec = _ads_from_chart(x[0], x[1])
                comp = -vec[0] if idx == 0 else vec[idx]
                return float(fam_coeffs(x)[0] * comp)
        elif kind == "R":
            def fn(x):
                vec = _ads_from_chart(x[2], x[3])
                comp = -vec[0] if idx == 0 else vec[idx]
                return float(fam_coeffs(x)[1] * comp)
        else:
            raise ValueError(f"unknown charge function {name!r}")
        return fn

    def orbit_block_coefficients(self, form=None):
        """Signed orbit coefficients (m_L, m_R, m_L_s, m_R_s) read off a form."""
        form = self.form() if form is None else form
        x = self._x0
        l0 = math.sqrt(1.0 + x[0] ** 2 + x[1] ** 2)
        r0 = math.sqrt(1.0 + x[2] ** 2 + x[3] ** 2)
        w_ls = self.ls_axes.w(x[4], x[5])
        w_rs = self.rs_axes.w(x[6], x[7])
        return (
            -2.0 * l0 * form.entry("l1", "l2"),
            2.0 * r0 * form.entry("r1", "r2"),
            2.0 * w_ls * form.entry("ls_u", "ls_v"),
            -2.0 * w_rs * form.entry("rs_u", "rs_v"),
        )


_EPS_LOWER = np.zeros((3, 3, 3))
for _perm, _sgn in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
                    ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1)):
    _EPS_LOWER[_perm] = _sgn
_ETA_DIAG = np.array([-1.0, 1.0, 1.0])
_EPS_MIXED = np.einsum("mns,s->mns", _EPS_LOWER, _ETA_DIAG)  # eps_{mn}^rho


def expected_bracket(name_a, name_b, values):
    """Target value of {A, B} for charge components and Casimir functions.

        {L_mu, L_nu} = -2 eps_{mu nu}^rho L_rho   {R_mu, R_nu} = +2 eps_{mu nu}^rho R_rho
        {Ls_m, Ls_n} = +2 eps_{mnl} Ls_l          {Rs_m, Rs_n} = -2 eps_{mnl} Rs_l

    with everything else (cross-sector, left-right, Casimirs) zero.  values
    maps component names to their numbers at the evaluation point.
    """
    def split(name):
        for fam in ("Ls", "Rs", "L", "R"):
            if name.startswith(fam) and name[len(fam):].isdigit():
                return fam, int(name[len(fam):])
        return name, None

    fam_a, i = split(name_a)
    fam_b, j = split(name_b)
    if fam_a != fam_b or i is None or j is None:
        return 0.0
    if fam_a == "L":
        return float(-2.0 * sum(_EPS_MIXED[i, j, r] * values[f"L{r}"] for r in range(3)))
    if fam_a == "R":
        return float(2.0 * sum(_EPS_MIXED[i, j, r] * values[f"R{r}"] for r in range(3)))
    if fam_a == "Ls":
        return float(2.0 * sum(_EPS_LOWER[i - 1, j - 1, l] * values[f"Ls{l + 1}"]
                               for l in range(3)))
    return float(-2.0 * sum(_EPS_LOWER[i - 1, j - 1, l] * values[f"Rs{l + 1}"]
                            for l in range(3)))


def string_presymplectic(point, direction, tau=0.0, sigma_points=64,
                         step=DEFAULT_FORM_STEP):
    """Pairing of the string presymplectic 1-form with a chart direction."""
    chart = StringChart(point, tau=tau, sigma_points=sigma_points, step=step)
    direction = np.asarray(direction, dtype=float)
    if direction.shape != (12,):
        raise ValidationError("direction must be a 12-component chart vector")
    return float(chart.presymplectic() @ direction)


def string_symplectic(point, tau=0.0, sigma_points=64, step=DEFAULT_FORM_STEP):
    """Numeric string symplectic form on the twelve-parameter chart."""
    return StringChart(point, tau=tau, sigma_points=sigma_points, step=step).form()
