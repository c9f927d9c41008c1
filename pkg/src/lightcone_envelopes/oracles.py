"""Cross-verification suites: each closed form against an independent
route (witness search, constrained extremization, sampling oracle, or
exact identity), reported with max deviations.

These are the dual-route checks behind the library's correctness story;
the command-line ``oracle`` subcommand and the acceptance tests both call
them with pinned parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .continuation import Contour, cauchy_continue, max_principle_check
from .envelopes import envelope_mu_cone, envelope_shell_complement, shell_boundary_curves
from .minkowski import ComplexPoint2, RealPoint2, hat_dual, mink_dot
from .regions import (
    DoubleCone,
    SpacelikeComplementOfDoubleCone,
    SpacelikeSet,
    boundary_distance,
    contains,
    pflug_growth,
    sample_interior,
)
from .spectral import ShellBand, SpectrumHypothesis, massgap_contradiction
from .transforms import check_phi_properties, mink_square_array, phi_array


@dataclass
class OracleReport:
    suite: str
    passed: bool
    n: int
    seed: int
    max_dev: float
    violations: int
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": bool(self.passed),
            "n": int(self.n),
            "seed": int(self.seed),
            "max_dev": float(self.max_dev),
            "violations": int(self.violations),
            "details": _jsonable(self.details),
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    return obj


# ---------------------------------------------------------------------------
# inversion properties
# ---------------------------------------------------------------------------


def inversion_suite(n: int = 100000, seed: int = 0) -> OracleReport:
    """Involution and set-mapping properties of the reciprocal-radii map."""
    rep = check_phi_properties(n, seed)
    viol = (
        rep.tube_violations
        + rep.cone_violations
        + rep.spacelike_violations
        + rep.diamond_violations
    )
    return OracleReport(
        suite="inversion",
        passed=rep.passed,
        n=n,
        seed=seed,
        max_dev=rep.involution_dev,
        violations=viol,
        details={
            "tube_violations": rep.tube_violations,
            "cone_violations": rep.cone_violations,
            "spacelike_violations": rep.spacelike_violations,
            "diamond_violations": rep.diamond_violations,
            "skipped_singular": rep.n_skipped_singular,
        },
    )


# ---------------------------------------------------------------------------
# mass-gap cone closed form vs. plane-witness bisection
# ---------------------------------------------------------------------------


def _plane_margins_vectorized(
    x: np.ndarray, y: np.ndarray, mu: float, iters: int = 80
) -> np.ndarray:
    """For spacelike rows of y, bisect the boost angle of the backward
    normal orthogonal to y and return a.x + mu (>= 0 means an admissible
    plane passes through x + iy)."""

    def ady(psi):
        return -(y[:, 0] * np.cosh(psi) - y[:, 1] * np.sinh(psi))

    lo = np.full(len(x), -6.0)
    hi = np.full(len(x), 6.0)
    flo = ady(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = ady(mid)
        same = np.sign(fm) == np.sign(flo)
        lo = np.where(same, mid, lo)
        flo = np.where(same, fm, flo)
        hi = np.where(same, hi, mid)
    psi = 0.5 * (lo + hi)
    return -(x[:, 0] * np.cosh(psi) - x[:, 1] * np.sinh(psi)) + mu


def mu_cone_plane_agreement(
    n: int = 1000, seed: int = 7, mu: float = 1.0, band: float = 1e-3
) -> OracleReport:
    """Cone envelope closed form vs. the admissible-plane witness search.

    Disagreements are tolerated only inside the |x.yhat - mu| < band strip
    around the decision surface; agreement must reach 99.9%.
    """
    rng = np.random.default_rng(seed)
    x = rng.uniform(-3, 3, size=(n, 2))
    a = rng.uniform(-4.5, 4.5, size=n)
    r = rng.uniform(0.1, 3.0, size=n)
    side = np.where(rng.uniform(size=n) < 0.5, 1.0, -1.0)
    y = np.column_stack([r * np.sinh(a), side * r * np.cosh(a)])

    search_margin = _plane_margins_vectorized(x, y, mu)
    search_excluded = search_margin >= 0.0

    disagreements = 0
    out_of_band = 0
    max_band_dev = 0.0
    for i in range(n):
        z = ComplexPoint2.from_parts(
            RealPoint2(x[i, 0], x[i, 1]), RealPoint2(y[i, 0], y[i, 1])
        )
        closed = envelope_mu_cone(z, mu)
        closed_excluded = not closed.is_inside
        if closed_excluded != bool(search_excluded[i]):
            disagreements += 1
            yh = hat_dual(RealPoint2(y[i, 0], y[i, 1]))
            gap = abs(mink_dot(RealPoint2(x[i, 0], x[i, 1]), yh) - mu)
            max_band_dev = max(max_band_dev, gap)
            if gap >= band:
                out_of_band += 1
    agree = 1.0 - disagreements / n
    return OracleReport(
        suite="mu-cone-planes",
        passed=(agree >= 0.999 and out_of_band == 0),
        n=n,
        seed=seed,
        max_dev=max_band_dev,
        violations=out_of_band,
        details={"agreement": agree, "disagreements": disagreements, "mu": mu},
    )


# ---------------------------------------------------------------------------
# shell boundary curves vs. constrained extremization over the full box
# ---------------------------------------------------------------------------


def _zoom_extremize(
    x1: np.ndarray,
    yh_t: np.ndarray,
    yh_x: np.ndarray,
    ysq: np.ndarray,
    m1: float,
    m2: float,
    branch: str,
    levels: int = 16,
    gridsize: int = 33,
) -> np.ndarray:
    """Extremize the excluded-boundary height over the admissible
    (alpha, lambda) box by vectorized window refinement.

    No monotonicity of the height in the parameters is assumed; the full
    2-d box (alpha >= 0, lambda >= max(m2-alpha, alpha-m1)) is scanned and
    the window zooms onto the running extremum, keeping the best feasible
    value ever seen.
    """
    n = len(x1)
    span = m2 + np.abs(x1) + 6.0
    ca = 0.5 * span
    cl = 0.5 * span
    ha = 0.5 * span
    hl = 0.5 * span
    off = np.linspace(-1.0, 1.0, gridsize)
    oa, ol = np.meshgrid(off, off, indexing="ij")
    oa = oa.ravel()[None, :]
    ol = ol.ravel()[None, :]
    minimize = branch == "upper"
    best = np.full(n, np.inf if minimize else -np.inf)

    for _ in range(levels):
        alpha = np.clip(ca[:, None] + ha[:, None] * oa, 0.0, None)
        lam = np.clip(cl[:, None] + hl[:, None] * ol, 1e-12, None)
        lb = np.maximum(m2 - alpha, alpha - m1)
        feas = lam >= lb
        u = np.sqrt(np.maximum(lam * lam + ysq[:, None], 0.0))
        if minimize:
            vals = yh_t[:, None] * u + np.sqrt(
                alpha * alpha + (x1[:, None] - yh_x[:, None] * u) ** 2
            )
            vals = np.where(feas, vals, np.inf)
            k = np.argmin(vals, axis=1)
            best = np.minimum(best, vals[np.arange(n), k])
        else:
            vals = -yh_t[:, None] * u + np.sqrt(
                alpha * alpha + (x1[:, None] + yh_x[:, None] * u) ** 2
            )
            vals = np.where(feas, vals, -np.inf)
            k = np.argmax(vals, axis=1)
            best = np.maximum(best, vals[np.arange(n), k])
        ca = np.clip(ca + ha * oa[0, k], 0.0, None)
        cl = cl + hl * ol[0, k]
        shrink = 8.0 / (gridsize - 1)
        ha = ha * shrink
        hl = hl * shrink
    return best


def shell_boundary_vs_minimization(
    grid_n: int = 50,
    m1: float = 1.0,
    m2: float = 3.0,
    x1_range: tuple[float, float] = (-3.0, 3.0),
    y1_range: tuple[float, float] = (0.1, 0.95),
    y_ratio: float = 0.3,
    chunk: int = 500,
) -> OracleReport:
    """Closed-form shell boundary curves vs. the extremization oracle.

    Grid over (x1, y1) with y0 = y_ratio*y1 (so the dual vector has a
    nonzero space component and both boundary formulas are exercised in
    full).  The oracle extremizes the explicit excluded-boundary height
    over the entire admissible box.
    """
    x1s = np.linspace(*x1_range, grid_n)
    y1s = np.linspace(*y1_range, grid_n)
    X1, Y1 = np.meshgrid(x1s, y1s, indexing="ij")
    x1 = X1.ravel()
    y1 = Y1.ravel()
    y0 = y_ratio * y1
    ysq = y0 * y0 - y1 * y1
    s = np.sqrt(-ysq)
    yh_t = np.sign(y1) * y1 / s
    yh_x = np.sign(y1) * y0 / s

    f_plus = np.empty_like(x1)
    f_minus = np.empty_like(x1)
    for i in range(len(x1)):
        fm, fp = shell_boundary_curves(
            float(x1[i]), RealPoint2(float(y0[i]), float(y1[i])), m1, m2
        )
        f_plus[i] = fp
        f_minus[i] = fm

    dev = 0.0
    for lo in range(0, len(x1), chunk):
        sl = slice(lo, lo + chunk)
        up = _zoom_extremize(x1[sl], yh_t[sl], yh_x[sl], ysq[sl], m1, m2, "upper")
        dn = _zoom_extremize(x1[sl], yh_t[sl], yh_x[sl], ysq[sl], m1, m2, "lower")
        dev = max(
            dev,
            float(np.max(np.abs(up - f_plus[sl]))),
            float(np.max(np.abs(dn - f_minus[sl]))),
        )
    return OracleReport(
        suite="shell-boundary",
        passed=dev <= 1e-6,
        n=grid_n * grid_n,
        seed=0,
        max_dev=dev,
        violations=0 if dev <= 1e-6 else 1,
        details={"m1": m1, "m2": m2, "grid": grid_n, "y_ratio": y_ratio},
    )


# ---------------------------------------------------------------------------
# shell-complement consistency (real trace, cone compatibility, transform)
# ---------------------------------------------------------------------------


def shell_complement_consistency(
    m: float = 1.0, grid_n: int = 200, n: int = 10000, seed: int = 3
) -> OracleReport:
    """Three consistency checks for the z^2-segment envelope predicate.

    (a) the real trace equals {x^2 > m^2} union {x^2 < 0} up to tolerance
    on a grid; (b) points certified by the cone closed form (same mass) or
    lying in the complex thickening of the spacelike set stay inside; (c)
    equivalence with the inverted criterion w^2 real >= 1/m^2 under the
    reciprocal-radii map.
    """
    tol = 1e-9
    viol_a = 0
    xs = np.linspace(-3, 3, grid_n)
    for t in xs:
        for x in xs:
            s = t * t - x * x
            if abs(s) <= tol or abs(s - m * m) <= tol:
                continue
            want_inside = (s > m * m) or (s < 0)
            got = envelope_shell_complement(
                ComplexPoint2(complex(t), complex(x)), m
            ).is_inside
            if got != want_inside:
                viol_a += 1

    rng = np.random.default_rng(seed)
    viol_b = 0
    tested_b = 0
    # cone-certified points
    x = rng.uniform(-4, 4, size=(n, 2))
    y = rng.uniform(-2, 2, size=(n, 2))
    for i in range(n):
        z = ComplexPoint2.from_parts(
            RealPoint2(x[i, 0], x[i, 1]), RealPoint2(y[i, 0], y[i, 1])
        )
        if envelope_mu_cone(z, m).is_inside:
            tested_b += 1
            if not envelope_shell_complement(z, m).is_inside:
                viol_b += 1
    # thickened spacelike points
    spacelike = SpacelikeSet()
    k = 0
    tries = 0
    while k < n // 4 and tries < 20 * n:
        tries += 1
        p = RealPoint2(float(rng.uniform(-4, 4)), float(rng.uniform(-4, 4)))
        if not contains(spacelike, p):
            continue
        d = boundary_distance(spacelike, p)
        ang = float(rng.uniform(0, 2 * math.pi))
        rad = 0.45 * d / 32.0
        yv = RealPoint2(rad * math.cos(ang), rad * math.sin(ang))
        z = ComplexPoint2.from_parts(p, yv)
        tested_b += 1
        k += 1
        if not envelope_shell_complement(z, m).is_inside:
            viol_b += 1

    # transform equivalence on a mixture of generic and excluded points
    zre = rng.normal(0, 2, size=(n, 2))
    zim = rng.normal(0, 2, size=(n, 2))
    z = zre + 1j * zim
    half = n // 2
    rho = rng.uniform(0, m * m, size=half)
    th = rng.uniform(-2, 2, size=half)
    sgn = np.where(rng.uniform(size=half) < 0.5, 1.0, -1.0)
    real_excluded = np.column_stack(
        [sgn * np.sqrt(rho) * np.cosh(th), sgn * np.sqrt(rho) * np.sinh(th)]
    )
    z[:half] = real_excluded.astype(complex)
    s = mink_square_array(z)
    keep = (np.abs(s) > 1e-6) & (np.abs(s - m * m) > 1e-6)
    zk = z[keep]
    wsq = mink_square_array(phi_array(zk))
    crit_w = (np.abs(wsq.imag) <= 1e-9) & (wsq.real >= 1.0 / (m * m) - 1e-9)
    viol_c = 0
    for i in range(len(zk)):
        zi = ComplexPoint2(complex(zk[i, 0]), complex(zk[i, 1]))
        inside = envelope_shell_complement(zi, m).is_inside
        if inside != (not bool(crit_w[i])):
            viol_c += 1

    total = viol_a + viol_b + viol_c
    return OracleReport(
        suite="shell-complement",
        passed=total == 0,
        n=grid_n * grid_n + tested_b + int(keep.sum()),
        seed=seed,
        max_dev=0.0,
        violations=total,
        details={
            "real_trace_violations": viol_a,
            "cone_compatibility_violations": viol_b,
            "cone_compatibility_tested": tested_b,
            "transform_violations": viol_c,
            "m": m,
        },
    )


# ---------------------------------------------------------------------------
# growth-scale sandwich
# ---------------------------------------------------------------------------


def pflug_suite(n: int = 10000, seed: int = 5) -> OracleReport:
    """delta^2 <= delta_tilde <= delta with slack >= -1e-12."""
    rng = np.random.default_rng(seed)
    zdist = rng.uniform(1e-3, 10.0, size=n)
    znorm = rng.uniform(0.0, 10.0, size=n)
    worst = 0.0
    viol = 0
    for d, nm in zip(zdist, znorm):
        g = pflug_growth(float(d), float(nm))
        s1 = g.delta_tilde - g.delta * g.delta
        s2 = g.delta - g.delta_tilde
        worst = min(worst, s1, s2)
        if s1 < -1e-12 or s2 < -1e-12:
            viol += 1
    return OracleReport(
        suite="pflug",
        passed=viol == 0,
        n=n,
        seed=seed,
        max_dev=-worst,
        violations=viol,
        details={},
    )


# ---------------------------------------------------------------------------
# spacelike complement closed form vs. sampling oracle
# ---------------------------------------------------------------------------


def spacelike_complement_oracle(
    n: int = 10000,
    seed: int = 11,
    interior_samples: int = 1000,
    a: RealPoint2 = RealPoint2(0.0, 0.0),
    b: RealPoint2 = RealPoint2(1.0, 0.2),
) -> OracleReport:
    """Closed-form complement membership vs. "spacelike to every sampled
    interior point of the diamond".

    Interior samples are edge-refined so that the thin witness strips next
    to the lightlike faces are populated; disagreements are tolerated only
    within the causal-classification tolerance of the boundary.
    """
    dc = DoubleCone(a, b)
    comp = SpacelikeComplementOfDoubleCone(a, b)
    ys = sample_interior(dc, interior_samples, seed=seed, edge_refined=True)
    rng = np.random.default_rng(seed + 1)
    span = max((b - a).norm(), 1.0)
    lo_t, hi_t = a.t - 1.5 * span, b.t + 1.5 * span
    lo_x = min(a.x, b.x) - 2.0 * span
    hi_x = max(a.x, b.x) + 2.0 * span
    ps = np.column_stack(
        [rng.uniform(lo_t, hi_t, size=n), rng.uniform(lo_x, hi_x, size=n)]
    )

    dt = ps[:, None, 0] - ys[None, :, 0]
    dx = ps[:, None, 1] - ys[None, :, 1]
    sq = dt * dt - dx * dx
    oracle_in = np.all(sq < 0, axis=1)

    viol = 0
    worst = 0.0
    for i in range(n):
        p = RealPoint2(float(ps[i, 0]), float(ps[i, 1]))
        closed = contains(comp, p)
        if closed != bool(oracle_in[i]):
            d = boundary_distance(comp, p)
            worst = max(worst, d)
            if d > 1e-9:
                viol += 1
    return OracleReport(
        suite="spacelike-complement",
        passed=viol == 0,
        n=n,
        seed=seed,
        max_dev=worst,
        violations=viol,
        details={"interior_samples": interior_samples},
    )


# ---------------------------------------------------------------------------
# Cauchy-kernel quadrature
# ---------------------------------------------------------------------------

_CAUCHY_POLES = (5.0 + 0.0j, 1.06 + 0.0j, -1.07 + 0.0j, 1.3j)
_CAUCHY_TARGETS = (0.2 + 0.0j, -0.3 + 0.1j, 0.5j)


def cauchy_suite(nodes: int = 256) -> OracleReport:
    """Rational reproduction on the unit circle plus the node-doubling
    convergence floor (>= 4x error reduction)."""

    def max_err(n: int) -> float:
        w = Contour.ellipse(0.0, 1.0, 1.0, n)
        worst = 0.0
        for p0 in _CAUCHY_POLES:
            f = 1.0 / (w.nodes - p0)
            for tgt in _CAUCHY_TARGETS:
                val, _ = cauchy_continue(f, w, tgt)
                worst = max(worst, abs(val - 1.0 / (tgt - p0)))
        # constant and identity sanity
        for tgt in _CAUCHY_TARGETS:
            val, _ = cauchy_continue(np.full(n, 2.5 + 1j), w, tgt)
            worst = max(worst, abs(val - (2.5 + 1j)))
            val, _ = cauchy_continue(w.nodes.copy(), w, tgt)
            worst = max(worst, abs(val - tgt))
        return worst

    e1 = max_err(nodes)
    e2 = max_err(2 * nodes)
    passed = e1 <= 1e-6 and e2 <= e1 / 4.0
    return OracleReport(
        suite="cauchy",
        passed=passed,
        n=nodes,
        seed=0,
        max_dev=e1,
        violations=0 if passed else 1,
        details={"err_nodes": e1, "err_doubled": e2, "reduction": e1 / max(e2, 1e-300)},
    )


# ---------------------------------------------------------------------------
# maximum principle on analytic disc patches
# ---------------------------------------------------------------------------


def _random_polynomial(rng: np.random.Generator):
    deg = int(rng.integers(1, 6))
    coeffs = rng.normal(0, 1, size=(deg + 1, deg + 1))

    def f(z: ComplexPoint2) -> complex:
        total = 0.0 + 0.0j
        for i in range(deg + 1):
            for j in range(deg + 1 - i):
                total += coeffs[i, j] * z.t**i * z.x**j
        return total

    return f


def _random_patch(rng: np.random.Generator):
    base = rng.normal(0, 1, size=2) + 1j * rng.normal(0, 0.3, size=2)
    vel = rng.normal(0, 1, size=2)
    vel = vel / max(np.linalg.norm(vel), 0.3)
    curv = 0.2 * rng.normal(0, 1, size=2)
    delta = float(rng.uniform(0.05, 0.3))

    def surface(lam: complex) -> ComplexPoint2:
        zt = base[0] + vel[0] * lam + curv[0] * lam * lam
        zx = base[1] + vel[1] * lam + curv[1] * lam * lam
        return ComplexPoint2(zt, zx)

    return surface, delta


def max_principle_suite(
    nfuncs: int = 50, npatches: int = 20, seed: int = 13, include_control: bool = True
) -> OracleReport:
    """Interior modulus supremum vs. boundary supremum for random
    holomorphic integrands on random analytic disc patches.

    A non-holomorphic control (Re z0) is run alongside and reported, not
    counted: the principle genuinely requires holomorphy.
    """
    rng = np.random.default_rng(seed)
    patches = [_random_patch(rng) for _ in range(npatches)]
    funcs = [_random_polynomial(rng) for _ in range(nfuncs)]
    viol = 0
    worst = 0.0
    for f in funcs:
        for surface, delta in patches:
            rep = max_principle_check(surface, f, delta)
            worst = max(worst, rep.interior_sup - rep.boundary_sup)
            if not rep.passed:
                viol += 1
    control_failed = None
    if include_control:
        surface, delta = patches[0]
        center = surface(0.5 + 0.0j)

        def bump(z: ComplexPoint2) -> complex:
            return math.exp(-abs(z.t - center.t) ** 2 - abs(z.x - center.x) ** 2)

        rep = max_principle_check(surface, bump, delta)
        control_failed = not rep.passed
    return OracleReport(
        suite="max-principle",
        passed=viol == 0,
        n=nfuncs * npatches,
        seed=seed,
        max_dev=worst,
        violations=viol,
        details={"control_violated_as_expected": control_failed},
    )


# ---------------------------------------------------------------------------
# mass-gap detector
# ---------------------------------------------------------------------------


def massgap_suite(seed: int = 17, trials: int = 20) -> OracleReport:
    """Detector sanity: closed-form match of the witness square, the
    unbounded-band refusal, and witness existence for random bands."""
    s = RealPoint2(1.0, 0.0)
    res = massgap_contradiction(SpectrumHypothesis(ShellBand(1.0, 2.0), s))
    dev = abs(res.q_square - (5.0 - 4.0 * math.cosh(res.theta)))
    ok = res.witness is not None and res.q_square < 0 and dev <= 1e-9

    inf_res = massgap_contradiction(
        SpectrumHypothesis(ShellBand(1.0, math.inf), s)
    )
    ok = ok and inf_res.witness is None

    rng = np.random.default_rng(seed)
    viol = 0
    for _ in range(trials):
        m = float(rng.uniform(0.1, 10.0))
        m1 = float(rng.uniform(m, 10.0))
        r = massgap_contradiction(SpectrumHypothesis(ShellBand(m, m1), s))
        if r.witness is None or not (r.q_square < 0 and abs(r.theta) <= 10.0):
            viol += 1
        else:
            dev = max(
                dev, abs(r.q_square - m * m * (5.0 - 4.0 * math.cosh(r.theta)))
            )
    return OracleReport(
        suite="massgap",
        passed=ok and viol == 0,
        n=trials,
        seed=seed,
        max_dev=dev,
        violations=viol,
        details={"unbounded_band_refused": inf_res.witness is None},
    )


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

SUITES = {
    "inversion": inversion_suite,
    "mu-cone-planes": mu_cone_plane_agreement,
    "shell-boundary": shell_boundary_vs_minimization,
    "shell-complement": shell_complement_consistency,
    "pflug": pflug_suite,
    "spacelike-complement": spacelike_complement_oracle,
    "cauchy": cauchy_suite,
    "max-principle": max_principle_suite,
    "massgap": massgap_suite,
}


def run_suite(name: str, **kwargs) -> OracleReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kwargs)
