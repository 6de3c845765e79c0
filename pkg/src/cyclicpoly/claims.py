"""Registry of quantitative statements about random cyclic polygons, each
bound to a Monte Carlo (or quadrature, or identity) check.

Acceptance rules by kind:

* ``moment`` / ``correlation``: ``|estimate - target| <= 4 stderr``.
* ``density_1d``: Kolmogorov-Smirnov at ``alpha = 0.01``.
* ``density_2d`` / ``density_3d``: Pearson chi-square at ``alpha = 0.01``;
  claims bundling several tests split alpha evenly (Bonferroni) and report
  the worst sub-test.
* ``identity``: largest absolute defect over all samples ``<= 1e-9``.

Samples are generated in fixed-size blocks; block ``i`` of an ``n``-gon
experiment always draws from ``RngStream(seed, i, channel=n)``. Results
therefore depend on ``seed`` only; ``workers`` changes wall time, not
numbers. "Arbitrary" sides and angles are read after a uniformly random
cyclic relabelling of each polygon, drawn from the same block stream.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import analytic as an
from .geometry import (
    BatchMeasurements,
    RngStream,
    angles_from_sides,
    measure_batch,
    relabel,
    sample_theta,
    third_side_triangle,
)
from .montecarlo import (
    HistogramND,
    MomentAccumulator,
    bin_masses,
    chi_square_independence,
    chi_square_uniformity,
    estimate_correlation,
    estimate_joint_excess,
    ks_test,
)

__all__ = [
    "Claim",
    "ClaimResult",
    "UnknownClaimError",
    "InsufficientSamplesError",
    "list_claims",
    "get_claim",
    "run_claim",
    "run_all",
    "sample_polygons",
]

PI = math.pi
ALPHA = 0.01
Z_BAND = 4.0
IDENTITY_TOL = 1e-9
BLOCK = 1 << 16

MIN_SAMPLES = {
    "moment": 100,
    "correlation": 100,
    "density_1d": 100,
    "density_2d": 10_000,
    "density_3d": 100_000,
    "identity": 1,
}


class UnknownClaimError(KeyError):
    pass


class InsufficientSamplesError(ValueError):
    pass


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    paper_location: str
    kind: str
    conjecture: bool
    default_samples: int
    check: Callable = field(repr=False, compare=False)


@dataclass
class ClaimResult:
    claim_id: str
    description: str
    paper_location: str
    conjecture: bool
    kind: str
    analytic: float | None
    estimate: float | None
    stderr: float | None
    statistic: float | None
    passed: bool
    n_samples: int
    seed: int
    workers: int
    elapsed_seconds: float | None
    error: str | None = None
    details: dict = field(default_factory=dict)

    JSON_FIELDS = (
        "claim_id", "description", "paper_location", "conjecture", "kind", "analytic",
        "estimate", "stderr", "statistic", "pass", "n_samples", "seed", "workers",
        "elapsed_seconds",
    )

    def to_dict(self) -> dict:
        """JSON record; ``error`` is added only for claims that could not run."""
        d = asdict(self)
        d["pass"] = d.pop("passed")
        out = {k: d[k] for k in self.JSON_FIELDS}
        if self.error is not None:
            out["error"] = self.error
        return out


# -- sampling -----------------------------------------------------------------


def _collect(n_gon: int, n_samples: int, seed: int, workers: int, fn: Callable) -> list:
    """Run ``fn(measurements, generator)`` over all sample blocks, in block order."""
    sizes = [BLOCK] * (n_samples // BLOCK)
    if n_samples % BLOCK:
        sizes.append(n_samples % BLOCK)

    def work(i: int):
        gen = RngStream(seed, i, channel=n_gon).generator()
        return fn(measure_batch(sample_theta(n_gon, sizes[i], gen)), gen)

    if workers <= 1 or len(sizes) == 1:
        return [work(i) for i in range(len(sizes))]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(work, range(len(sizes))))


def sample_polygons(n_gon: int, n_samples: int, seed: int = 0, workers: int = 1) -> BatchMeasurements:
    """Measurements of ``n_samples`` polygons drawn with the claims' block streams."""
    if n_samples < 1:
        raise InsufficientSamplesError("need at least one polygon")
    theta = _concat(_collect(n_gon, n_samples, seed, workers, lambda m, g: m.theta))
    return measure_batch(theta)


def _concat(parts) -> np.ndarray:
    return np.concatenate(parts, axis=0)


def _merge_acc(parts) -> MomentAccumulator:
    acc = MomentAccumulator()
    for p in parts:
        acc.merge(p)
    return acc


def _rotated(m: BatchMeasurements, gen: np.random.Generator):
    shift = gen.integers(0, m.n, size=m.angles.shape[0])
    return relabel(m.angles, shift), relabel(m.gaps, shift), relabel(m.sides, shift)


def _adjacent_pair(m: BatchMeasurements, gen, lag: int = 1, flip: bool = False) -> np.ndarray:
    angles, _, _ = _rotated(m, gen)
    pair = np.stack([angles[:, 0], angles[:, lag]], axis=1)
    if flip:
        swap = gen.random(pair.shape[0]) < 0.5
        pair[swap] = pair[swap][:, ::-1]
    return pair


def _quad_triple(m: BatchMeasurements, gen) -> np.ndarray:
    """(α, β, ω): two adjacent angles and the diagonal angle facing the sides
    that flank them, after a random relabelling."""
    angles, g, _ = _rotated(m, gen)
    return np.stack([angles[:, 1], angles[:, 2], 0.5 * (g[:, 0] + g[:, 2])], axis=1)


# -- verdict helpers ----------------------------------------------------------


def _z_verdict(target: float, est: float, se: float, **details) -> dict:
    z = (est - target) / se if se > 0 else (0.0 if est == target else math.inf)
    return dict(
        analytic=target, estimate=est, stderr=se, statistic=z,
        passed=abs(est - target) <= Z_BAND * se, details=details,
    )


def _moment(n_gon: int, per_polygon: Callable, target_id: str):
    def check(n, seed, workers):
        parts = _collect(n_gon, n, seed, workers, lambda m, g: MomentAccumulator().update(per_polygon(m)))
        acc = _merge_acc(parts)
        return _z_verdict(an.closed_form_moment(target_id), acc.mean, acc.stderr)

    return check


def _correlation(n_gon: int, lag: int, target: float, flip: bool = False):
    def check(n, seed, workers):
        pairs = _concat(_collect(n_gon, n, seed, workers, lambda m, g: _adjacent_pair(m, g, lag, flip)))
        r, se = estimate_correlation(pairs, method="delta")
        return _z_verdict(target, r, se, stderr_normal_theory=(1 - r * r) / math.sqrt(len(pairs)))

    return check


def _ks(n_gon: int, values: Callable, density: str):
    def check(n, seed, workers):
        x = _concat(_collect(n_gon, n, seed, workers, values))
        rep = ks_test(x, an.get_density(density).cdf, ALPHA)
        from scipy import stats

        p = float(stats.kstwobign.sf(rep.d_statistic * math.sqrt(rep.n)))
        return dict(
            analytic=rep.threshold_at_alpha, estimate=p, stderr=None,
            statistic=rep.d_statistic, passed=rep.passed, details={"density": density},
        )

    return check


def _chi_verdict(reports: dict, extra_ok: bool = True, **details) -> dict:
    worst = min(reports, key=lambda k: reports[k].p_value)
    rep = reports[worst]
    return dict(
        analytic=rep.threshold, estimate=rep.p_value, stderr=None, statistic=rep.statistic,
        passed=extra_ok and all(r.passed for r in reports.values()),
        details={
            "worst_subtest": worst,
            "subtests": {k: {"chi2": r.statistic, "dof": r.dof, "critical": r.threshold} for k, r in reports.items()},
            **details,
        },
    )


def _hist_parts(n_gon, n, seed, workers, sample_fn, bounds, bins):
    def fn(m, g):
        h = HistogramND.uniform(bounds, bins)
        return h.fill(sample_fn(m, g))

    parts = _collect(n_gon, n, seed, workers, fn)
    h = parts[0]
    for p in parts[1:]:
        h.merge(p)
    return h


# -- individual claims --------------------------------------------------------


def _side_adj_corr(n, seed, workers):
    exact = an.closed_form_moment("SIDE_ADJ_CORR")

    def pairs(m, g):
        _, _, sides = _rotated(m, g)
        return np.stack([sides[:, 0], sides[:, 1]], axis=1)

    p = _concat(_collect(4, n, seed, workers, pairs))
    r, se = estimate_correlation(p, method="delta")
    out = _z_verdict(exact, r, se, printed_value=-0.183, exact_minus_printed=exact + 0.183)
    out["passed"] = out["passed"] and abs(exact - (-0.183)) <= 0.001
    return out


def _random_column(values: np.ndarray, gen) -> np.ndarray:
    k = gen.integers(0, values.shape[1], size=values.shape[0])
    return values[np.arange(values.shape[0]), k]


def _orderstat_chi2(n, seed, workers):
    pairs = {(1, 2): (0, 1), (1, 3): (0, 2), (1, 4): (0, 3), (2, 4): (1, 3)}
    bins = (24, 24)
    bounds = ((0.0, 1.0), (0.0, 1.0))

    def fn(m, g):
        x = m.theta / (2 * PI)
        out = {}
        for key, (i, j) in pairs.items():
            out[key] = HistogramND.uniform(bounds, bins).fill(np.stack([x[:, i], x[:, j]], axis=1))
        return out

    parts = _collect(4, n, seed, workers, fn)
    reports = {}
    for key in pairs:
        h = parts[0][key]
        for p in parts[1:]:
            h.merge(p[key])
        pdf = lambda x, y, key=key: an.orderstat_pair_pdf(key, x, y)  # noqa: E731
        reports[f"X{key[0]},X{key[1]}"] = chi_square_uniformity(h, pdf, ALPHA / len(pairs))
    return _chi_verdict(reports)


def _tent_chi2(n, seed, workers):
    h = _hist_parts(4, n, seed, workers, lambda m, g: _adjacent_pair(m, g, 1, True), ((0, PI), (0, PI)), (24, 24))
    return _chi_verdict({"tent": chi_square_uniformity(h, an.tent_pdf, ALPHA)})


def _tent_dependence(n, seed, workers):
    pair = _concat(_collect(4, n, seed, workers, lambda m, g: _adjacent_pair(m, g, 1, True)))
    cut = PI / 4
    excess, se = estimate_joint_excess(pair[:, 0] < cut, pair[:, 1] < cut)
    target = an.MOMENTS["TENT_JOINT_QUARTER"].value - an.MOMENTS["TENT_MARGINAL_QUARTER"].value ** 2
    sigmas = excess / se
    return dict(
        analytic=target, estimate=excess, stderr=se, statistic=sigmas,
        passed=abs(sigmas) > 5.0,
        details={"rule": "|excess| > 5 stderr", "within_4se_of_analytic": abs(excess - target) <= Z_BAND * se},
    )


def _tri_sides(m, g):
    angles, _, _ = _rotated(m, g)
    return 2.0 * np.sin(angles[:, :2])


def _tri_side_indep(n, seed, workers):
    bins = 24
    h = _hist_parts(3, n, seed, workers, _tri_sides, ((0, 2), (0, 2)), (bins, bins))
    marginal = an.get_density("triangle_side_marginal")
    cdf = marginal.cdf(h.edges[0])
    p = np.diff(cdf)
    product = np.outer(p, p)
    reports = {
        "own_marginals": chi_square_independence(h, ALPHA / 2),
        "analytic_product": chi_square_uniformity(h, masses=product, alpha=ALPHA / 2),
    }
    return _chi_verdict(reports)


def _tri_angle_uniform(n, seed, workers):
    h = _hist_parts(3, n, seed, workers, lambda m, g: _adjacent_pair(m, g, 1), ((0, PI), (0, PI)), (24, 24))
    return _chi_verdict({"simplex": chi_square_uniformity(h, an.triangle_angle_pdf, ALPHA)})


def _identity_verdict(defect: float, **details) -> dict:
    return dict(
        analytic=IDENTITY_TOL, estimate=defect, stderr=None, statistic=defect,
        passed=bool(defect <= IDENTITY_TOL), details=details,
    )


def _max_over(parts) -> float:
    return float(max(parts)) if parts else 0.0


def _third_side(n, seed, workers):
    def fn(m, g):
        angles, _, sides = _rotated(m, g)
        # side opposite angle k is 2 sin(angle k); rows hold (a, b, c)
        a, b, c = (2.0 * np.sin(angles[:, k]) for k in range(3))
        plus = third_side_triangle(a, b, "plus")
        minus = third_side_triangle(a, b, "minus")
        defect = np.minimum(np.abs(c - plus), np.abs(c - minus))
        chord = np.max(np.abs(np.sort(sides, axis=1) - np.sort(np.stack([a, b, c], 1), axis=1)))
        return max(float(defect.max()), float(chord))

    return _identity_verdict(_max_over(_collect(3, n, seed, workers, fn)))


def _third_side_branch(n, seed, workers):
    def fn(m, g):
        angles, _, _ = _rotated(m, g)
        a, b, c = (2.0 * np.sin(angles[:, k]) for k in range(3))
        plus = third_side_triangle(a, b, "plus")
        minus = third_side_triangle(a, b, "minus")
        return MomentAccumulator().update((np.abs(c - plus) <= np.abs(c - minus)).astype(np.float64))

    acc = _merge_acc(_collect(3, n, seed, workers, fn))
    return _z_verdict(0.5, acc.mean, acc.stderr)


def _tan_half(n, seed, workers):
    def fn(m, g):
        s = m.sides
        a, b, w = angles_from_sides(s[:, 1], s[:, 2], s[:, 3], s[:, 0])
        return float(max(np.abs(a - m.angles[:, 1]).max(), np.abs(b - m.angles[:, 2]).max(), np.abs(w - m.omega).max()))

    return _identity_verdict(_max_over(_collect(4, n, seed, workers, fn)))


def _opp_supplementary(n, seed, workers):
    def fn(m, g):
        a = m.angles
        return float(max(np.abs(a[:, 0] + a[:, 2] - PI).max(), np.abs(a[:, 1] + a[:, 3] - PI).max()))

    return _identity_verdict(_max_over(_collect(4, n, seed, workers, fn)))


def _angle_sum(n, seed, workers):
    worst = {}
    for n_gon in (3, 4, 5, 6):
        parts = _collect(
            n_gon, n, seed, workers,
            lambda m, g: float(np.abs(m.angles.sum(axis=1) - (m.n - 2) * PI).max()),
        )
        worst[n_gon] = _max_over(parts)
    return _identity_verdict(max(worst.values()), per_order=worst)


def _area_trig(n, seed, workers):
    worst = {}
    for n_gon in (3, 4):
        parts = _collect(n_gon, n, seed, workers, lambda m, g: float(np.abs(m.area - m.area_trig()).max()))
        worst[n_gon] = _max_over(parts)
    return _identity_verdict(max(worst.values()), per_order=worst)


def _diag_sine(n, seed, workers):
    def fn(m, g):
        v = np.stack([np.cos(m.theta), np.sin(m.theta)], axis=-1)
        d1 = np.linalg.norm(v[:, 1] - v[:, 3], axis=1)
        d2 = np.linalg.norm(v[:, 0] - v[:, 2], axis=1)
        return float(max(np.abs(d1 - m.diagonals[:, 0]).max(), np.abs(d2 - m.diagonals[:, 1]).max()))

    return _identity_verdict(_max_over(_collect(4, n, seed, workers, fn)))


def _tri_area_moment(k: int, target_id: str):
    def check(n, seed, workers):
        acc = _merge_acc(_collect(3, n, seed, workers, lambda m, g: MomentAccumulator().update(m.area**k)))
        target = an.closed_form_moment(target_id)
        out = _z_verdict(target, acc.mean, acc.stderr)
        dens = an.get_density("triangle_area")
        quad = dens.moment(k)
        out["details"].update(
            quadrature=quad,
            quadrature_error=quad - target,
            quadrature_tol=1e-6,
            cutoff_tail_mass=dens.tail_mass(),
            normalization=dens.total_mass(),
        )
        out["passed"] = out["passed"] and abs(quad - target) <= 1e-6
        return out

    return check


def _quad_f_support(n, seed, workers):
    bins = 16
    edges = np.linspace(0, PI, bins + 1)

    def fn(m, g):
        t = _quad_triple(m, g)
        h = HistogramND((edges, edges, edges)).fill(t)
        outside = int((~an.in_tetrahedron(t[:, 0], t[:, 1], t[:, 2])).sum())
        return h, outside

    parts = _collect(4, n, seed, workers, fn)
    h = parts[0][0]
    for p in parts[1:]:
        h.merge(p[0])
    outside = sum(p[1] for p in parts)
    lo, hi = edges[:-1], edges[1:]
    inside = np.ones((bins,) * 3, dtype=bool)
    for cx in (lo, hi):
        for cy in (lo, hi):
            for cz in (lo, hi):
                a, b, w = np.meshgrid(cx, cy, cz, indexing="ij")
                inside &= (a + b >= w) & (a + w >= b) & (b + w >= a) & (a + b + w <= 2 * PI)
    masses = bin_masses(h, an.quad_angle_joint_pdf, subdivisions=1)
    rep = chi_square_uniformity(h, masses=masses, mask=inside, alpha=ALPHA)
    return _chi_verdict(
        {"interior_uniformity": rep}, extra_ok=outside == 0,
        samples_outside_tetrahedron=outside, interior_bins=int(inside.sum()),
    )


def _quad_f_marginals(n, seed, workers):
    combos = {"alpha,beta": (0, 1), "alpha,omega": (0, 2), "beta,omega": (1, 2)}
    bounds = ((0, PI), (0, PI))

    def fn(m, g):
        t = _quad_triple(m, g)
        return {k: HistogramND.uniform(bounds, (24, 24)).fill(t[:, [i, j]]) for k, (i, j) in combos.items()}

    parts = _collect(4, n, seed, workers, fn)
    reports = {}
    for k in combos:
        h = parts[0][k]
        for p in parts[1:]:
            h.merge(p[k])
        reports[k] = chi_square_uniformity(h, an.tent_pdf, ALPHA / len(combos))
    return _chi_verdict(reports)


def _quad_twice_tri(n, seed, workers):
    q = _merge_acc(_collect(4, n, seed, workers, lambda m, g: MomentAccumulator().update(m.area)))
    t = _merge_acc(_collect(3, n, seed, workers, lambda m, g: MomentAccumulator().update(m.area)))
    ratio = q.mean / t.mean
    se = ratio * math.hypot(q.stderr / q.mean, t.stderr / t.mean)
    return _z_verdict(2.0, ratio, se, quad_mean=q.mean, tri_mean=t.mean)


# -- registry -----------------------------------------------------------------

_S1, _S2, _S3, _S4, _S5 = (
    "§1 Sides", "§2 Angles", "§3 Looking Back", "§4 Looking Forward", "§5 Area",
)
_PRE = "Preamble"
M6 = 1_000_000


def _registry() -> dict[str, Claim]:
    c = [
        Claim("SIDE_MEAN", "Mean side of a quadrilateral is 6/π − 24/π³", _S1, "moment", False, M6,
              _moment(4, lambda m: m.sides.mean(axis=1), "SIDE_MEAN")),
        Claim("SIDE_M2", "Mean squared side is 2 − 3/π²", _S1, "moment", False, M6,
              _moment(4, lambda m: (m.sides**2).mean(axis=1), "SIDE_M2")),
        Claim("SIDE_ADJ_PRODUCT", "Mean product of adjacent sides is 12/π²", _S1, "moment", False, M6,
              _moment(4, lambda m: (m.sides * np.roll(m.sides, -1, axis=1)).mean(axis=1), "SIDE_ADJ_PRODUCT")),
        Claim("SIDE_OPP_PRODUCT", "Mean product of opposite sides is also 12/π²", _S1, "moment", False, M6,
              _moment(4, lambda m: 0.5 * (m.sides[:, 0] * m.sides[:, 2] + m.sides[:, 1] * m.sides[:, 3]),
                      "SIDE_OPP_PRODUCT")),
        Claim("SIDE_ADJ_CORR", "Adjacent sides correlate at ≈ −0.183", _S1, "correlation", False, M6,
              _side_adj_corr),
        Claim("DIAG_MEAN", "Mean diagonal is 48/π³", _S1, "moment", False, M6,
              _moment(4, lambda m: m.diagonals.mean(axis=1), "DIAG_MEAN")),
        Claim("DIAG_M2", "Mean squared diagonal is 2 + 6/π²", _S1, "moment", False, M6,
              _moment(4, lambda m: (m.diagonals**2).mean(axis=1), "DIAG_M2")),
        Claim("SIDE_KS", "An arbitrary side follows the (3/4, 1/4) mixture side law", _S1, "density_1d", False, M6,
              _ks(4, lambda m, g: _random_column(m.sides, g), "side")),
        Claim("DIAG_KS", "A diagonal (and s₁) follows the diagonal law", _S1, "density_1d", False, M6,
              _ks(4, lambda m, g: _random_column(m.diagonals, g), "diagonal")),
        Claim("GAP21_KS", "X₂ − X₁ has density 4(1−u)³", _S1, "density_1d", False, M6,
              _ks(4, lambda m, g: (m.theta[:, 1] - m.theta[:, 0]) / (2 * PI), "gap21")),
        Claim("GAP31_KS", "X₃ − X₁ has density 12u(1−u)²", _S1, "density_1d", False, M6,
              _ks(4, lambda m, g: (m.theta[:, 2] - m.theta[:, 0]) / (2 * PI), "gap31")),
        Claim("GAP41_KS", "X₄ − X₁ has density 12u²(1−u)", _S1, "density_1d", False, M6,
              _ks(4, lambda m, g: (m.theta[:, 3] - m.theta[:, 0]) / (2 * PI), "gap41")),
        Claim("ORDERSTAT_PAIR_CHI2", "Joint order-statistic densities of (X₁,X₂), (X₁,X₃), (X₁,X₄), (X₂,X₄)",
              _S1, "density_2d", False, M6, _orderstat_chi2),
        Claim("ANGLE_KS", "An arbitrary angle has density 6x(π−x)/π³", _S2, "density_1d", False, M6,
              _ks(4, lambda m, g: _random_column(m.angles, g), "angle")),
        Claim("TENT_CHI2", "Adjacent angles follow the bivariate tent density", _S2, "density_2d", False, M6,
              _tent_chi2),
        Claim("TENT_RHO_ZERO", "Adjacent angles are uncorrelated", _S2, "correlation", False, M6,
              _correlation(4, 1, 0.0, flip=True)),
        Claim("TENT_DEPENDENCE", "Adjacent angles are nevertheless dependent", _S2, "moment", False, M6,
              _tent_dependence),
        Claim("TRI_ANGLE_RHO", "Two triangle angles correlate at −1/2", _S3, "correlation", False, M6,
              _correlation(3, 1, -0.5)),
        Claim("TRI_SIDE_INDEP_CHI2", "Two triangle sides are independent with the product density",
              _S3, "density_2d", False, M6, _tri_side_indep),
        Claim("TRI_SIDE_MARGINAL_KS", "A triangle side has density 2/(π√(4−a²))", _S3, "density_1d", False, M6,
              _ks(3, lambda m, g: _random_column(m.sides, g), "triangle_side_marginal")),
        Claim("TRI_THIRD_SIDE_IDENTITY", "The third side equals one of the two branch formulas", _S3,
              "identity", False, 10_000, _third_side),
        Claim("TRI_THIRD_SIDE_BRANCH_HALF", "Each third-side branch occurs with probability 1/2", _S3,
              "moment", False, M6, _third_side_branch),
        Claim("TRI_ANGLE_UNIFORM_CHI2", "Two triangle angles are uniform (2/π²) on the simplex", _S3,
              "density_2d", False, M6, _tri_angle_uniform),
        Claim("PENT_RHO_ADJ", "Adjacent pentagon angles correlate at 1/6", _S4, "correlation", False, M6,
              _correlation(5, 1, 1 / 6)),
        Claim("PENT_RHO_NONADJ", "Non-adjacent pentagon angles correlate at −2/3", _S4, "correlation", False, M6,
              _correlation(5, 2, -2 / 3)),
        Claim("HEX_RHO_ADJ", "Adjacent hexagon angles correlate at 1/4", _S4, "correlation", True, M6,
              _correlation(6, 1, 0.25)),
        Claim("HEX_RHO_GAMMA", "Hexagon angles two apart correlate at −1/2", _S4, "correlation", True, M6,
              _correlation(6, 2, -0.5)),
        Claim("HEX_RHO_DELTA", "Opposite hexagon angles correlate at −1/2", _S4, "correlation", True, M6,
              _correlation(6, 3, -0.5)),
        Claim("TRI_AREA_MEAN", "Mean triangle area is 3/(2π)", _S5, "moment", False, M6,
              _tri_area_moment(1, "TRI_AREA_MEAN")),
        Claim("TRI_AREA_M2", "Mean squared triangle area is 3/8", _S5, "moment", False, M6,
              _tri_area_moment(2, "TRI_AREA_M2")),
        Claim("TRI_AREA_KS", "Triangle area has density 8xK(4x²)", _S5, "density_1d", False, 100_000,
              _ks(3, lambda m, g: m.area, "triangle_area")),
        Claim("QUAD_F_SUPPORT_CHI2", "(α, β, ω) is uniform (3/π³) on the tetrahedron", _S5, "density_3d", True,
              4 * M6, _quad_f_support),
        Claim("QUAD_F_MARGINAL_TENT", "Each pair from (α, β, ω) follows the tent density", _S5, "density_2d",
              True, M6, _quad_f_marginals),
        Claim("QUAD_AREA_MEAN", "Mean quadrilateral area is 3/π", _S5, "moment", False, M6,
              _moment(4, lambda m: m.area, "QUAD_AREA_MEAN")),
        Claim("QUAD_AREA_M2", "Mean squared quadrilateral area is 1/2 + 105/(16π²)", _S5, "moment", False, M6,
              _moment(4, lambda m: m.area**2, "QUAD_AREA_M2")),
        Claim("QUAD_AREA_TWICE_TRI", "Mean quadrilateral area is twice the triangle mean", _S5, "moment",
              False, M6, _quad_twice_tri),
        Claim("TAN_HALF_ANGLE_IDENTITY", "Tangent half-angle formulas reproduce (α₂, α₃, ω) from the sides",
              _S5, "identity", False, 10_000, _tan_half),
        Claim("OPP_ANGLES_SUPPLEMENTARY", "Opposite angles of a cyclic quadrilateral are supplementary",
              _PRE, "identity", False, 10_000, _opp_supplementary),
        Claim("AREA_TRIG_VS_SHOELACE", "Shoelace area equals 2 sin α sin β sin ω (and the triangle analogue)",
              f"{_PRE}; {_S5}", "identity", False, 10_000, _area_trig),
        Claim("ANGLE_SUM_IDENTITY", "Interior angles of an n-gon sum to (n − 2)π, n = 3..6", _PRE,
              "identity", False, 10_000, _angle_sum),
        Claim("DIAGONAL_SINE_IDENTITY", "Diagonals satisfy d_k = 2 sin α_k", _PRE, "identity", False, 10_000,
              _diag_sine),
    ]
    return {x.id: x for x in c}


CLAIMS = _registry()


def list_claims() -> list[Claim]:
    return list(CLAIMS.values())


def get_claim(claim_id: str) -> Claim:
    try:
        return CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaimError(f"unknown claim id {claim_id!r}") from None


def run_claim(claim_id: str, n_samples: int | None = None, seed: int = 0, workers: int = 1,
              timing: bool = True) -> ClaimResult:
    """Run one claim. Raises for unknown ids or too few samples."""
    claim = get_claim(claim_id)
    n = claim.default_samples if n_samples is None else int(n_samples)
    if n < MIN_SAMPLES[claim.kind]:
        raise InsufficientSamplesError(
            f"{claim_id} needs at least {MIN_SAMPLES[claim.kind]} samples, got {n}"
        )
    t0 = time.perf_counter()
    out = claim.check(n, seed, max(1, int(workers)))
    elapsed = time.perf_counter() - t0
    return ClaimResult(
        claim_id=claim.id,
        description=claim.description,
        paper_location=claim.paper_location,
        conjecture=claim.conjecture,
        kind=claim.kind,
        analytic=_f(out["analytic"]),
        estimate=_f(out["estimate"]),
        stderr=_f(out["stderr"]),
        statistic=_f(out["statistic"]),
        passed=bool(out["passed"]),
        n_samples=n,
        seed=seed,
        workers=workers,
        elapsed_seconds=elapsed if timing else None,
        details=out.get("details", {}),
    )


def _f(v):
    return None if v is None else float(v)


def run_all(n_samples_override: int | None = None, seed: int = 0, workers: int = 1,
            claim_ids: list[str] | None = None, timing: bool = True) -> list[ClaimResult]:
    """Run claims in registry order; a failing claim becomes an error entry."""
    ids = list(CLAIMS) if not claim_ids else list(claim_ids)
    for cid in ids:
        get_claim(cid)
    results = []
    for cid in ids:
        try:
            results.append(run_claim(cid, n_samples_override, seed, workers, timing))
        except Exception as exc:  # noqa: BLE001 - reported per claim
            claim = CLAIMS[cid]
            results.append(
                ClaimResult(
                    claim_id=cid, description=claim.description, paper_location=claim.paper_location,
                    conjecture=claim.conjecture, kind=claim.kind, analytic=None, estimate=None,
                    stderr=None, statistic=None, passed=False,
                    n_samples=claim.default_samples if n_samples_override is None else int(n_samples_override),
                    seed=seed, workers=workers, elapsed_seconds=None,
                    error=f"{type(exc).__name__}: {exc}",
                )
            )
    return results
