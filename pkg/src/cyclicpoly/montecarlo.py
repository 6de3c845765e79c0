"""Streaming estimators and goodness-of-fit tests for Monte Carlo checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy import stats

__all__ = [
    "InsufficientDataError",
    "ZeroVarianceError",
    "NonMonotoneCdfError",
    "DegenerateHistogramError",
    "MomentAccumulator",
    "PairAccumulator",
    "KsReport",
    "ChiSquareReport",
    "HistogramND",
    "estimate_mean_var",
    "estimate_correlation",
    "estimate_joint_excess",
    "ks_test",
    "ks_critical_value",
    "bin_masses",
    "chi_square_uniformity",
    "chi_square_independence",
]


class InsufficientDataError(ValueError):
    pass


class ZeroVarianceError(ValueError):
    pass


class NonMonotoneCdfError(ValueError):
    pass


class DegenerateHistogramError(ValueError):
    pass


@dataclass
class MomentAccumulator:
    """One-pass mean and centred sum of squares (Chan et al. batch merge)."""

    count: int = 0
    mean: float = 0.0
    m2: float = 0.0

    def update(self, values) -> "MomentAccumulator":
        v = np.asarray(values, dtype=np.float64).ravel()
        if v.size:
            mean = float(v.mean())
            self.merge(MomentAccumulator(v.size, mean, float(np.sum((v - mean) ** 2))))
        return self

    def push(self, x: float) -> "MomentAccumulator":
        self.count += 1
        delta = x - self.mean
        self.mean += delta / self.count
        self.m2 += delta * (x - self.mean)
        return self

    def merge(self, other: "MomentAccumulator") -> "MomentAccumulator":
        if other.count == 0:
            return self
        if self.count == 0:
            self.count, self.mean, self.m2 = other.count, other.mean, other.m2
            return self
        n = self.count + other.count
        delta = other.mean - self.mean
        self.mean += delta * other.count / n
        self.m2 += other.m2 + delta * delta * self.count * other.count / n
        self.count = n
        return self

    @property
    def variance(self) -> float:
        if self.count < 2:
            raise InsufficientDataError("need at least 2 values for a variance")
        return self.m2 / (self.count - 1)

    @property
    def stderr(self) -> float:
        return math.sqrt(self.variance / self.count)


@dataclass
class PairAccumulator:
    """Means, centred squares and the centred cross-product of (x, y) pairs."""

    count: int = 0
    mean_x: float = 0.0
    mean_y: float = 0.0
    m2x: float = 0.0
    m2y: float = 0.0
    cxy: float = 0.0

    def update(self, x, y) -> "PairAccumulator":
        x = np.asarray(x, dtype=np.float64).ravel()
        y = np.asarray(y, dtype=np.float64).ravel()
        if x.shape != y.shape:
            raise ValueError("x and y must have the same length")
        if x.size:
            mx, my = float(x.mean()), float(y.mean())
            dx, dy = x - mx, y - my
            other = PairAccumulator(
                x.size, mx, my, float(dx @ dx), float(dy @ dy), float(dx @ dy)
            )
            self.merge(other)
        return self

    def merge(self, other: "PairAccumulator") -> "PairAccumulator":
        if other.count == 0:
            return self
        if self.count == 0:
            self.__dict__.update(other.__dict__)
            return self
        n = self.count + other.count
        w = self.count * other.count / n
        dx = other.mean_x - self.mean_x
        dy = other.mean_y - self.mean_y
        self.mean_x += dx * other.count / n
        self.mean_y += dy * other.count / n
        self.m2x += other.m2x + dx * dx * w
        self.m2y += other.m2y + dy * dy * w
        self.cxy += other.cxy + dx * dy * w
        self.count = n
        return self

    @property
    def covariance(self) -> float:
        if self.count < 2:
            raise InsufficientDataError("need at least 2 pairs")
        return self.cxy / (self.count - 1)

    @property
    def correlation(self) -> float:
        if self.count < 3:
            raise InsufficientDataError("need at least 3 pairs for a correlation")
        if self.m2x <= 0 or self.m2y <= 0:
            raise ZeroVarianceError("a marginal has zero variance")
        return self.cxy / math.sqrt(self.m2x * self.m2y)


def estimate_mean_var(stream: Iterable[float]) -> tuple[float, float, float]:
    """``(mean, unbiased variance, standard error of the mean)``."""
    acc = MomentAccumulator()
    if isinstance(stream, np.ndarray):
        acc.update(stream)
    else:
        for x in stream:
            acc.push(float(x))
    if acc.count < 2:
        raise InsufficientDataError(f"need at least 2 values, got {acc.count}")
    return acc.mean, acc.variance, acc.stderr


def _as_pairs(pairs) -> tuple[np.ndarray, np.ndarray]:
    arr = np.asarray(pairs if isinstance(pairs, np.ndarray) else list(pairs), dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("pairs must have shape (n, 2)")
    return arr[:, 0], arr[:, 1]


def estimate_correlation(pairs, *, method: str = "normal") -> tuple[float, float]:
    """Pearson correlation and its standard error.

    ``method="normal"`` uses ``(1 - r^2) / sqrt(n)``, exact for bivariate
    normal data. ``method="delta"`` uses the influence function
    ``uv - r (u^2 + v^2) / 2`` of the standardised variables, which stays
    valid for non-normal and dependent-but-uncorrelated data.
    """
    x, y = _as_pairs(pairs)
    n = x.size
    if n < 3:
        raise InsufficientDataError(f"need at least 3 pairs, got {n}")
    acc = PairAccumulator().update(x, y)
    r = acc.correlation
    if method == "normal":
        se = (1.0 - r * r) / math.sqrt(n)
    elif method == "delta":
        u = (x - acc.mean_x) / math.sqrt(acc.m2x / n)
        v = (y - acc.mean_y) / math.sqrt(acc.m2y / n)
        infl = u * v - 0.5 * r * (u * u + v * v)
        se = float(np.std(infl, ddof=1)) / math.sqrt(n)
    else:
        raise ValueError(f"unknown method {method!r}")
    return r, se


def estimate_joint_excess(in_a, in_b) -> tuple[float, float]:
    """``P(A and B) - P(A) P(B)`` from indicator arrays, with a delta-method stderr.

    A value many standard errors away from zero is a witness that the events
    (and the variables defining them) are dependent.
    """
    a = np.asarray(in_a, dtype=np.float64)
    b = np.asarray(in_b, dtype=np.float64)
    n = a.size
    if n < 2:
        raise InsufficientDataError("need at least 2 observations")
    pa, pb, pab = a.mean(), b.mean(), (a * b).mean()
    infl = (a * b - pab) - pb * (a - pa) - pa * (b - pb)
    return float(pab - pa * pb), float(np.std(infl, ddof=1) / math.sqrt(n))


# -- Kolmogorov-Smirnov ------------------------------------------------------


@dataclass(frozen=True)
class KsReport:
    n: int
    d_statistic: float
    threshold_at_alpha: float
    alpha: float

    @property
    def passed(self) -> bool:
        return self.d_statistic <= self.threshold_at_alpha


def ks_critical_value(alpha: float) -> float:
    """Asymptotic constant ``c(alpha)`` of the Kolmogorov distribution."""
    return float(stats.kstwobign.isf(alpha))


def ks_test(samples, cdf: Callable, alpha: float = 0.01) -> KsReport:
    """One-sample KS test; ``cdf`` must accept a numpy array."""
    x = np.sort(np.asarray(samples, dtype=np.float64).ravel())
    n = x.size
    if n < 100:
        raise InsufficientDataError(f"KS test needs at least 100 samples, got {n}")
    f = np.asarray(cdf(x), dtype=np.float64)
    if np.any(np.diff(f) < -1e-12) or np.any(f < -1e-12) or np.any(f > 1 + 1e-9):
        raise NonMonotoneCdfError("cdf is not a monotone map into [0, 1] on the sample range")
    i = np.arange(1, n + 1)
    d = max(float(np.max(i / n - f)), float(np.max(f - (i - 1) / n)))
    d = min(max(d, 0.0), 1.0)
    return KsReport(n, d, ks_critical_value(alpha) / math.sqrt(n), alpha)


# -- histograms and chi-square ------------------------------------------------


@dataclass
class HistogramND:
    edges: tuple[np.ndarray, ...]
    counts: np.ndarray = field(default=None)
    n_samples: int = 0  # includes samples that fell outside the edges

    def __post_init__(self):
        self.edges = tuple(np.asarray(e, dtype=np.float64) for e in self.edges)
        if not 1 <= len(self.edges) <= 3:
            raise ValueError("histograms are 1-, 2- or 3-dimensional")
        shape = tuple(len(e) - 1 for e in self.edges)
        if self.counts is None:
            self.counts = np.zeros(shape, dtype=np.int64)
        elif self.counts.shape != shape:
            raise ValueError("counts shape does not match edges")

    @classmethod
    def uniform(cls, bounds: Sequence[tuple[float, float]], bins: Sequence[int]) -> "HistogramND":
        return cls(tuple(np.linspace(lo, hi, k + 1) for (lo, hi), k in zip(bounds, bins)))

    @property
    def dim(self) -> int:
        return len(self.edges)

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def fill(self, samples) -> "HistogramND":
        """Add samples of shape (N, dim); values outside the edges are dropped."""
        s = np.asarray(samples, dtype=np.float64).reshape(-1, self.dim)
        h, _ = np.histogramdd(s, bins=self.edges)
        self.counts += h.astype(np.int64)
        self.n_samples += s.shape[0]
        return self

    def merge(self, other: "HistogramND") -> "HistogramND":
        self.counts += other.counts
        self.n_samples += other.n_samples
        return self


# interior degree-2 rule on a triangle (barycentric (2/3, 1/6, 1/6), weights 1/3)
_TRI_BARY = np.array([[2 / 3, 1 / 6, 1 / 6], [1 / 6, 2 / 3, 1 / 6], [1 / 6, 1 / 6, 2 / 3]])
_GL3_X = np.array([-math.sqrt(0.6), 0.0, math.sqrt(0.6)])
_GL3_W = np.array([5 / 9, 8 / 9, 5 / 9])


def bin_masses(hist: HistogramND, pdf: Callable, subdivisions: int = 2) -> np.ndarray:
    """Probability mass of ``pdf`` in every histogram bin.

    1-D: composite 3-point Gauss-Legendre. 2-D: each sub-cell is split by
    both diagonals into four triangles integrated with an interior degree-2
    rule, so piecewise quadratics that break along cell edges or diagonals
    (tent, order-statistic and simplex densities on a square grid) are
    integrated exactly. 3-D: composite 3-point Gauss-Legendre tensor rule.
    No rule samples cell boundaries.
    """
    k = int(subdivisions)
    if hist.dim == 1:
        e = hist.edges[0]
        sub = np.concatenate([np.linspace(a, b, k + 1)[:-1] for a, b in zip(e[:-1], e[1:])] + [e[-1:]])
        lo, hi = sub[:-1], sub[1:]
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        pts = mid[:, None] + half[:, None] * _GL3_X[None, :]
        vals = np.asarray(pdf(pts), dtype=np.float64)
        per_sub = (vals * _GL3_W).sum(axis=1) * half
        return per_sub.reshape(-1, k).sum(axis=1)

    if hist.dim == 2:
        ex, ey = hist.edges
        nx, ny = len(ex) - 1, len(ey) - 1
        fx = np.linspace(0, 1, k + 1)
        xs = (ex[:-1, None] + np.diff(ex)[:, None] * fx[None, :])  # (nx, k+1)
        ys = (ey[:-1, None] + np.diff(ey)[:, None] * fx[None, :])
        x0, x1 = xs[:, :-1].ravel(), xs[:, 1:].ravel()
        y0, y1 = ys[:, :-1].ravel(), ys[:, 1:].ravel()
        X0, Y0 = np.meshgrid(x0, y0, indexing="ij")
        X1, Y1 = np.meshgrid(x1, y1, indexing="ij")
        cx, cy = 0.5 * (X0 + X1), 0.5 * (Y0 + Y1)
        corners = [(X0, Y0), (X1, Y0), (X1, Y1), (X0, Y1)]
        area = (X1 - X0) * (Y1 - Y0) / 4.0
        total = np.zeros_like(X0)
        for j in range(4):
            (ax, ay), (bx, by) = corners[j], corners[(j + 1) % 4]
            for w in _TRI_BARY:
                px = w[0] * ax + w[1] * bx + w[2] * cx
                py = w[0] * ay + w[1] * by + w[2] * cy
                total += np.asarray(pdf(px, py), dtype=np.float64) / 3.0
        masses = total * area
        return masses.reshape(nx, k, ny, k).sum(axis=(1, 3))

    ex, ey, ez = hist.edges
    fx = np.linspace(0, 1, k + 1)

    def nodes(e):
        sub = (e[:-1, None] + np.diff(e)[:, None] * fx[None, :])
        lo, hi = sub[:, :-1].ravel(), sub[:, 1:].ravel()
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        return mid[:, None] + half[:, None] * _GL3_X[None, :], half[:, None] * _GL3_W[None, :]

    (px, wx), (py, wy), (pz, wz) = nodes(ex), nodes(ey), nodes(ez)
    X = px[:, :, None, None, None, None]
    Y = py[None, None, :, :, None, None]
    Z = pz[None, None, None, None, :, :]
    W = wx[:, :, None, None, None, None] * wy[None, None, :, :, None, None] * wz[None, None, None, None, :, :]
    vals = np.asarray(pdf(X, Y, Z), dtype=np.float64) * W
    per_sub = vals.sum(axis=(1, 3, 5))
    nx, ny, nz = len(ex) - 1, len(ey) - 1, len(ez) - 1
    return per_sub.reshape(nx, k, ny, k, nz, k).sum(axis=(1, 3, 5))


@dataclass(frozen=True)
class ChiSquareReport:
    statistic: float
    dof: int
    threshold: float
    alpha: float
    cells: int

    @property
    def passed(self) -> bool:
        return self.statistic <= self.threshold

    @property
    def p_value(self) -> float:
        return float(stats.chi2.sf(self.statistic, self.dof))


def _pearson(observed: np.ndarray, expected: np.ndarray, min_expected: float, alpha: float, dof_loss: int):
    small = expected < min_expected
    obs = list(observed[~small])
    exp = list(expected[~small])
    if small.any():
        po, pe = float(observed[small].sum()), float(expected[small].sum())
        if pe >= min_expected or not exp:
            obs.append(po)
            exp.append(pe)
        elif pe > 0 or po > 0:
            j = int(np.argmin(exp))
            obs[j] += po
            exp[j] += pe
    obs_a = np.asarray(obs, dtype=np.float64)
    exp_a = np.asarray(exp, dtype=np.float64)
    dof = obs_a.size - 1 - dof_loss
    if obs_a.size < 2 or dof < 1:
        raise DegenerateHistogramError("fewer than two usable cells after pooling")
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(exp_a > 0, (obs_a - exp_a) ** 2 / exp_a, np.where(obs_a > 0, np.inf, 0.0))
    stat = float(terms.sum())
    return ChiSquareReport(stat, dof, float(stats.chi2.isf(alpha, dof)), alpha, obs_a.size)


def chi_square_uniformity(
    hist: HistogramND,
    expected_pdf: Callable | None = None,
    alpha: float = 0.01,
    *,
    masses: np.ndarray | None = None,
    mask: np.ndarray | None = None,
    min_expected: float = 5.0,
    subdivisions: int = 2,
) -> ChiSquareReport:
    """Pearson chi-square of a histogram against a density.

    Bin probabilities come from ``masses`` when given, else from
    :func:`bin_masses`. With ``mask``, only the selected bins are tested
    individually and everything else (including samples outside the edges)
    forms one remainder cell whose probability is one minus the selected
    mass. Cells expecting fewer than ``min_expected`` counts are pooled.
    """
    if masses is None:
        if expected_pdf is None:
            raise ValueError("need expected_pdf or masses")
        masses = bin_masses(hist, expected_pdf, subdivisions)
    masses = np.asarray(masses, dtype=np.float64)
    counts = hist.counts.astype(np.float64)
    if counts.size < 2:
        raise DegenerateHistogramError("a single-bin histogram cannot be tested")
    n_in = counts.sum()
    if mask is None:
        n = n_in
        observed, expected = counts.ravel(), n * masses.ravel() / masses.sum()
    else:
        mask = np.asarray(mask, dtype=bool)
        n = max(hist.n_samples, n_in)
        sel_obs = counts[mask]
        sel_exp = n * masses[mask]
        rest_obs = n - sel_obs.sum()
        rest_exp = n * max(0.0, 1.0 - float(masses[mask].sum()))
        observed = np.append(sel_obs, rest_obs)
        expected = np.append(sel_exp, rest_exp)
    if n <= 0:
        raise DegenerateHistogramError("empty histogram")
    return _pearson(observed, expected, min_expected, alpha, 0)


def chi_square_independence(hist: HistogramND, alpha: float = 0.01, min_expected: float = 5.0) -> ChiSquareReport:
    """Contingency-table test of a 2-D histogram against its own marginal product."""
    if hist.dim != 2:
        raise ValueError("independence test needs a 2-D histogram")
    c = hist.counts.astype(np.float64)
    rows, cols = c.sum(axis=1), c.sum(axis=0)
    keep_r, keep_c = rows > 0, cols > 0
    c = c[keep_r][:, keep_c]
    n = c.sum()
    if c.shape[0] < 2 or c.shape[1] < 2:
        raise DegenerateHistogramError("need at least two occupied rows and columns")
    expected = np.outer(c.sum(axis=1), c.sum(axis=0)) / n
    if np.any(expected < min_expected):
        raise DegenerateHistogramError("expected counts below threshold; use fewer bins")
    stat = float(((c - expected) ** 2 / expected).sum())
    dof = (c.shape[0] - 1) * (c.shape[1] - 1)
    return ChiSquareReport(stat, dof, float(stats.chi2.isf(alpha, dof)), alpha, c.size)
