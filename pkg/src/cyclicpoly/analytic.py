"""Closed-form densities and moments for random cyclic triangles and quadrilaterals.

Every density is a vectorised function of numpy arrays (scalars in, floats
out). One-dimensional laws are wrapped in :class:`AnalyticDensity`, which adds
a quadrature-backed cdf computed in coordinates where the integrand is
bounded: ``x = 2 sin t`` for the chord-length laws with a ``1/sqrt(4 - x^2)``
blow-up at 2, and a two-sided polynomial map for the triangle-area law.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import numpy as np

from .special import QuadratureSpec, SeriesConvergenceError, gamma, gauss_2f1, integrate

PI = math.pi
TRI_AREA_MAX = 3.0 * math.sqrt(3.0) / 4.0

__all__ = [
    "AnalyticDensity",
    "Moment",
    "UnknownNameError",
    "TRI_AREA_MAX",
    "orderstat_pair_pdf",
    "gap_pdf",
    "side_pdf",
    "side_s2_pdf",
    "diagonal_pdf",
    "angle_pdf",
    "angle_alpha2_pdf",
    "angle_alpha1_pdf",
    "tent_pdf",
    "tent_min_form",
    "triangle_angle_pdf",
    "triangle_side_joint_pdf",
    "triangle_side_marginal_pdf",
    "triangle_area_pdf",
    "quad_angle_joint_pdf",
    "in_tetrahedron",
    "closed_form_moment",
    "MOMENTS",
    "DENSITIES",
    "get_density",
]


class UnknownNameError(KeyError):
    pass


def _out(v):
    v = np.asarray(v, dtype=np.float64)
    return float(v) if v.ndim == 0 else v


def _arr(*xs):
    return [np.asarray(x, dtype=np.float64) for x in xs]


# -- order statistics of four uniforms on [0, 1] -----------------------------

_PAIR_LAWS = {
    (1, 2): lambda x, y: 12.0 * (1.0 - y) ** 2,
    (1, 3): lambda x, y: 24.0 * (y - x) * (1.0 - y),
    (1, 4): lambda x, y: 12.0 * (y - x) ** 2,
    (2, 4): lambda x, y: 24.0 * x * (y - x),
}


def orderstat_pair_pdf(pair, x, y):
    """Joint density of ``(X_i, X_j)`` for the order statistics of 4 uniforms."""
    pair = tuple(pair)
    if pair not in _PAIR_LAWS:
        raise UnknownNameError(f"no pair law for {pair}; choose from {sorted(_PAIR_LAWS)}")
    x, y = _arr(x, y)
    inside = (0 < x) & (x < y) & (y < 1)
    return _out(np.where(inside, _PAIR_LAWS[pair](x, y), 0.0))


_GAP_LAWS = {
    21: lambda u: 4.0 * (1.0 - u) ** 3,
    31: lambda u: 12.0 * u * (1.0 - u) ** 2,
    41: lambda u: 12.0 * u**2 * (1.0 - u),
}


def gap_pdf(which: int, u):
    """Density of ``X_j - X_1`` (``which`` = 21, 31 or 41); X_4 - X_2 follows law 31."""
    if which not in _GAP_LAWS:
        raise UnknownNameError(f"gap law must be one of 21, 31, 41, got {which!r}")
    (u,) = _arr(u)
    inside = (0 < u) & (u < 1)
    return _out(np.where(inside, _GAP_LAWS[which](np.clip(u, 0, 1)), 0.0))


# -- chord lengths ------------------------------------------------------------


def _chord_parts(z):
    (z,) = _arr(z)
    inside = (0 <= z) & (z < 2)
    zc = np.where(inside, z, 0.0)
    t = np.arcsin(0.5 * zc)
    root = np.sqrt(4.0 - zc * zc)
    return inside, t, root


def side_pdf(s):
    """Density of an arbitrary side of a uniform cyclic quadrilateral."""
    inside, t, root = _chord_parts(s)
    val = 3.0 / (PI * root) * (1.0 - 2.0 * t * (PI - t) / PI**2)
    return _out(np.where(inside, val, 0.0))


def side_s2_pdf(s):
    """Density shared by ``s_2, s_3, s_4`` (chords over a single gap)."""
    inside, t, root = _chord_parts(s)
    val = 4.0 / (PI * root) * (1.0 - 3.0 * t * (PI - t) / PI**2)
    return _out(np.where(inside, val, 0.0))


def diagonal_pdf(z):
    """Density of a diagonal, which is also the law of ``s_1``."""
    inside, t, root = _chord_parts(z)
    val = 4.0 / (PI * root) * (3.0 * t * (PI - t) / PI**2)
    return _out(np.where(inside, val, 0.0))


def triangle_side_marginal_pdf(a):
    inside, _, root = _chord_parts(a)
    return _out(np.where(inside, 2.0 / (PI * root), 0.0))


# the same laws after x = 2 sin t, t in [0, pi/2]; bounded polynomials in t
def _side_t(t):
    return 3.0 / PI * (1.0 - 2.0 * t * (PI - t) / PI**2)


def _side_s2_t(t):
    return 4.0 / PI * (1.0 - 3.0 * t * (PI - t) / PI**2)


def _diagonal_t(t):
    return 12.0 * t * (PI - t) / PI**3


def _tri_side_t(t):
    return np.full_like(np.asarray(t, dtype=np.float64), 2.0 / PI)


# -- angles -------------------------------------------------------------------


def _on_open(x, hi):
    (x,) = _arr(x)
    return x, (0 < x) & (x < hi)


def angle_pdf(x):
    """Density of an arbitrary quadrilateral angle."""
    x, inside = _on_open(x, PI)
    return _out(np.where(inside, 6.0 * x * (PI - x) / PI**3, 0.0))


def angle_alpha2_pdf(x):
    """Law of half the arc spanned by two consecutive gaps away from angle 0."""
    x, inside = _on_open(x, PI)
    return _out(np.where(inside, 12.0 * x * (PI - x) ** 2 / PI**4, 0.0))


def angle_alpha1_pdf(x):
    """Supplement of :func:`angle_alpha2_pdf` (opposite angles are supplementary)."""
    x, inside = _on_open(x, PI)
    return _out(np.where(inside, 12.0 * x**2 * (PI - x) / PI**4, 0.0))


def tent_pdf(alpha, beta):
    """Bivariate tent density of two adjacent quadrilateral angles (four cases)."""
    a, b = _arr(alpha, beta)
    h = PI / 2
    out = np.zeros(np.broadcast(a, b).shape)
    inside = (0 < a) & (a < PI) & (0 < b) & (b < PI)
    case1 = inside & (PI - b <= a) & (a <= b) & (h <= b)
    case2 = inside & ~case1 & (a <= b) & (b <= PI - a) & (a <= h)
    case3 = inside & ~case1 & ~case2 & (PI - a <= b) & (b <= a) & (h <= a)
    case4 = inside & ~case1 & ~case2 & ~case3 & (b <= a) & (a <= PI - b) & (b <= h)
    out = np.where(case1, 6.0 * (PI - b) / PI**3, out)
    out = np.where(case2, 6.0 * a / PI**3, out)
    out = np.where(case3, 6.0 * (PI - a) / PI**3, out)
    out = np.where(case4, 6.0 * b / PI**3, out)
    return _out(out)


def tent_min_form(alpha, beta):
    """``6 min(α, β, π-α, π-β) / π³`` on the open square; equals :func:`tent_pdf`."""
    a, b = _arr(alpha, beta)
    inside = (0 < a) & (a < PI) & (0 < b) & (b < PI)
    m = np.minimum(np.minimum(a, b), np.minimum(PI - a, PI - b))
    return _out(np.where(inside, 6.0 * m / PI**3, 0.0))


def triangle_angle_pdf(alpha, beta):
    a, b = _arr(alpha, beta)
    inside = (0 < a) & (0 < b) & (a + b < PI)
    return _out(np.where(inside, 2.0 / PI**2, 0.0))


def triangle_side_joint_pdf(a, b):
    a, b = _arr(a, b)
    inside = (0 <= a) & (a < 2) & (0 <= b) & (b < 2)
    ac = np.where(inside, a, 0.0)
    bc = np.where(inside, b, 0.0)
    val = 4.0 / PI**2 / (np.sqrt(4.0 - ac * ac) * np.sqrt(4.0 - bc * bc))
    return _out(np.where(inside, val, 0.0))


def in_tetrahedron(alpha, beta, omega):
    """Strict membership in the support of the conjectured (α, β, ω) density."""
    a, b, w = _arr(alpha, beta, omega)
    return (a + b > w) & (a + w > b) & (b + w > a) & (a + b + w < 2 * PI)


def quad_angle_joint_pdf(alpha, beta, omega):
    """Conjectured joint density of two adjacent angles and the diagonal angle."""
    return _out(np.where(in_tetrahedron(alpha, beta, omega), 3.0 / PI**3, 0.0))


# -- triangle area ------------------------------------------------------------

_G13_CUBED = gamma(1.0 / 3.0) ** 3
_G23_CUBED = gamma(2.0 / 3.0) ** 3


def _area_kernel(y: float) -> float:
    z = 4.0 * y / 27.0
    f1 = gauss_2f1(1.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, z)
    f2 = gauss_2f1(2.0 / 3.0, 2.0 / 3.0, 4.0 / 3.0, z)
    return (
        (_G13_CUBED * z ** (-1.0 / 6.0) * f1 - 3.0 * _G23_CUBED * z ** (1.0 / 6.0) * f2)
        / (4.0 * PI**3 * math.sqrt(y))
    )


def triangle_area_pdf(x):
    """Density ``8 x K(4 x^2)`` of the area of a uniform cyclic triangle.

    The hypergeometric series converge ever more slowly as ``x`` approaches
    the equilateral area ``3 sqrt(3) / 4``; a non-convergence error is
    re-raised with the offending ``x``.
    """
    xs = np.asarray(x, dtype=np.float64)
    out = np.zeros(xs.shape)
    flat = xs.reshape(-1)
    res = out.reshape(-1)
    for i, v in enumerate(flat):
        if 0.0 < v < TRI_AREA_MAX:
            try:
                res[i] = 8.0 * v * _area_kernel(4.0 * v * v)
            except SeriesConvergenceError as exc:
                raise SeriesConvergenceError(exc.z, exc.terms, exc.partial_sum) from ValueError(
                    f"triangle_area_pdf failed at x={v!r}"
                )
    return _out(out)


# -- 1-D density objects ------------------------------------------------------


@dataclass(frozen=True)
class Moment:
    descriptor: str
    expression: str
    value: float


@dataclass(frozen=True)
class _Map:
    """Change of variables ``x = forward(t)`` on ``[t_lo, t_hi]``."""

    forward: Callable
    inverse: Callable
    jacobian: Callable
    t_lo: float
    t_hi: float


def _identity(lo, hi):
    return _Map(lambda t: t, lambda x: x, lambda t: 1.0, lo, hi)


_ARCSINE = _Map(
    lambda t: 2.0 * np.sin(t),
    lambda x: np.arcsin(np.clip(0.5 * x, 0.0, 1.0)),
    lambda t: 2.0 * np.cos(t),
    0.0,
    PI / 2,
)


def _area_forward(t):
    t = np.asarray(t, dtype=np.float64)
    return TRI_AREA_MAX * (1.0 - (1.0 - t**3) ** 2)


def _area_inverse(x):
    h = np.clip(np.asarray(x, dtype=np.float64) / TRI_AREA_MAX, 0.0, 1.0)
    return np.cbrt(1.0 - np.sqrt(1.0 - h))


def _area_jacobian(t):
    return TRI_AREA_MAX * 6.0 * t**2 * (1.0 - t**3)


# cube-like near 0 (density ~ x^(-1/3)) and quadratic near the maximum, where
# the density stays finite but the series slow down
_AREA_MAP = _Map(_area_forward, _area_inverse, _area_jacobian, 0.0, 1.0)


@dataclass
class AnalyticDensity:
    """A named density with domain, pdf and (in 1-D) a quadrature-backed cdf.

    ``pdf_t`` is the integrand after the change of variables in ``mapping``
    (pdf times Jacobian, simplified so it stays bounded, and without the
    support mask so that closed endpoints do not read as jumps). ``upper_cutoff``
    stops the cdf table short of the upper end of the support; beyond it the
    cdf continues linearly with slope ``pdf(cutoff)``, which is also used as
    the estimate of the mass not covered by quadrature.
    """

    name: str
    dim: int
    domain: str
    pdf: Callable
    paper_location: str
    bounds: tuple[tuple[float, float], ...]
    pdf_t: Callable | None = None
    mapping: _Map | None = None
    known_moments: tuple[Moment, ...] = ()
    conjecture: bool = False
    upper_cutoff: float | None = None
    table_size: int = 256
    quadrature: QuadratureSpec = field(default_factory=lambda: QuadratureSpec(1e-12, 1e-12))

    def __post_init__(self):
        if self.dim == 1 and self.mapping is None:
            lo, hi = self.bounds[0]
            self.mapping = _identity(lo, hi)
            if self.pdf_t is None:
                self.pdf_t = self.pdf

    # t-range actually integrated
    @property
    def _t_range(self) -> tuple[float, float]:
        m = self.mapping
        t_hi = m.t_hi if self.upper_cutoff is None else float(m.inverse(self.upper_cutoff))
        return m.t_lo, t_hi

    @cached_property
    def _memo(self) -> dict[float, float]:
        return {}

    def _scalar_t(self, t: float) -> float:
        # table, moments and tail all revisit the same dyadic points
        t = float(t)
        v = self._memo.get(t)
        if v is None:
            v = self._memo[t] = float(self.pdf_t(t))
        return v

    @cached_property
    def _table(self):
        if self.dim != 1:
            raise TypeError(f"{self.name} is {self.dim}-D; cdf is only defined in 1-D")
        t_lo, t_hi = self._t_range
        nodes = np.linspace(t_lo, t_hi, self.table_size + 1)
        cum = np.zeros_like(nodes)
        for i in range(self.table_size):
            cum[i + 1] = cum[i] + integrate(self._scalar_t, nodes[i], nodes[i + 1], self.quadrature)
        slopes = np.array([self._scalar_t(t) for t in nodes])
        return nodes, cum, slopes

    def _cutoff_pdf(self) -> float:
        t_hi = self._t_range[1]
        return self._scalar_t(t_hi) / float(self.mapping.jacobian(t_hi))

    def tail_mass(self) -> float:
        """Estimated mass above the cutoff (0 when there is none).

        The density is treated as constant at its cutoff value over the last
        stretch of the support; for the triangle-area law the density is
        smooth and finite there, so the error is second order in the gap.
        """
        if self.upper_cutoff is None:
            return 0.0
        hi = self.bounds[0][1]
        return self._cutoff_pdf() * (hi - self.upper_cutoff)

    def total_mass(self) -> float:
        """Quadrature mass plus the tail estimate; should be 1."""
        return float(self._table[1][-1]) + self.tail_mass()

    def cdf(self, x):
        """Cumulative distribution, cubic Hermite between exact quadrature nodes."""
        nodes, cum, slopes = self._table
        x = np.asarray(x, dtype=np.float64)
        lo, hi = self.bounds[0]
        t = np.clip(self.mapping.inverse(np.clip(x, lo, hi)), nodes[0], nodes[-1])
        h = nodes[1] - nodes[0]
        i = np.clip(((t - nodes[0]) / h).astype(np.int64), 0, len(nodes) - 2)
        s = (t - nodes[i]) / h
        h00 = (1 + 2 * s) * (1 - s) ** 2
        h10 = s * (1 - s) ** 2
        h01 = s**2 * (3 - 2 * s)
        h11 = s**2 * (s - 1)
        val = h00 * cum[i] + h10 * h * slopes[i] + h01 * cum[i + 1] + h11 * h * slopes[i + 1]
        if self.upper_cutoff is not None:
            above = x > self.upper_cutoff
            if np.any(above):
                slope = self._cutoff_pdf()
                val = np.where(above, cum[-1] + slope * (np.minimum(x, hi) - self.upper_cutoff), val)
        val = np.where(x <= lo, 0.0, val)
        if self.upper_cutoff is None:
            val = np.where(x >= hi, cum[-1], val)
        return _out(val)

    def expectation(self, g: Callable[[float], float]) -> float:
        """``E[g(X)]`` by quadrature in the mapped coordinate (plus tail estimate)."""
        nodes = self._table[0]
        fwd = self.mapping.forward

        def integrand(t):
            return float(g(float(fwd(t)))) * self._scalar_t(t)

        val = math.fsum(
            integrate(integrand, nodes[i], nodes[i + 1], self.quadrature)
            for i in range(len(nodes) - 1)
        )
        if self.upper_cutoff is not None:
            hi = self.bounds[0][1]
            val += g(0.5 * (self.upper_cutoff + hi)) * self.tail_mass()
        return val

    def moment(self, k: int) -> float:
        return self.expectation(lambda x: x**k)


# -- moment registry ----------------------------------------------------------


@dataclass(frozen=True)
class MomentEntry:
    id: str
    expression: str
    value: float
    paper_location: str
    conjecture: bool = False


_ES = 6 / PI - 24 / PI**3
_ES2 = 2 - 3 / PI**2
_EST = 12 / PI**2

MOMENTS: dict[str, MomentEntry] = {
    e.id: e
    for e in [
        MomentEntry("SIDE_MEAN", "6/π − 24/π³", _ES, "§1 Sides"),
        MomentEntry("SIDE_M2", "2 − 3/π²", _ES2, "§1 Sides"),
        MomentEntry("SIDE_S2S3_PRODUCT", "48/π² − 384/π⁴", 48 / PI**2 - 384 / PI**4, "§1 Sides"),
        MomentEntry("SIDE_S1S2_PRODUCT", "−24/π² + 384/π⁴", -24 / PI**2 + 384 / PI**4, "§1 Sides"),
        MomentEntry("SIDE_ADJ_PRODUCT", "12/π²", _EST, "§1 Sides"),
        MomentEntry("SIDE_OPP_PRODUCT", "12/π²", _EST, "§1 Sides"),
        MomentEntry(
            "SIDE_ADJ_CORR",
            "(12/π² − E(s)²)/(E(s²) − E(s)²)",
            (_EST - _ES**2) / (_ES2 - _ES**2),
            "§1 Sides",
        ),
        MomentEntry("DIAG_MEAN", "48/π³", 48 / PI**3, "§1 Sides"),
        MomentEntry("DIAG_M2", "2 + 6/π²", 2 + 6 / PI**2, "§1 Sides"),
        MomentEntry("ANGLE_MEAN", "π/2", PI / 2, "§2 Angles"),
        MomentEntry("TENT_CROSS", "π²/4", PI**2 / 4, "§2 Angles"),
        MomentEntry("TENT_RHO", "0", 0.0, "§2 Angles"),
        MomentEntry("TENT_JOINT_QUARTER", "1/32", 1 / 32, "§2 Angles"),
        MomentEntry("TENT_MARGINAL_QUARTER", "5/32", 5 / 32, "§2 Angles"),
        MomentEntry("TRI_ANGLE_RHO", "−1/2", -0.5, "§3 Looking Back"),
        MomentEntry("PENT_RHO_ADJ", "1/6", 1 / 6, "§4 Looking Forward"),
        MomentEntry("PENT_RHO_NONADJ", "−2/3", -2 / 3, "§4 Looking Forward"),
        MomentEntry("HEX_RHO_ADJ", "1/4", 0.25, "§4 Looking Forward", conjecture=True),
        MomentEntry("HEX_RHO_GAMMA", "−1/2", -0.5, "§4 Looking Forward", conjecture=True),
        MomentEntry("HEX_RHO_DELTA", "−1/2", -0.5, "§4 Looking Forward", conjecture=True),
        MomentEntry("TRI_AREA_MEAN", "3/(2π)", 3 / (2 * PI), "§5 Area"),
        MomentEntry("TRI_AREA_M2", "3/8", 3 / 8, "§5 Area"),
        MomentEntry("QUAD_AREA_MEAN", "3/π", 3 / PI, "§5 Area"),
        MomentEntry("QUAD_AREA_M2", "1/2 + 105/(16π²)", 0.5 + 105 / (16 * PI**2), "§5 Area"),
        MomentEntry("QUAD_AREA_TWICE_TRI", "2", 2.0, "§5 Area"),
    ]
}


def closed_form_moment(id: str) -> float:
    try:
        return MOMENTS[id].value
    except KeyError:
        raise UnknownNameError(f"unknown moment id {id!r}") from None


# -- density registry ---------------------------------------------------------

_SQ = ((0.0, PI), (0.0, PI))


def _m(*ids):
    return tuple(Moment(i, MOMENTS[i].expression, MOMENTS[i].value) for i in ids)


def _build_densities() -> dict[str, AnalyticDensity]:
    d: list[AnalyticDensity] = []
    for which in (21, 31, 41):
        d.append(
            AnalyticDensity(
                f"gap{which}", 1, "(0, 1)", lambda u, w=which: gap_pdf(w, u),
                "§1 Sides", ((0.0, 1.0),), pdf_t=_GAP_LAWS[which],
            )
        )
    d += [
        AnalyticDensity(
            "side", 1, "[0, 2)", side_pdf, "§1 Sides", ((0.0, 2.0),),
            pdf_t=_side_t, mapping=_ARCSINE, known_moments=_m("SIDE_MEAN", "SIDE_M2"),
        ),
        AnalyticDensity(
            "side_s2", 1, "[0, 2)", side_s2_pdf, "§1 Sides", ((0.0, 2.0),),
            pdf_t=_side_s2_t, mapping=_ARCSINE,
        ),
        AnalyticDensity(
            "diagonal", 1, "[0, 2)", diagonal_pdf, "§1 Sides", ((0.0, 2.0),),
            pdf_t=_diagonal_t, mapping=_ARCSINE, known_moments=_m("DIAG_MEAN", "DIAG_M2"),
        ),
        AnalyticDensity(
            "angle", 1, "(0, π)", angle_pdf, "§2 Angles", ((0.0, PI),),
            pdf_t=lambda x: 6.0 * x * (PI - x) / PI**3, known_moments=_m("ANGLE_MEAN"),
        ),
        AnalyticDensity("angle_alpha2", 1, "(0, π)", angle_alpha2_pdf, "§2 Angles", ((0.0, PI),),
                        pdf_t=lambda x: 12.0 * x * (PI - x) ** 2 / PI**4),
        AnalyticDensity("angle_alpha1", 1, "(0, π)", angle_alpha1_pdf, "§2 Angles", ((0.0, PI),),
                        pdf_t=lambda x: 12.0 * x**2 * (PI - x) / PI**4),
        AnalyticDensity(
            "triangle_side_marginal", 1, "[0, 2)", triangle_side_marginal_pdf,
            "§3 Looking Back", ((0.0, 2.0),), pdf_t=_tri_side_t, mapping=_ARCSINE,
        ),
        AnalyticDensity(
            "triangle_area", 1, "(0, 3√3/4)", triangle_area_pdf, "§5 Area",
            ((0.0, TRI_AREA_MAX),),
            pdf_t=lambda t: triangle_area_pdf(_area_forward(t)) * _area_jacobian(t),
            mapping=_AREA_MAP,
            known_moments=_m("TRI_AREA_MEAN", "TRI_AREA_M2"),
            upper_cutoff=TRI_AREA_MAX * (1.0 - 1e-6),
            table_size=128,
        ),
        AnalyticDensity("tent", 2, "(0, π)²", tent_pdf, "§2 Angles", _SQ,
                        known_moments=_m("TENT_CROSS", "TENT_RHO")),
        AnalyticDensity("triangle_angles", 2, "α, β > 0, α + β < π", triangle_angle_pdf,
                        "§3 Looking Back", _SQ, known_moments=_m("TRI_ANGLE_RHO")),
        AnalyticDensity("triangle_sides", 2, "(0, 2)²", triangle_side_joint_pdf,
                        "§3 Looking Back", ((0.0, 2.0), (0.0, 2.0))),
        AnalyticDensity("quad_angles", 3, "tetrahedron (0,0,0), (0,π,π), (π,0,π), (π,π,0)",
                        quad_angle_joint_pdf, "§5 Area", ((0.0, PI),) * 3, conjecture=True),
    ]
    for pair in _PAIR_LAWS:
        d.append(
            AnalyticDensity(
                f"orderstat_{pair[0]}{pair[1]}", 2, "0 < x < y < 1",
                lambda x, y, p=pair: orderstat_pair_pdf(p, x, y), "§1 Sides",
                ((0.0, 1.0), (0.0, 1.0)),
            )
        )
    return {x.name: x for x in d}


DENSITIES = _build_densities()


def get_density(name: str) -> AnalyticDensity:
    try:
        return DENSITIES[name]
    except KeyError:
        raise UnknownNameError(
            f"unknown density {name!r}; known: {', '.join(sorted(DENSITIES))}"
        ) from None
