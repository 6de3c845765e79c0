"""Uniform random cyclic polygons on the unit circle and their measurements.

Conventions (1-based in the docs, 0-based in arrays):

* ``theta`` holds the sorted central angles ``0 <= θ1 < ... < θn < 2π``;
  ``θ0 = θn - 2π`` and ``θ(n+1) = θ1 + 2π``.
* gap ``g_k = θ(k+1) - θk``; the last gap wraps around through angle 0.
* side ``s_k = 2 sin((θk - θ(k-1)) / 2)`` is the chord spanning gap ``g(k-1)``,
  so ``s_1`` spans the wrap-around gap.
* interior angle ``α_k = π - (θ(k+1) - θ(k-1)) / 2`` is the polygon angle at
  vertex k (inscribed angle on the arc not containing the vertex).
* for quadrilaterals, diagonal ``d_k = 2 sin(α_k)`` for k = 1, 2 (``d_1``
  joins vertices 2 and 4, ``d_2`` joins 1 and 3) and ``ω = (g1 + g3) / 2`` is
  the angle between the diagonals that faces sides ``s_2`` and ``s_4``.

Labelling from angle 0 size-biases the wrap-around gap. Statements about an
*arbitrary* side or angle therefore need a uniformly random cyclic relabelling
(:func:`relabel`), after which the normalised gaps are Dirichlet(1, ..., 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

__all__ = [
    "TWO_PI",
    "GeometryError",
    "RngStream",
    "CentralAngles",
    "GapVector",
    "PolygonMeasurements",
    "BatchMeasurements",
    "sample_central_angles",
    "sample_theta",
    "gaps",
    "measure",
    "measure_batch",
    "relabel",
    "angles_from_sides",
    "third_side_triangle",
    "shoelace_area",
]

TWO_PI = 2.0 * math.pi
_IDENTITY_TOL = 1e-9


class GeometryError(ValueError):
    """Invalid polygon input or a violated geometric identity."""


@dataclass(frozen=True)
class RngStream:
    """Reproducible random stream addressed by ``(master_seed, stream_index)``.

    Streams are Philox (counter-based) generators keyed through
    ``numpy.random.SeedSequence``; distinct ``(channel, stream_index)`` pairs
    under one master seed never overlap. ``channel`` lets independent
    experiments share block indices without sharing draws.
    """

    master_seed: int
    stream_index: int = 0
    channel: int = 0

    def __post_init__(self):
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("master_seed must be a 64-bit unsigned integer")
        if self.stream_index < 0 or self.channel < 0:
            raise ValueError("stream_index and channel must be non-negative")

    def generator(self) -> np.random.Generator:
        seq = np.random.SeedSequence(
            self.master_seed, spawn_key=(self.channel, self.stream_index)
        )
        return np.random.Generator(np.random.Philox(seq))


@dataclass(frozen=True)
class CentralAngles:
    theta: tuple[float, ...]

    def __post_init__(self):
        th = tuple(float(t) for t in self.theta)
        object.__setattr__(self, "theta", th)
        if len(th) < 3:
            raise GeometryError("a polygon needs at least 3 vertices")
        if th[0] < 0 or th[-1] >= TWO_PI:
            raise GeometryError("central angles must lie in [0, 2π)")
        if any(b <= a for a, b in zip(th, th[1:])):
            raise GeometryError("central angles must be strictly increasing")

    @property
    def n(self) -> int:
        return len(self.theta)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.theta, dtype=np.float64)


@dataclass(frozen=True)
class GapVector:
    g: tuple[float, ...]

    def __post_init__(self):
        if any(x <= 0 for x in self.g):
            raise GeometryError("gaps must be positive")
        if abs(math.fsum(self.g) - TWO_PI) > 1e-12:
            raise GeometryError("gaps must sum to 2π")

    def normalized(self) -> tuple[float, ...]:
        return tuple(x / TWO_PI for x in self.g)


@dataclass(frozen=True)
class PolygonMeasurements:
    sides: tuple[float, ...]
    interior_angles: tuple[float, ...]
    perimeter: float
    area: float
    diagonals: tuple[float, float] | None = None
    omega: float | None = None
    area_trig: float | None = field(default=None, repr=False)

    @property
    def omega_min(self) -> float | None:
        """The acute-or-right reading of the diagonal angle, ``min(ω, π - ω)``."""
        if self.omega is None:
            return None
        return min(self.omega, math.pi - self.omega)


def sample_theta(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` sorted rows of ``n`` uniform central angles in ``[0, 2π)``.

    Rows containing a repeated value (or a product rounding up to 2π) are
    redrawn whole.
    """
    if n < 3:
        raise GeometryError(f"polygon order must be at least 3, got {n}")
    theta = np.sort(rng.random((count, n)) * TWO_PI, axis=1)
    while True:
        bad = (np.diff(theta, axis=1) <= 0).any(axis=1) | (theta[:, -1] >= TWO_PI)
        if not bad.any():
            return theta
        theta[bad] = np.sort(rng.random((int(bad.sum()), n)) * TWO_PI, axis=1)


def sample_central_angles(n: int, rng: RngStream | np.random.Generator) -> CentralAngles:
    gen = rng.generator() if isinstance(rng, RngStream) else rng
    return CentralAngles(tuple(sample_theta(n, 1, gen)[0]))


def gaps(theta: np.ndarray) -> np.ndarray:
    """Gap array ``g[..., k] = θ(k+1) - θk`` with the last gap wrapping."""
    theta = np.asarray(theta, dtype=np.float64)
    nxt = np.roll(theta, -1, axis=-1)
    g = nxt - theta
    g[..., -1] += TWO_PI
    return g


def relabel(values: np.ndarray, shift: np.ndarray) -> np.ndarray:
    """Cyclically rotate each row: ``out[i, k] = values[i, (k + shift[i]) % n]``."""
    values = np.asarray(values)
    n = values.shape[-1]
    idx = (np.arange(n)[None, :] + np.asarray(shift)[:, None]) % n
    return np.take_along_axis(values, idx, axis=-1)


@dataclass
class BatchMeasurements:
    """Column arrays for a batch of polygons (rows = polygons)."""

    theta: np.ndarray
    gaps: np.ndarray
    sides: np.ndarray
    angles: np.ndarray
    perimeter: np.ndarray
    area: np.ndarray
    diagonals: np.ndarray | None = None
    omega: np.ndarray | None = None

    @property
    def n(self) -> int:
        return self.theta.shape[1]

    def area_trig(self) -> np.ndarray | None:
        """Area from the angle identities (triangles and quadrilaterals only)."""
        if self.n == 3:
            a, b = self.angles[:, 0], self.angles[:, 1]
            return 2.0 * np.sin(a) * np.sin(b) * np.sin(a + b)
        if self.n == 4:
            return 2.0 * np.sin(self.angles[:, 1]) * np.sin(self.angles[:, 2]) * np.sin(self.omega)
        return None


def shoelace_area(theta: np.ndarray) -> np.ndarray:
    """Polygon area from vertices ``(cos θk, sin θk)`` by the shoelace formula."""
    theta = np.asarray(theta, dtype=np.float64)
    x, y = np.cos(theta), np.sin(theta)
    x1, y1 = np.roll(x, -1, axis=-1), np.roll(y, -1, axis=-1)
    return 0.5 * np.sum(x * y1 - x1 * y, axis=-1)


def measure_batch(theta: np.ndarray) -> BatchMeasurements:
    theta = np.atleast_2d(np.asarray(theta, dtype=np.float64))
    n = theta.shape[1]
    g = gaps(theta)
    # s_k spans g_(k-1); column 0 is the wrap-around gap
    g_prev = np.roll(g, 1, axis=1)
    sides = 2.0 * np.sin(0.5 * g_prev)
    angles = math.pi - 0.5 * (g_prev + g)
    out = BatchMeasurements(
        theta=theta,
        gaps=g,
        sides=sides,
        angles=angles,
        perimeter=sides.sum(axis=1),
        area=shoelace_area(theta),
    )
    if n == 4:
        out.diagonals = 2.0 * np.sin(angles[:, :2])
        out.omega = 0.5 * (g[:, 0] + g[:, 2])
    return out


def measure(angles: CentralAngles) -> PolygonMeasurements:
    """All derived geometry of one polygon.

    For triangles and quadrilaterals the trigonometric area is checked
    against the shoelace area and a :class:`GeometryError` is raised if they
    disagree by more than 1e-9.
    """
    b = measure_batch(angles.as_array()[None, :])
    area = float(b.area[0])
    trig = b.area_trig()
    area_trig = None if trig is None else float(trig[0])
    if area_trig is not None and abs(area_trig - area) > _IDENTITY_TOL:
        raise GeometryError(f"trig area {area_trig!r} disagrees with shoelace {area!r}")
    return PolygonMeasurements(
        sides=tuple(b.sides[0].tolist()),
        interior_angles=tuple(b.angles[0].tolist()),
        perimeter=float(b.perimeter[0]),
        area=area,
        diagonals=None if b.diagonals is None else tuple(b.diagonals[0].tolist()),
        omega=None if b.omega is None else float(b.omega[0]),
        area_trig=area_trig,
    )


def _half_angle(num1, num2, den1, den2):
    return 2.0 * np.arctan(np.sqrt((num1 * num2) / (den1 * den2)))


def angles_from_sides(a, b, c, d):
    """Angles of a cyclic quadrilateral with successive sides ``a, b, c, d``.

    Returns ``(alpha, beta, omega)``: the angle between ``a`` and ``b``, the
    angle between ``b`` and ``c``, and the angle between the diagonals facing
    sides ``a`` and ``c``, from the tangent half-angle formulas. Accepts
    scalars or equal-shape arrays.
    """
    a, b, c, d = (np.asarray(v, dtype=np.float64) for v in (a, b, c, d))
    p = -a + b + c + d
    q = a - b + c + d
    r = a + b - c + d
    s = a + b + c - d
    if np.any(np.minimum(np.minimum(p, q), np.minimum(r, s)) <= 0):
        raise GeometryError("sides do not form a cyclic quadrilateral (a factor is <= 0)")
    alpha = _half_angle(p, q, r, s)
    beta = _half_angle(q, r, p, s)
    omega = _half_angle(q, s, p, r)
    if alpha.ndim == 0:
        return float(alpha), float(beta), float(omega)
    return alpha, beta, omega


def third_side_triangle(a, b, branch: Literal["plus", "minus"]):
    """Third side of a unit-circle triangle with sides ``a`` and ``b``.

    The two branches correspond to the two inscribed triangles sharing the
    chords ``a`` and ``b``; each occurs with probability 1/2 for a uniform
    random triangle.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if np.any((a <= 0) | (a > 2) | (b <= 0) | (b > 2)):
        raise GeometryError("triangle sides must lie in (0, 2]")
    u = a * np.sqrt(4.0 - b * b)
    v = b * np.sqrt(4.0 - a * a)
    if branch == "plus":
        out = 0.5 * (u + v)
    elif branch == "minus":
        out = 0.5 * np.abs(u - v)
    else:
        raise ValueError(f"branch must be 'plus' or 'minus', got {branch!r}")
    return float(out) if out.ndim == 0 else out
