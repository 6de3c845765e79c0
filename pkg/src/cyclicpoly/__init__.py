"""Distribution theory of uniform random cyclic polygons: samplers, closed-form
densities and moments, and a Monte Carlo claims harness."""

from .analytic import DENSITIES, MOMENTS, AnalyticDensity, closed_form_moment, get_density
from .claims import ClaimResult, list_claims, run_all, run_claim
from .geometry import (
    CentralAngles,
    GapVector,
    PolygonMeasurements,
    RngStream,
    angles_from_sides,
    measure,
    sample_central_angles,
)
from .special import gamma, gauss_2f1, integrate

__all__ = [
    "AnalyticDensity",
    "CentralAngles",
    "ClaimResult",
    "DENSITIES",
    "GapVector",
    "MOMENTS",
    "PolygonMeasurements",
    "RngStream",
    "angles_from_sides",
    "closed_form_moment",
    "gamma",
    "gauss_2f1",
    "get_density",
    "integrate",
    "list_claims",
    "measure",
    "run_all",
    "run_claim",
    "sample_central_angles",
]
__version__ = "0.1.0"
