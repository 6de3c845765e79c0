import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclicpoly import analytic as an

PI = math.pi


@pytest.fixture(autouse=True)
def _precision():
    # the code under test returns doubles, so quadrature of its output runs at double precision
    with mp.workdps(15):
        yield


def mp_side(s):
    t = mp.asin(s / 2)
    return 3 / (mp.pi * mp.sqrt(4 - s * s)) * (1 - 2 * t * (mp.pi - t) / mp.pi**2)


def mp_diagonal(z):
    t = mp.asin(z / 2)
    return 4 / (mp.pi * mp.sqrt(4 - z * z)) * 3 * t * (mp.pi - t) / mp.pi**2


@mp.workdps(30)
def chord_moment(pdf, k):
    return mp.quad(lambda z: z**k * pdf(z), [0, 1, 2])


@pytest.mark.parametrize("ours, oracle", [(an.side_pdf, mp_side), (an.diagonal_pdf, mp_diagonal)])
def test_chord_pdfs_match_transcription(ours, oracle):
    for z in np.linspace(0.0, 2.0 - 1e-9, 41):
        assert ours(z) == pytest.approx(float(oracle(mp.mpf(z))), rel=1e-12)


@mp.workdps(30)
def mp_area_pdf(x):
    """8xK(4x²) evaluated with mpmath's own Γ and ₂F₁."""
    x = mp.mpf(x)
    y = 4 * x * x
    z = 4 * y / 27
    k = (
        mp.gamma(mp.mpf(1) / 3) ** 3 * z ** (-mp.mpf(1) / 6) * mp.hyp2f1(mp.mpf(1) / 3, mp.mpf(1) / 3, mp.mpf(2) / 3, z)
        - 3 * mp.gamma(mp.mpf(2) / 3) ** 3 * z ** (mp.mpf(1) / 6) * mp.hyp2f1(mp.mpf(2) / 3, mp.mpf(2) / 3, mp.mpf(4) / 3, z)
    ) / (4 * mp.pi**3 * mp.sqrt(y))
    return 8 * x * k


# -- pointwise values ---------------------------------------------------------


def test_orderstat_pair_values():
    assert an.orderstat_pair_pdf((1, 2), 0.2, 0.5) == pytest.approx(3.0)
    assert an.orderstat_pair_pdf((1, 4), 0.5, 0.2) == 0.0


@pytest.mark.parametrize("pair", [(1, 2), (1, 3), (1, 4), (2, 4)])
def test_orderstat_pair_normalised(pair):
    f = lambda x, y: an.orderstat_pair_pdf(pair, float(x), float(y))  # noqa: E731
    total = mp.quad(lambda x: mp.quad(lambda y: f(x, y), [x, 1]), [0, 1])
    assert float(total) == pytest.approx(1.0, abs=1e-9)


def test_orderstat_unknown_pair():
    with pytest.raises(an.UnknownNameError):
        an.orderstat_pair_pdf((2, 3), 0.1, 0.2)


def test_gap_values():
    assert an.gap_pdf(21, 0.5) == pytest.approx(0.5)
    assert an.gap_pdf(31, 0.0) == 0.0
    assert an.gap_pdf(31, 1.0) == 0.0
    assert float(mp.quad(lambda u: u * an.gap_pdf(21, float(u)), [0, 1])) == pytest.approx(0.2, abs=1e-12)
    with pytest.raises(an.UnknownNameError):
        an.gap_pdf(32, 0.5)


def test_side_values():
    assert an.side_pdf(0.0) == pytest.approx(3 / (2 * PI))
    assert an.side_pdf(1.0) == pytest.approx(13 / (6 * PI * math.sqrt(3)))
    assert an.get_density("side").cdf(2.0) == pytest.approx(1.0, abs=1e-12)


def test_side_is_mixture_of_single_gap_and_wraparound_laws():
    s = np.linspace(0.01, 1.99, 50)
    assert np.allclose(an.side_pdf(s), 0.75 * an.side_s2_pdf(s) + 0.25 * an.diagonal_pdf(s))


def test_diagonal_values():
    assert an.diagonal_pdf(0.0) == 0.0
    assert an.diagonal_pdf(1.0) == pytest.approx(5 / (3 * PI * math.sqrt(3)))
    assert float(chord_moment(mp_diagonal, 1)) == pytest.approx(48 / PI**3, abs=1e-14)
    assert float(chord_moment(mp_diagonal, 2)) == pytest.approx(2 + 6 / PI**2, abs=1e-14)


def test_angle_values():
    assert an.angle_pdf(0.0) == 0.0
    assert an.angle_pdf(PI / 2) == pytest.approx(3 / (2 * PI))
    assert float(mp.quad(lambda x: an.angle_pdf(float(x)), [0, PI])) == pytest.approx(1.0, abs=1e-12)


def test_angle_is_average_of_vertex_laws():
    x = np.linspace(0.05, 3.0, 30)
    assert np.allclose(an.angle_pdf(x), 0.5 * (an.angle_alpha1_pdf(x) + an.angle_alpha2_pdf(x)))


def test_tent_values():
    assert an.tent_pdf(PI / 2, PI / 2) == pytest.approx(3 / PI**2)
    assert an.tent_pdf(0.1 * PI, 0.95 * PI) == pytest.approx(0.3 / PI**2)


@given(st.floats(0.0, PI), st.floats(0.0, PI))
def test_tent_cases_equal_min_form(a, b):
    assert an.tent_pdf(a, b) == pytest.approx(an.tent_min_form(a, b), abs=1e-15)
    assert an.tent_pdf(a, b) == an.tent_pdf(b, a)


def tent_integral(g, a_hi=PI, b_hi=PI):
    """∫∫ g(a, b) tent(a, b) with inner breakpoints on the kinks b = a and b = π − a."""
    def inner(a):
        knots = sorted({0.0, min(float(a), PI - float(a)), max(float(a), PI - float(a)), b_hi})
        knots = [k for k in knots if k <= b_hi]
        return mp.quad(lambda b: g(a, b) * an.tent_pdf(float(a), float(b)), knots)

    return mp.quad(inner, [0, min(PI / 2, a_hi), a_hi] if a_hi > PI / 2 else [0, a_hi])


def test_tent_normalised_with_angle_marginal():
    f = lambda a, b: an.tent_pdf(float(a), float(b))  # noqa: E731
    total = tent_integral(lambda a, b: 1)
    assert float(total) == pytest.approx(1.0, abs=1e-9)
    for a in (0.3, 1.2, 2.5):
        marg = mp.quad(lambda b: f(a, b), [0, a, PI - a, PI] if a < PI / 2 else [0, PI - a, a, PI])
        assert float(marg) == pytest.approx(an.angle_pdf(a), abs=1e-10)


def test_tent_moments_and_dependence_witness():
    cross = tent_integral(lambda a, b: a * b)
    assert float(cross) == pytest.approx(PI**2 / 4, abs=1e-8)
    joint = tent_integral(lambda a, b: 1, PI / 4, PI / 4)
    marg = mp.quad(lambda a: an.angle_pdf(float(a)), [0, PI / 4])
    assert float(joint) == pytest.approx(an.MOMENTS["TENT_JOINT_QUARTER"].value, abs=1e-10)
    assert float(marg) == pytest.approx(an.MOMENTS["TENT_MARGINAL_QUARTER"].value, abs=1e-10)
    assert float(joint - marg**2) > 0.006


def test_triangle_angle_values():
    assert an.triangle_angle_pdf(PI / 3, PI / 3) == pytest.approx(2 / PI**2)
    assert an.triangle_angle_pdf(3 * PI / 4, PI / 2) == 0.0


def test_triangle_side_values():
    assert an.triangle_side_joint_pdf(1.0, 1.0) == pytest.approx(4 / (3 * PI**2))
    assert an.triangle_side_joint_pdf(0.0, 0.0) == pytest.approx(1 / PI**2)
    rng = np.random.default_rng(0)
    a, b = rng.uniform(0, 2, 100), rng.uniform(0, 2, 100)
    prod = an.triangle_side_marginal_pdf(a) * an.triangle_side_marginal_pdf(b)
    assert np.allclose(an.triangle_side_joint_pdf(a, b), prod, rtol=1e-14)


def test_quad_angle_values():
    assert an.quad_angle_joint_pdf(PI / 2, PI / 2, PI / 2) == pytest.approx(3 / PI**3)
    assert an.quad_angle_joint_pdf(PI / 4, PI / 4, 3 * PI / 4) == 0.0


def test_quad_angle_normalised():
    # Monte Carlo volume of the tetrahedron inside the cube, independent of the pdf code
    pts = np.random.default_rng(1).uniform(0, PI, (2_000_000, 3))
    vol = an.in_tetrahedron(*pts.T).mean() * PI**3
    assert vol * 3 / PI**3 == pytest.approx(1.0, abs=3e-3)


# -- triangle area ------------------------------------------------------------


def test_triangle_area_support():
    assert an.triangle_area_pdf(0.0) == 0.0
    assert an.triangle_area_pdf(-1.0) == 0.0
    assert an.triangle_area_pdf(an.TRI_AREA_MAX) == 0.0
    assert an.triangle_area_pdf(2.0) == 0.0


@pytest.mark.parametrize("x", [1e-4, 0.05, 0.3, 0.6, 0.9, 1.2, 1.29])
def test_triangle_area_against_mpmath(x):
    assert an.triangle_area_pdf(x) == pytest.approx(float(mp_area_pdf(x)), rel=1e-10)


def test_triangle_area_moments_by_quadrature():
    d = an.get_density("triangle_area")
    assert d.moment(1) == pytest.approx(3 / (2 * PI), abs=1e-6)
    assert d.moment(2) == pytest.approx(3 / 8, abs=1e-6)
    assert d.total_mass() == pytest.approx(1.0, abs=1e-6)
    assert 0 < d.tail_mass() < 1e-5


def test_triangle_area_mass_matches_mpmath():
    x = 0.8
    with mp.workdps(30):
        want = mp.quad(mp_area_pdf, [0, 0.2, 0.5, x])
    assert float(an.get_density("triangle_area").cdf(x)) == pytest.approx(float(want), abs=1e-9)


# -- density objects ----------------------------------------------------------

ONE_D = [n for n, d in an.DENSITIES.items() if d.dim == 1]


@pytest.mark.parametrize("name", ONE_D)
def test_cdf_monotone_and_normalised(name):
    d = an.get_density(name)
    lo, hi = d.bounds[0]
    x = np.linspace(lo, hi, 400)
    c = np.asarray(d.cdf(x))
    assert c[0] == pytest.approx(0.0, abs=1e-12)
    assert c[-1] == pytest.approx(1.0, abs=1e-6 if name == "triangle_area" else 1e-12)
    assert np.all(np.diff(c) >= -1e-15)


@pytest.mark.parametrize("name", [n for n in ONE_D if n != "triangle_area"])
def test_cdf_against_mpmath(name):
    d = an.get_density(name)
    lo, hi = d.bounds[0]
    for frac in (0.1, 0.37, 0.8):
        x = lo + frac * (hi - lo)
        want = mp.quad(lambda t: d.pdf(float(t)), [lo, x])
        assert float(d.cdf(x)) == pytest.approx(float(want), abs=1e-10)


@pytest.mark.parametrize("name", ONE_D)
def test_known_moments(name):
    d = an.get_density(name)
    for m in d.known_moments:
        k = 2 if m.descriptor.endswith("M2") else 1
        assert d.moment(k) == pytest.approx(m.value, abs=1e-6)


def test_unknown_density():
    with pytest.raises(an.UnknownNameError):
        an.get_density("hexagon_area")


# -- moment registry ----------------------------------------------------------


def test_moment_registry_values():
    es, es2 = 6 / PI - 24 / PI**3, 2 - 3 / PI**2
    assert an.closed_form_moment("SIDE_MEAN") == pytest.approx(1.1358225, abs=2e-7)
    assert an.closed_form_moment("QUAD_AREA_M2") == pytest.approx(1.1649202, abs=1e-7)
    rho = an.closed_form_moment("SIDE_ADJ_CORR")
    assert rho == pytest.approx((12 / PI**2 - es**2) / (es2 - es**2))
    assert abs(rho - (-0.183)) <= 0.001


def test_side_moments_by_mpmath():
    m1 = chord_moment(mp_side, 1)
    m2 = chord_moment(mp_side, 2)
    assert float(m1) == pytest.approx(an.closed_form_moment("SIDE_MEAN"), abs=1e-14)
    assert float(m2) == pytest.approx(an.closed_form_moment("SIDE_M2"), abs=1e-14)


def test_adjacent_side_product_by_mpmath():
    # exchangeable gaps are Dirichlet(1,1,1,1): pair density 6(1-u-v) on the simplex
    f = lambda u, v: 4 * mp.sin(mp.pi * u) * mp.sin(mp.pi * v) * 6 * (1 - u - v)  # noqa: E731
    val = mp.quad(lambda u: mp.quad(lambda v: f(u, v), [0, 1 - u]), [0, 1])
    assert float(val) == pytest.approx(an.closed_form_moment("SIDE_ADJ_PRODUCT"), abs=1e-10)


def test_dirichlet_angle_correlations():
    # angle k is π minus half the two exchangeable gaps beside vertex k
    for n, lag, key in [(5, 1, "PENT_RHO_ADJ"), (5, 2, "PENT_RHO_NONADJ"), (6, 1, "HEX_RHO_ADJ"),
                        (6, 2, "HEX_RHO_GAMMA"), (6, 3, "HEX_RHO_DELTA"), (3, 1, "TRI_ANGLE_RHO")]:
        cov = np.full((n, n), -1.0 / (n * n * (n + 1)))
        np.fill_diagonal(cov, (n - 1) / (n * n * (n + 1)))
        w0 = np.zeros(n)
        w0[[n - 1, 0]] = 1
        wl = np.roll(w0, lag)
        rho = (w0 @ cov @ wl) / (w0 @ cov @ w0)
        assert rho == pytest.approx(an.closed_form_moment(key), abs=1e-12), key


def test_conjecture_flags_in_registry():
    flagged = {k for k, v in an.MOMENTS.items() if v.conjecture}
    assert flagged == {"HEX_RHO_ADJ", "HEX_RHO_GAMMA", "HEX_RHO_DELTA"}
    assert an.get_density("quad_angles").conjecture


def test_unknown_moment():
    with pytest.raises(an.UnknownNameError):
        an.closed_form_moment("NOPE")


def test_tent_cases_exact_on_random_points():
    rng = np.random.default_rng(12)
    a, b = rng.uniform(0, PI, (2, 10_000))
    assert np.array_equal(an.tent_pdf(a, b), an.tent_min_form(a, b))


@pytest.mark.parametrize("a, b", [(0.3, 1.1), (2.0, 2.9), (1.5, 0.2), (2.5, 0.9)])
def test_quad_angle_pair_marginals_are_tent(a, b):
    # breakpoints at every face the third coordinate can cross
    knots = sorted({0.0, PI, *(k for k in (abs(a - b), a + b, 2 * PI - a - b) if 0 < k < PI)})
    f = an.quad_angle_joint_pdf
    m_ab = mp.quad(lambda w: f(a, b, float(w)), knots)
    m_aw = mp.quad(lambda w: f(a, float(w), b), knots)  # the support is symmetric in its coordinates
    assert float(m_ab) == pytest.approx(an.tent_pdf(a, b), abs=1e-12)
    assert float(m_aw) == pytest.approx(an.tent_pdf(a, b), abs=1e-12)
