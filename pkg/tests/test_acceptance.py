"""The fourteen acceptance criteria, each at its stated sample size and tolerance.

Every criterion prints one ``[PASS]``/``[FAIL]`` line; under pytest the lines
are repeated in an "acceptance criteria" section of the terminal summary.
Run directly with ``python3 tests/test_acceptance.py`` for just the lines.
"""

import json
import math
import sys

import pytest

from cyclicpoly import claims as cl

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # executed as a script
    ACCEPTANCE_LINES = []

SEED = 20_241_016
WORKERS = 4
PI = math.pi
_cache: dict = {}


def result(cid, n=None):
    key = (cid, n)
    if key not in _cache:
        _cache[key] = cl.run_claim(cid, n, SEED, WORKERS)
    return _cache[key]


def within_4se(r) -> bool:
    return abs(r.estimate - r.analytic) <= 4.0 * r.stderr


def z_text(r) -> str:
    return f"{r.claim_id} est={r.estimate:.7g} target={r.analytic:.7g} z={r.statistic:+.2f}"


def record(k: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] AC{k:02d} {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def moment_group(k, title, ids, n=1_000_000):
    rs = [result(c, n) for c in ids]
    ok = all(within_4se(r) and r.n_samples == n for r in rs)
    record(k, title, ok, "; ".join(z_text(r) for r in rs))


def test_ac01_side_mean():
    moment_group(1, "E(s) = 6/π − 24/π³ within 4 stderr, n=10⁶", ["SIDE_MEAN"])


def test_ac02_side_and_diagonal_moments():
    moment_group(2, "E(s²), E(d), E(d²) within 4 stderr, n=10⁶", ["SIDE_M2", "DIAG_MEAN", "DIAG_M2"])


def test_ac03_side_products():
    moment_group(3, "adjacent and opposite side products = 12/π²", ["SIDE_ADJ_PRODUCT", "SIDE_OPP_PRODUCT"])
    assert result("SIDE_ADJ_PRODUCT", 1_000_000).analytic == pytest.approx(12 / PI**2)


def test_ac04_side_correlation():
    r = result("SIDE_ADJ_CORR", 1_000_000)
    es, es2, est = 6 / PI - 24 / PI**3, 2 - 3 / PI**2, 12 / PI**2
    exact = (est - es**2) / (es2 - es**2)
    ok = abs(exact - (-0.183)) <= 0.001 and r.analytic == pytest.approx(exact) and within_4se(r)
    record(4, "ρ(s,t) exact ≈ −0.183 within 0.001 and Monte Carlo within 4 stderr", ok,
           f"exact={exact:.6f} |exact+0.183|={abs(exact + 0.183):.2e}; {z_text(r)}")


def test_ac05_ks_suite():
    ids = ["SIDE_KS", "DIAG_KS", "ANGLE_KS", "GAP21_KS", "GAP31_KS", "GAP41_KS", "TRI_SIDE_MARGINAL_KS"]
    rs = [result(c, 1_000_000) for c in ids]
    ok = all(r.statistic <= r.analytic and r.passed for r in rs)
    record(5, "KS suite at α=0.01, n=10⁶", ok,
           "; ".join(f"{r.claim_id} D={r.statistic:.2e}/crit={r.analytic:.2e}" for r in rs))


def test_ac06_tent_uncorrelated_but_dependent():
    rho = result("TENT_RHO_ZERO", 1_000_000)
    dep = result("TENT_DEPENDENCE", 1_000_000)
    ok = within_4se(rho) and rho.analytic == 0.0 and abs(dep.estimate) / dep.stderr >= 5.0
    record(6, "adjacent angles: ρ̂ within 4 stderr of 0, dependence ≥ 5 stderr", ok,
           f"{z_text(rho)}; excess={dep.estimate:.5f} ({dep.estimate / dep.stderr:.1f} stderr, analytic 7/1024)")


def test_ac07_triangle_angles_and_sides():
    rho = result("TRI_ANGLE_RHO", 1_000_000)
    ind = result("TRI_SIDE_INDEP_CHI2", 1_000_000)
    subs = ind.details["subtests"]
    ok = within_4se(rho) and ind.passed and all(s["chi2"] <= s["critical"] for s in subs.values())
    record(7, "triangle ρ = −1/2; side independence vs own and analytic marginals", ok,
           f"{z_text(rho)}; " + "; ".join(f"{k} χ²={s['chi2']:.1f}/crit={s['critical']:.1f}" for k, s in subs.items()))


def test_ac08_triangle_area_moments():
    rs = [result("TRI_AREA_MEAN", 1_000_000), result("TRI_AREA_M2", 1_000_000)]
    ok = all(abs(r.details["quadrature_error"]) <= 1e-6 and within_4se(r) for r in rs)
    tail = rs[0].details["cutoff_tail_mass"]
    record(8, "triangle area moments by quadrature (≤1e-6) and Monte Carlo (4 stderr)", ok,
           "; ".join(f"{r.claim_id} quad_err={r.details['quadrature_error']:.1e} z={r.statistic:+.2f}" for r in rs)
           + f"; ε-cutoff tail mass ≈ {tail:.1e}")


def test_ac09_triangle_area_ks():
    r = result("TRI_AREA_KS", 100_000)
    record(9, "triangle area vs cdf of 8xK(4x²), KS α=0.01, n=10⁵", r.passed and r.statistic <= r.analytic,
           f"D={r.statistic:.2e} crit={r.analytic:.2e}")


def test_ac10_quadrilateral_angle_triple():
    sup = result("QUAD_F_SUPPORT_CHI2", 4_000_000)
    mar = result("QUAD_F_MARGINAL_TENT", 1_000_000)
    outside = sup.details["samples_outside_tetrahedron"]
    ok = outside == 0 and sup.passed and mar.passed
    record(10, "(α, β, ω) inside tetrahedron, uniform 3/π³ on interior bins, tent marginals (advisory)", ok,
           f"outside={outside}; interior χ²={sup.statistic:.1f}/crit={sup.analytic:.1f}; "
           f"worst marginal χ²={mar.statistic:.1f}/crit={mar.analytic:.1f}")


def test_ac11_quadrilateral_area():
    moment_group(11, "quad area mean 3/π, second moment, ratio to triangle mean = 2",
                 ["QUAD_AREA_MEAN", "QUAD_AREA_M2", "QUAD_AREA_TWICE_TRI"])


def test_ac12_pentagon_and_hexagon():
    moment_group(12, "pentagon 1/6, −2/3; hexagon 1/4, −1/2, −1/2 (hexagon advisory)",
                 ["PENT_RHO_ADJ", "PENT_RHO_NONADJ", "HEX_RHO_ADJ", "HEX_RHO_GAMMA", "HEX_RHO_DELTA"])


def test_ac13_identity_suite():
    ids = ["OPP_ANGLES_SUPPLEMENTARY", "ANGLE_SUM_IDENTITY", "AREA_TRIG_VS_SHOELACE",
           "DIAGONAL_SINE_IDENTITY", "TRI_THIRD_SIDE_IDENTITY", "TAN_HALF_ANGLE_IDENTITY"]
    rs = [result(c, 10_000) for c in ids]
    ok = all(r.estimate <= 1e-9 and r.passed for r in rs)
    record(13, "identity suite, max defect ≤ 1e-9 over 10⁴ samples", ok,
           "; ".join(f"{r.claim_id}={r.estimate:.1e}" for r in rs))


def test_ac14_determinism():
    def report():
        rs = cl.run_all(n_samples_override=100_000, seed=SEED, workers=WORKERS, timing=False)
        return json.dumps([r.to_dict() for r in rs], allow_nan=False).encode()

    a, b = report(), report()
    record(14, "run_all twice with fixed (seed, workers) gives byte-identical JSON", a == b,
           f"{len(json.loads(a))} claims, {len(a)} bytes, n=10⁵ per claim")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_ac"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
