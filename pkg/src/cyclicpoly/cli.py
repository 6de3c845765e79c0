"""Command-line entry point: ``cyclicpoly {sample,density,moments,verify,report}``.

Exit codes: 0 success (for verify/report: every requested non-conjecture claim
passed), 1 a claim failed or could not run, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from contextlib import contextmanager

import numpy as np

from . import analytic as an
from . import claims as cl
from .geometry import GeometryError
from .montecarlo import HistogramND, bin_masses

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
ORDERS = (3, 4, 5, 6)

# registry moments reproducible by integrating a one-dimensional density
_QUADRATURE_MOMENTS = {
    "SIDE_MEAN": ("side", 1),
    "SIDE_M2": ("side", 2),
    "DIAG_MEAN": ("diagonal", 1),
    "DIAG_M2": ("diagonal", 2),
    "ANGLE_MEAN": ("angle", 1),
    "TRI_AREA_MEAN": ("triangle_area", 1),
    "TRI_AREA_M2": ("triangle_area", 2),
}


class UsageError(Exception):
    pass


def _num(v):
    """JSON/CSV-safe number: floats keep their shortest round-trip repr."""
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else None
    return v


def _cell(v) -> str:
    v = _num(v)
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (dict, list)):
        return json.dumps(v, ensure_ascii=False, default=_num)
    return str(v)


def _render(header: list[str], rows, fmt: str) -> str:
    if fmt == "json":
        recs = [{h: _clean(v) for h, v in zip(header, r)} for r in rows]
        return json.dumps(recs, indent=2, ensure_ascii=False, allow_nan=False) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_cell(v) for v in r])
    return buf.getvalue()


def _clean(v):
    if isinstance(v, dict):
        return {k: _clean(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_clean(x) for x in v]
    return _num(v)


@contextmanager
def _sink(path: str | None):
    if path is None:
        yield sys.stdout
        return
    try:
        fh = open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None
    with fh:
        yield fh


def _emit(text: str, path: str | None) -> None:
    with _sink(path) as fh:
        fh.write(text)


# -- commands -----------------------------------------------------------------


def cmd_sample(args) -> int:
    if args.order not in ORDERS:
        raise UsageError(f"polygon order must be one of {ORDERS}, got {args.order}")
    n = args.n if args.n is not None else 1000
    m = cl.sample_polygons(args.order, n, args.seed, args.workers)
    k = args.order
    header = [f"theta_{i}" for i in range(1, k + 1)]
    header += [f"s_{i}" for i in range(1, k + 1)]
    header += [f"alpha_{i}" for i in range(1, k + 1)]
    cols = [m.theta, m.sides, m.angles]
    if k == 4:
        header += ["d_1", "d_2", "omega"]
        cols += [m.diagonals, m.omega[:, None]]
    header += ["perimeter", "area"]
    cols += [m.perimeter[:, None], m.area[:, None]]
    table = np.hstack(cols)
    _emit(_render(header, table.tolist(), args.format), args.out)
    return EXIT_OK


def _axes(bounds, grid: int, dim: int):
    axes = []
    for lo, hi in bounds:
        if dim == 1:
            hi = hi - 1e-6  # keep clear of integrable endpoint singularities
        axes.append(np.linspace(lo, hi, grid))
    return axes


def cmd_density(args) -> int:
    if not args.density:
        raise UsageError("--density NAME is required")
    try:
        dens = an.get_density(args.density)
    except an.UnknownNameError as exc:
        raise UsageError(exc.args[0]) from None
    labels = ["x", "y", "z"][: dens.dim]
    if args.bins:
        bins = _parse_bins(args.bins, dens.dim)
        hist = HistogramND.uniform(dens.bounds, bins)
        masses = bin_masses(hist, dens.pdf)
        header = [f"{a}_{side}" for a in labels for side in ("lo", "hi")] + ["probability"]
        rows = []
        for idx in np.ndindex(masses.shape):
            edges = []
            for ax, i in enumerate(idx):
                edges += [hist.edges[ax][i], hist.edges[ax][i + 1]]
            rows.append(edges + [masses[idx]])
        _emit(_render(header, rows, args.format), args.out)
        return EXIT_OK
    grid = args.grid if args.grid is not None else (512 if dens.dim == 1 else 64)
    if grid < 2:
        raise UsageError("--grid must be at least 2")
    axes = _axes(dens.bounds, grid, dens.dim)
    mesh = np.meshgrid(*axes, indexing="ij")
    pts = [a.ravel() for a in mesh]
    values = np.asarray(dens.pdf(*pts), dtype=float)
    header = labels + ["pdf"]
    cols = pts + [values]
    if dens.dim == 1 and args.cdf:
        header.append("cdf")
        cols.append(np.asarray(dens.cdf(pts[0]), dtype=float))
    _emit(_render(header, np.column_stack(cols).tolist(), args.format), args.out)
    return EXIT_OK


def _parse_bins(text: str, dim: int) -> tuple[int, ...]:
    try:
        vals = tuple(int(b) for b in text.split(","))
    except ValueError:
        raise UsageError(f"--bins expects comma-separated integers, got {text!r}") from None
    if len(vals) == 1:
        vals = vals * dim
    if len(vals) != dim or min(vals) < 1:
        raise UsageError(f"--bins needs {dim} positive integer(s)")
    return vals


def cmd_moments(args) -> int:
    header = ["id", "expression", "value", "quadrature", "paper_location", "conjecture"]
    rows = []
    for e in an.MOMENTS.values():
        quad = None
        if e.id in _QUADRATURE_MOMENTS:
            name, k = _QUADRATURE_MOMENTS[e.id]
            quad = an.get_density(name).moment(k)
        rows.append([e.id, e.expression, e.value, quad, e.paper_location, e.conjecture])
    _emit(_render(header, rows, args.format), args.out)
    return EXIT_OK


def _claim_ids(args) -> list[str] | None:
    if not args.claims:
        return None
    ids = [c.strip() for group in args.claims for c in group.split(",") if c.strip()]
    for cid in ids:
        try:
            cl.get_claim(cid)
        except cl.UnknownClaimError as exc:
            raise UsageError(exc.args[0]) from None
    return ids


def _run_claims(args):
    results = cl.run_all(args.n, args.seed, args.workers, _claim_ids(args), timing=not args.no_timing)
    ok = all(r.passed for r in results if not r.conjecture)
    return results, EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    results, code = _run_claims(args)
    if args.format == "json":
        text = json.dumps([_clean(r.to_dict()) for r in results], indent=2, ensure_ascii=False,
                          allow_nan=False) + "\n"
    else:
        rows = [[r.to_dict()[k] for k in cl.ClaimResult.JSON_FIELDS] for r in results]
        text = _render(list(cl.ClaimResult.JSON_FIELDS), rows, "csv")
    _emit(text, args.out)
    return code


def cmd_report(args) -> int:
    """Claim table with per-claim diagnostics; CSV by default."""
    results, code = _run_claims(args)
    header = list(cl.ClaimResult.JSON_FIELDS) + ["error", "details"]
    rows = [[r.to_dict()[k] for k in cl.ClaimResult.JSON_FIELDS] + [r.error, r.details] for r in results]
    fmt = args.format if args.format_given else "csv"
    _emit(_render(header, rows, fmt), args.out)
    return code


# -- parser -------------------------------------------------------------------


def _seed(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


class _FormatAction(argparse.Action):
    def __call__(self, parser, ns, value, option_string=None):
        ns.format = value
        ns.format_given = True


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, default=0, help="master seed (default 0)")
    common.add_argument("--workers", type=_positive, default=1, help="sampling threads (default 1)")
    common.add_argument("--format", choices=("json", "csv"), default="json", action=_FormatAction)
    common.add_argument("--out", help="output path (default stdout)")
    common.set_defaults(format_given=False)

    p = argparse.ArgumentParser(prog="cyclicpoly", description="Random cyclic polygon laboratory.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sample", parents=[common], help="sample polygons and their measurements")
    s.add_argument("--n", type=_positive, help="number of polygons (default 1000)")
    s.add_argument("--order", type=int, default=4, help="polygon order 3..6 (default 4)")
    s.set_defaults(func=cmd_sample)

    d = sub.add_parser("density", parents=[common], help="tabulate an analytic density")
    d.add_argument("--density", help="density name")
    d.add_argument("--grid", type=int, help="points per axis (default 512 in 1-D, 64 otherwise)")
    d.add_argument("--bins", help="emit exact bin probabilities on this many bins per axis (e.g. 24 or 24,24)")
    d.add_argument("--cdf", action="store_true", help="add a cdf column (1-D densities)")
    d.set_defaults(func=cmd_density)

    m = sub.add_parser("moments", parents=[common], help="closed-form moments with quadrature checks")
    m.set_defaults(func=cmd_moments)

    for name, func, hlp in (
        ("verify", cmd_verify, "run claims and write the JSON report"),
        ("report", cmd_report, "run claims and write a diagnostic table (CSV by default)"),
    ):
        v = sub.add_parser(name, parents=[common], help=hlp)
        v.add_argument("--n", type=_nonneg, help="override the sample size of every claim")
        v.add_argument("--claims", action="append", help="claim ids, comma-separated (default all)")
        v.add_argument("--no-timing", action="store_true", help="write null elapsed_seconds for reproducible output")
        v.set_defaults(func=func)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GeometryError, cl.InsufficientSamplesError) as exc:
        print(f"cyclicpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
