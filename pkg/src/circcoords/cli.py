"""Command line interface: ``circcoords <subcommand> ...``.

Exit codes: 0 success, 2 invalid configuration, 3 a pipeline stage failed.
"""

import argparse
import itertools
import logging
import os
import sys

import numpy as np

from . import io
from .analysis import degree_table, histogram
from .datasets import KINDS, DatasetSpec, generate
from .errors import CircCoordsError, InvalidComplex, InvalidInput
from .persistence import persistent_cocycles, suggest_delta
from .pipeline import PipelineConfig, build_filtration, resolve_distances, run_pipeline



class ConfigError(Exception):
    pass


def _add_input(p):
    g = p.add_argument_group("input (choose one)")
    g.add_argument("--points", help="point cloud file, one point per line")
    g.add_argument("--matrix", help="distance matrix file, n lines of n values")
    g.add_argument("--dataset", choices=KINDS, help="generate a synthetic dataset")
    _add_dataset(p, required=False)
    p.add_argument("--complex-points", action="store_true",
                   help="read point columns as (re, im) pairs of complex coordinates")
    p.add_argument("--metric", choices=("auto", "euclidean", "projective"), default="auto")


def _add_dataset(p, required=True):
    p.add_argument("--n", type=int, default=400, help="number of samples")
    p.add_argument("--noise", type=float, default=None, help="noise width (dataset default if omitted)")
    p.add_argument("--seed", type=int, default=0, help="random seed")
    p.add_argument("--centered-noise", action="store_true", help="symmetric noise interval")
    p.add_argument("--ambient-dim", type=int, default=1000, help="ambient dimension for high_dim_loop")


def _add_complex(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--rips", type=float, metavar="R", help="Vietoris-Rips complex up to radius R")
    g.add_argument("--witness", type=int, metavar="K", help="lazy witness complex on K maxmin landmarks")
    p.add_argument("--rmax", type=float, help="maximum filtration value")
    p.add_argument("--nu", type=int, default=1, choices=(0, 1, 2))
    p.add_argument("--landmark-seed", type=int, default=0)
    p.add_argument("--prime", type=int, default=47)


def _add_selection(p):
    p.add_argument("--delta", type=float, help="parametrization scale")
    p.add_argument("--top", type=int, help="use the TOP longest dim-1 intervals")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int)
    p.add_argument("--extension", choices=("nearest", "interpolate"), default="nearest")


def _add_output(p):
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--svg", action="store_true", help="also write SVG renderings")
    p.add_argument("--bins", type=int, default=20)


def build_parser():
    parser = argparse.ArgumentParser(prog="circcoords", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a synthetic point cloud")
    p.add_argument("kind", choices=KINDS)
    _add_dataset(p)
    p.add_argument("--out", default=".")

    p = sub.add_parser("complex", help="write the filtration of a Rips or witness complex")
    _add_input(p)
    _add_complex(p)
    p.add_argument("--out", default=".")

    p = sub.add_parser("persistence", help="persistence diagram and representative cocycles")
    _add_input(p)
    _add_complex(p)
    _add_output(p)
    p.add_argument("--delta", type=float, help="mark this scale on the SVG diagram")

    for name, text in (("coords", "circular coordinates"),
                       ("pipeline", "coordinates plus scatter plots and histograms")):
        p = sub.add_parser(name, help=text)
        _add_input(p)
        _add_complex(p)
        _add_selection(p)
        _add_output(p)

    p = sub.add_parser("analyze", help="compare coordinate files")
    p.add_argument("coords", nargs="+", help="coords_<i>.csv files")
    p.add_argument("--truth", help="ground-truth parameter file (one row per point)")
    _add_output(p)
    return parser


def _dataset_spec(args, kind):
    return DatasetSpec(kind, args.n, args.noise, args.seed, args.centered_noise, args.ambient_dim)


def _config(args):
    sources = [x is not None for x in (args.points, args.matrix, args.dataset)]
    if sum(sources) != 1:
        raise ConfigError("give exactly one of --points, --matrix, --dataset")
    if args.rips is None and args.witness is None and args.rmax is None:
        raise ConfigError("give --rips R or --witness K with --rmax")
    if args.witness is not None and args.rmax is None:
        raise ConfigError("--witness needs --rmax")
    r_max = args.rmax if args.rmax is not None else args.rips
    cfg = PipelineConfig(
        metric=args.metric,
        complex_type="witness" if args.witness is not None else "rips",
        r_max=r_max, nu=args.nu, landmarks=args.witness,
        landmark_seed=args.landmark_seed, prime=args.prime,
    )
    if args.points:
        cfg.cloud = io.read_point_cloud(args.points, args.complex_points)
    elif args.matrix:
        cfg.distances = io.read_distance_matrix(args.matrix)
    else:
        cfg.dataset = _dataset_spec(args, args.dataset)
    for name in ("delta", "top", "tol", "max_iter", "extension"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    cfg.validate()
    return cfg


def _write_truth(out, data):
    if data is not None and data.truth is not None:
        io.write_point_cloud(os.path.join(out, "truth.txt"), data.truth)


def cmd_generate(args):
    data = generate(_dataset_spec(args, args.kind))
    out = io.ensure_dir(args.out)
    io.write_point_cloud(os.path.join(out, "points.txt"), data.cloud)
    _write_truth(out, data)
    print(f"wrote {len(data.cloud)} points to {out}")


def cmd_complex(args):
    cfg = _config(args)
    D, _ = resolve_distances(cfg)
    filt, _ = build_filtration(cfg, D)
    out = io.ensure_dir(args.out)
    io.write_filtration(os.path.join(out, "filtration.txt"), filt)
    print(f"{len(filt)} simplices")


def _interval_summary(diagram, delta=None):
    cap = diagram.max_value()
    lines = ["dim-1 intervals by length:"]
    for iv in diagram.sorted_by_length(1)[:10]:
        death = "inf" if iv.is_infinite else f"{iv.death:.6g}"
        lines.append(f"  [{iv.birth:.6g}, {death})  length {iv.length(cap):.6g}")
    if delta is None:
        delta = suggest_delta(diagram, 1)
        if delta is not None:
            lines.append(f"suggested delta: {delta:.6g}")
    return "\n".join(lines)


def cmd_persistence(args):
    cfg = _config(args)
    D, _ = resolve_distances(cfg)
    filt, _ = build_filtration(cfg, D)
    diagram = persistent_cocycles(filt, cfg.prime)
    out = io.ensure_dir(args.out)
    io.write_diagram(os.path.join(out, "diagram.csv"), diagram)
    for i, iv in enumerate(diagram.sorted_by_length(1)):
        io.write_cocycle(os.path.join(out, f"cocycle_{i}.txt"), iv.representative, filt)
    if args.svg:
        io.write_text(os.path.join(out, "diagram.svg"), io.diagram_svg(diagram, args.delta))
    print(_interval_summary(diagram, args.delta))


def write_pipeline_outputs(result, out, bins=20, svg=False, extras=True):
    """Write diagram, cocycles and coordinates; with ``extras`` also scatter
    tables between coordinates, histograms and a degree report against
    ground truth when available."""
    io.ensure_dir(out)
    io.write_diagram(os.path.join(out, "diagram.csv"), result.diagram)
    coords = result.coordinates
    for i, (lift, coord) in enumerate(zip(result.lifts, coords)):
        io.write_cocycle(os.path.join(out, f"cocycle_{i}.txt"), lift.cocycle, result.filtration)
        io.write_coordinates(os.path.join(out, f"coords_{i}.csv"), coord)
    if svg:
        io.write_text(os.path.join(out, "diagram.svg"), io.diagram_svg(result.diagram, result.delta))
    if not extras:
        return
    for i, coord in enumerate(coords):
        io.write_histogram(os.path.join(out, f"hist_{i}.csv"), histogram(coord, bins))
    for i, j in itertools.combinations(range(len(coords)), 2):
        pairs = np.column_stack([coords[i].theta, coords[j].theta])
        io.write_scatter(os.path.join(out, f"scatter_{i}_{j}.csv"), pairs)
        if svg:
            io.write_text(os.path.join(out, f"scatter_{i}_{j}.svg"), io.scatter_svg(pairs))
    data = result.data
    if data is not None and data.truth is not None and coords:
        _write_truth(out, data)
        _write_degree_report(os.path.join(out, "degrees.csv"), coords, data.truth, data.truth_names)


def _write_degree_report(path, coords, truth, names=None):
    header, rows = degree_table(truth, coords, names)
    io.write_table(path, ["coordinate"] + [f"degree_{h}" for h in header] + ["correlation"],
                   [[i] + row + [f"{corr:.6f}"] for i, (row, corr) in enumerate(rows)])


def cmd_coords(args, extras=False):
    cfg = _config(args)
    if cfg.delta is None and cfg.top is None:
        cfg.top = 1
    result = run_pipeline(cfg)
    out = io.ensure_dir(args.out)
    write_pipeline_outputs(result, out, args.bins, args.svg, extras)
    delta = "none" if result.delta is None else f"{result.delta:.6g}"
    print(f"delta {delta}: {len(result.coordinates)} coordinate(s), prime {result.prime_used}")
    for iv, h in zip(result.selected, result.harmonics):
        death = "inf" if iv.is_infinite else f"{iv.death:.6g}"
        print(f"  [{iv.birth:.6g}, {death})  residual {h.residual_norm:.3g}")


def cmd_analyze(args):
    thetas = [io.read_coordinates(path) for path in args.coords]
    n = max(len(t) for t in thetas)
    thetas = [np.r_[t, np.full(n - len(t), np.nan)] for t in thetas]
    out = io.ensure_dir(args.out)
    for i, t in enumerate(thetas):
        ok = ~np.isnan(t)
        io.write_histogram(os.path.join(out, f"hist_{i}.csv"), histogram(t[ok], args.bins))
    for i, j in itertools.combinations(range(len(thetas)), 2):
        ok = ~np.isnan(thetas[i]) & ~np.isnan(thetas[j])
        pairs = np.column_stack([thetas[i][ok], thetas[j][ok]])
        io.write_scatter(os.path.join(out, f"scatter_{i}_{j}.csv"), pairs)
        if args.svg:
            io.write_text(os.path.join(out, f"scatter_{i}_{j}.svg"), io.scatter_svg(pairs))
    if args.truth:
        truth = np.atleast_2d(io.read_rows(args.truth))
        if len(truth) != n:
            raise ConfigError(f"truth has {len(truth)} rows but coordinates cover {n} points")
        if any(np.isnan(t).any() for t in thetas):
            raise ConfigError("degree fits need coordinates on every point")
        header, rows = degree_table(truth, thetas)
        print("coordinate  " + "  ".join(header) + "  correlation")
        for i, (row, corr) in enumerate(rows):
            print(f"{i:10d}  " + "  ".join(f"{d:+d}" for d in row) + f"  {corr:.4f}")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    handlers = {
        "generate": cmd_generate,
        "complex": cmd_complex,
        "persistence": cmd_persistence,
        "coords": cmd_coords,
        "pipeline": lambda a: cmd_coords(a, extras=True),
        "analyze": cmd_analyze,
    }
    try:
        handlers[args.command](args)
    except (ConfigError, InvalidInput, InvalidComplex, OSError) as exc:
        print(f"circcoords: invalid configuration: {exc}", file=sys.stderr)
        return 2
    except CircCoordsError as exc:
        print(f"circcoords: stage '{exc.stage or 'unknown'}' failed: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
