"""Text formats for clouds, matrices, filtrations, diagrams, cocycles and
coordinates, plus small self-contained SVG renderings."""

import math
import os
import re

import numpy as np

from .errors import InvalidInput
from .metric import DistanceMatrix, PointCloud

_SPLIT = re.compile(r"[,\s]+")


def read_rows(path):
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                rows.append([float(x) for x in _SPLIT.split(line) if x])
            except ValueError as exc:
                raise InvalidInput(f"{path}: {exc}") from None
    if not rows:
        raise InvalidInput(f"{path}: no data")
    if len({len(r) for r in rows}) != 1:
        raise InvalidInput(f"{path}: rows have different lengths")
    return np.array(rows)


def read_point_cloud(path, is_complex=False):
    return PointCloud(read_rows(path), is_complex=is_complex)


def read_distance_matrix(path):
    return DistanceMatrix.from_array(read_rows(path))


def fmt(x):
    return repr(float(x))


def write_point_cloud(path, cloud):
    with open(path, "w") as fh:
        for row in np.asarray(cloud.points if isinstance(cloud, PointCloud) else cloud):
            fh.write(" ".join(fmt(x) for x in row) + "\n")


def write_table(path, header, rows):
    with open(path, "w") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(str(x) for x in row) + "\n")


def write_filtration(path, filtration):
    with open(path, "w") as fh:
        fh.write(filtration.dump())


def diagram_rows(diagram):
    rows = []
    for iv in diagram.intervals:
        rows.append((iv.dimension, fmt(iv.birth), "" if iv.is_infinite else fmt(iv.death)))
    return rows


def write_diagram(path, diagram):
    write_table(path, ("dimension", "birth", "death"), diagram_rows(diagram))


def read_diagram(path):
    out = []
    with open(path) as fh:
        next(fh)
        for line in fh:
            dim, birth, death = line.rstrip("\n").split(",")
            out.append((int(dim), float(birth), math.inf if death == "" else float(death)))
    return out


def write_cocycle(path, cochain, filtration):
    """One line per nonzero edge coefficient: ``v0 v1 coefficient``."""
    with open(path, "w") as fh:
        for k in cochain.support():
            a, b = filtration.label(k)
            c = cochain[k]
            fh.write(f"{a} {b} {fmt(c) if isinstance(c, float) else c}\n")


def write_coordinates(path, coord):
    rows = [(label, f"{t:.17g}") for label, t in zip(coord.labels, coord.theta)]
    write_table(path, ("point_index", "theta"), rows)


def read_coordinates(path):
    with open(path) as fh:
        next(fh)
        pairs = [line.strip().split(",") for line in fh if line.strip()]
    labels = np.array([int(a) for a, _ in pairs])
    theta = np.full(labels.max() + 1 if len(labels) else 0, np.nan)
    theta[labels] = [float(b) for _, b in pairs]
    return theta


def write_histogram(path, counts):
    bins = len(counts)
    write_table(path, ("bin_start", "bin_end", "count"),
                [(fmt(k / bins), fmt((k + 1) / bins), int(c)) for k, c in enumerate(counts)])


def write_scatter(path, pairs, names=("theta_1", "theta_2")):
    write_table(path, names, [(f"{a:.17g}", f"{b:.17g}") for a, b in pairs])


# --------------------------------------------------------------------- svg

def _svg(body, size):
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
            f'viewBox="0 0 {size} {size}">\n<rect width="{size}" height="{size}" fill="white"/>\n'
            + body + "</svg>\n")


def diagram_svg(diagram, delta=None, size=400, dims=(0, 1)):
    """Points (birth, death) above the diagonal; infinite deaths sit on the top
    edge. The upper-left quadrant of ``delta`` is outlined."""
    top = max(diagram.max_value(), 1e-12) * 1.05
    pad = 30
    scale = (size - 2 * pad) / top

    def xy(b, d):
        return pad + b * scale, size - pad - min(d, top) * scale

    parts = [f'<line x1="{pad}" y1="{size - pad}" x2="{size - pad}" y2="{pad}" stroke="gray"/>\n',
             f'<rect x="{pad}" y="{pad}" width="{size - 2 * pad}" height="{size - 2 * pad}" fill="none" stroke="black"/>\n']
    colors = {0: "#1f77b4", 1: "#d62728"}
    for iv in diagram.intervals:
        if iv.dimension not in dims:
            continue
        x, y = xy(iv.birth, iv.death)
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="{colors[iv.dimension]}"/>\n')
    if delta is not None:
        x, y = xy(delta, delta)
        parts.append(f'<line x1="{x:.2f}" y1="{y:.2f}" x2="{x:.2f}" y2="{pad}" stroke="green"/>\n')
        parts.append(f'<line x1="{pad}" y1="{y:.2f}" x2="{x:.2f}" y2="{y:.2f}" stroke="green"/>\n')
    return _svg("".join(parts), size)


def scatter_svg(pairs, size=300):
    pad = 10
    s = size - 2 * pad
    parts = [f'<rect x="{pad}" y="{pad}" width="{s}" height="{s}" fill="none" stroke="black"/>\n']
    for a, b in pairs:
        parts.append(f'<circle cx="{pad + a * s:.2f}" cy="{pad + (1 - b) * s:.2f}" r="1.5" fill="black"/>\n')
    return _svg("".join(parts), size)


def write_text(path, text):
    with open(path, "w") as fh:
        fh.write(text)


def ensure_dir(path):
    os.makedirs(path, exist_ok=True)
    return path
