"""Named experiment configurations shared by the scripts in this folder."""

import math

from circcoords.datasets import DatasetSpec
from circcoords.pipeline import PipelineConfig


def preset(name, seed=0, **overrides):
    table = {
        "circle": lambda: PipelineConfig(dataset=DatasetSpec("noisy_circle", 400, seed=seed),
                                         r_max=0.5, delta=0.4),
        "trefoil": lambda: PipelineConfig(dataset=DatasetSpec("trefoil_knot", 400, seed=seed),
                                          r_max=1.0, top=1),
        "conjoined": lambda: PipelineConfig(dataset=DatasetSpec("conjoined_circles", 400, seed=seed),
                                            r_max=0.5, top=2),
        "disjoint": lambda: PipelineConfig(dataset=DatasetSpec("disjoint_circles", 400, seed=seed),
                                           r_max=0.5, top=2),
        "torus": lambda: PipelineConfig(dataset=DatasetSpec("torus", 400, seed=seed),
                                        r_max=math.sqrt(3), top=2),
        "double_torus": lambda: PipelineConfig(dataset=DatasetSpec("double_torus", 820, seed=seed),
                                               complex_type="witness", landmarks=200, nu=1,
                                               r_max=1.0, top=4),
        # roughly 3100 points and 400 landmarks, the larger layout
        "double_torus_large": lambda: PipelineConfig(dataset=DatasetSpec("double_torus", 1600, seed=seed),
                                                     complex_type="witness", landmarks=400, nu=2,
                                                     r_max=0.6, top=4),
        "elliptic": lambda: PipelineConfig(dataset=DatasetSpec("elliptic_curve", 400, seed=seed),
                                           r_max=0.15, delta=0.15),
        "loop": lambda: PipelineConfig(dataset=DatasetSpec("high_dim_loop", 200, seed=seed),
                                       r_max=0.6, top=1),
    }
    if name not in table:
        raise SystemExit(f"unknown preset {name!r}; choose from {', '.join(table)}")
    cfg = table[name]()
    for key, value in overrides.items():
        if value is not None:
            setattr(cfg, key, value)
    return cfg


NAMES = ("circle", "trefoil", "conjoined", "disjoint", "torus", "double_torus",
         "double_torus_large", "elliptic", "loop")



def degree_rows(data, coordinates):
    """(header, rows) of fitted degrees against the ground truth, per piece."""
    from circcoords.analysis import degree_table

    header, rows = degree_table(data.truth, coordinates, data.truth_names)
    return header, [row for row, _ in rows]
