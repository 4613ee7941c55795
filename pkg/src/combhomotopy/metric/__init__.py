"""Resolution-dependent structures on metric data and sweeps of their invariants."""
from .oracle import HomologyCheck, dense_h1
from .points import (METRICS, STEPS, GrayImage, PointCloud, StepMetricSpace, cloud_from,
                     image_points, load_image, load_points, parse_csv, parse_pgm)
from .rips import neighbours, rips2, rips2_truncated, step_rips2, tolerance_graph
from .sweep import DEFAULT_THRESHOLD, InvariantReport, InvariantRow, eps_sweep, symmetric_row

__all__ = [name for name in dir() if not name.startswith("_")]
