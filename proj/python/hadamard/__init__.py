"""Exponential maps, geodesic hulls and flatness probes on R^n and the
hyperbolic upper half-plane."""

from ._core import (
    Model,
    UsageError,
    affinity_defect,
    convex_hull,
    curvature_estimate,
    dist,
    example,
    exp,
    exp_interp_curve,
    exp_interp_deviation,
    exp_isometry_defect,
    gc_hull_sample,
    gc_point,
    geodesic_point,
    hausdorff,
    hp_exp_base,
    hp_log_base,
    hull_discrepancy,
    log,
    metric_inner,
    probe_suite,
)

EUCLIDEAN = Model.EUCLIDEAN
HALFPLANE = Model.HALFPLANE

__all__ = [
    "EUCLIDEAN",
    "HALFPLANE",
    "Model",
    "UsageError",
    "affinity_defect",
    "convex_hull",
    "curvature_estimate",
    "dist",
    "example",
    "exp",
    "exp_interp_curve",
    "exp_interp_deviation",
    "exp_isometry_defect",
    "gc_hull_sample",
    "gc_point",
    "geodesic_point",
    "hausdorff",
    "hp_exp_base",
    "hp_log_base",
    "hull_discrepancy",
    "log",
    "metric_inner",
    "probe_suite",
]
