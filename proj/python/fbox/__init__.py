"""Functional depths and depth-based functional boxplots."""

from ._core import (
    boxplot,
    depths,
    halfspace_depth,
    motivating_example,
    rank,
    render_svg,
    run_study,
    sample_gp,
    simplicial_depth,
    band_convexity_violations,
)

__all__ = [
    "band_convexity_violations",
    "boxplot",
    "depths",
    "halfspace_depth",
    "motivating_example",
    "rank",
    "render_svg",
    "run_study",
    "sample_gp",
    "simplicial_depth",
]
