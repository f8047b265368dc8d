"""Exact regular subdivisions of hypersimplices, secondary fans and split decompositions.

Heights and metrics are sequences of ints, fractions.Fraction or decimal
strings; results use Fraction.  Metrics are listed in pair order
(1,2),(1,3),...,(1,n),(2,3),...; vertex and taxon indices are 0-based.
"""
from ._secfan import (
    InvalidInput,
    InvariantViolation,
    ResourceLimit,
    cell_volumes,
    coarsest_subdivisions,
    coherency_index,
    enumerate_triangulations,
    eulerian,
    is_coarsest,
    kappa_lift,
    lambda_lift,
    metric_cone_rays,
    parse_metric,
    regular_subdivision,
    secondary_cone_dim,
    secondary_rays,
    split_decompose,
    split_metric,
    thrackle,
    tight_span_dot,
    vertices,
)

__all__ = [
    "InvalidInput",
    "InvariantViolation",
    "ResourceLimit",
    "cell_volumes",
    "coarsest_subdivisions",
    "coherency_index",
    "enumerate_triangulations",
    "eulerian",
    "is_coarsest",
    "kappa_lift",
    "lambda_lift",
    "metric_cone_rays",
    "parse_metric",
    "regular_subdivision",
    "secondary_cone_dim",
    "secondary_rays",
    "split_decompose",
    "split_metric",
    "thrackle",
    "tight_span_dot",
    "vertices",
]
