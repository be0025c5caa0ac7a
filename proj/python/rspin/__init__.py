"""Exact second integral cohomology and Picard groups of r-Spin moduli spaces."""

import json

from ._core import (
    ConsistencyError,
    Context,
    Group,
    InvalidInput,
    ParseError,
    RangeError,
    canonical_coords,
    free_coordinate,
    group_from_presentation,
    h1,
    h1_theta,
    h2,
    normalize,
    phi,
    pi2_multiplier,
    presentation,
    rational_multiple_of_lambda,
    render_text,
    smith_normal_form,
    torsion_generator,
    torsion_order,
    twist_shift,
    u_r,
)
from . import _core

__all__ = [
    "ConsistencyError",
    "Context",
    "Group",
    "InvalidInput",
    "ParseError",
    "RangeError",
    "canonical_coords",
    "free_coordinate",
    "group_from_presentation",
    "h1",
    "h1_theta",
    "h2",
    "normalize",
    "phi",
    "pi2_multiplier",
    "presentation",
    "rational_multiple_of_lambda",
    "render_text",
    "report",
    "smith_normal_form",
    "table",
    "theta",
    "torsion_generator",
    "torsion_order",
    "twist_shift",
    "u_r",
]


def report(r, g, eps=None, force=False):
    """The `rspin report` document as a dict (all numbers are decimal strings)."""
    return json.loads(_core._report_json(r, g, eps, force))


def theta(r, g, eps=None, force=False):
    return json.loads(_core._theta_json(r, g, eps, force))


def table(r_min, r_max):
    return json.loads(_core._table_json(r_min, r_max))
