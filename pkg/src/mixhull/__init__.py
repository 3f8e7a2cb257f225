"""Exact mixed-integer hulls of rational polyhedra."""
from .concmin import PiecewiseAffineConcave, evaluate, minimize_over_mih
from .errors import (
    EmptyPolyhedron,
    ImplicitLineality,
    MixedInfeasible,
    ParseError,
    PolyhedralError,
    UnboundedInput,
)
from .formats import format_instance, format_objective, parse_instance, parse_objective
from .hull import Triangulation, delaunay_triangulate, hull_vertices
from .inthull import IntegerHull, integer_hull_from_vertices, integer_hull_oracle, intvertex_bound
from .lp import LpResult, LpStatus, is_extreme_point, lp_solve, point_in_hull
from .mihull import (
    MixedIntegerHull,
    ScaleReport,
    compute_scale_factor,
    mih_from_hrep,
    mih_from_vrep,
    mih_oracle,
    mixed_integer_hull,
    reduce_to_polytope,
    scale_polytope,
    vertex_bound_hrep,
    vertex_bound_vrep,
)
from .polyrep import HRep, MixedSpace, VRep, hrep_to_vrep, vrep_to_hrep

__all__ = [
    "PiecewiseAffineConcave",
    "evaluate",
    "minimize_over_mih",
    "EmptyPolyhedron",
    "ImplicitLineality",
    "MixedInfeasible",
    "ParseError",
    "PolyhedralError",
    "UnboundedInput",
    "format_instance",
    "format_objective",
    "parse_instance",
    "parse_objective",
    "Triangulation",
    "delaunay_triangulate",
    "hull_vertices",
    "IntegerHull",
    "integer_hull_from_vertices",
    "integer_hull_oracle",
    "intvertex_bound",
    "LpResult",
    "LpStatus",
    "is_extreme_point",
    "lp_solve",
    "point_in_hull",
    "MixedIntegerHull",
    "ScaleReport",
    "compute_scale_factor",
    "mih_from_hrep",
    "mih_from_vrep",
    "mih_oracle",
    "mixed_integer_hull",
    "reduce_to_polytope",
    "scale_polytope",
    "vertex_bound_hrep",
    "vertex_bound_vrep",
    "HRep",
    "MixedSpace",
    "VRep",
    "hrep_to_vrep",
    "vrep_to_hrep",
]
