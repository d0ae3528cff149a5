"""Reverse-search enumeration of at-most-k-out polygons of planar point sets."""
from .enumerator import EnumConfig, EnumStats, Schedule, enumerate_polygons, enumerate_to_list
from .geom import Polygon, PointSet, convex_hull, validate_point_set
from .oracle import oracle_enumerate

__all__ = [
    "EnumConfig",
    "EnumStats",
    "Polygon",
    "PointSet",
    "Schedule",
    "convex_hull",
    "enumerate_polygons",
    "enumerate_to_list",
    "oracle_enumerate",
    "validate_point_set",
]
