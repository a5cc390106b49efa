"""Measured flat laminations on half-translation surfaces, in exact arithmetic."""

from .surface_core import FlatSurface, ConePoint, validate_surface, cone_angle

__all__ = ["FlatSurface", "ConePoint", "validate_surface", "cone_angle"]
