"""White halo layering between a shape's texture and its outline."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from shapely.geometry import Polygon
from shapely.geometry.base import BaseGeometry

from bwtex.errors import DegenerateInsetWarning, InvalidSpec


@dataclass(frozen=True)
class HaloStack:
    """Layering for one chart shape, innermost first.

    ``texture_region`` is the shape inset by halo + outline/2: the area that
    still shows texture. ``halo_band`` is the white ring of width halo_width
    and ``outline_path`` the boundary to stroke at outline_width. When the
    inset swallows the whole shape the stack is degenerate: no texture area,
    the shape renders white inside its outline.
    """

    texture_region: BaseGeometry
    halo_band: BaseGeometry
    outline_path: BaseGeometry
    outline_width: float
    halo_width: float
    degenerate: bool


def apply_halo(shape: BaseGeometry, halo_width: float, outline_width: float) -> HaloStack:
    if halo_width < 0 or outline_width < 0:
        raise InvalidSpec("halo and outline widths must be non-negative")
    inset = halo_width + outline_width / 2.0
    texture_region = shape.buffer(-inset) if inset > 0 else shape
    inner_edge = shape.buffer(-outline_width / 2.0) if outline_width > 0 else shape
    halo_band = inner_edge.difference(texture_region)
    degenerate = texture_region.is_empty
    if degenerate:
        warnings.warn(
            f"halo {halo_width} + outline {outline_width} leave no texture area "
            f"for a shape with area {shape.area:.1f}; rendering it plain",
            DegenerateInsetWarning,
            stacklevel=2,
        )
    return HaloStack(
        texture_region=texture_region,
        halo_band=halo_band,
        outline_path=shape.boundary,
        outline_width=outline_width,
        halo_width=halo_width,
        degenerate=degenerate,
    )


def wedge_polygon(cx: float, cy: float, r: float, f0: float, f1: float,
                  steps_per_turn: int = 256) -> Polygon:
    """Shapely stand-in for a pie wedge (arc sampled)."""
    span = f1 - f0
    if span >= 1.0:
        pts = [_dir_point(cx, cy, r, i / steps_per_turn) for i in range(steps_per_turn)]
        return Polygon(pts)
    n = max(2, int(math.ceil(span * steps_per_turn)))
    pts = [(cx, cy)]
    for i in range(n + 1):
        pts.append(_dir_point(cx, cy, r, f0 + span * i / n))
    return Polygon(pts)


def _dir_point(cx, cy, r, f):
    a = 2.0 * math.pi * f
    return (cx + r * math.sin(a), cy - r * math.cos(a))
