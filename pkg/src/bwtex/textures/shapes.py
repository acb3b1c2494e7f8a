"""Tile-space shape primitives with exact point-membership tests.

Rasterization in this package samples pixel centers and asks each shape for
boolean membership, vectorized over numpy coordinate arrays. Shapes never
store translated copies of themselves: a placed element is a base shape plus
an exact (dyadic) offset, and the rasterizer subtracts the offset from the
sample coordinates before testing. With power-of-two resolutions this keeps
every test bit-for-bit identical across tile repetitions, which is what makes
zero-pixel seam comparisons possible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

BBox = tuple[float, float, float, float]  # x0, y0, x1, y1


@dataclass(frozen=True)
class Disc:
    cx: float
    cy: float
    r: float

    def bbox(self) -> BBox:
        return (self.cx - self.r, self.cy - self.r, self.cx + self.r, self.cy + self.r)

    def contains(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        dx = xs - self.cx
        dy = ys - self.cy
        return dx * dx + dy * dy <= self.r * self.r


@dataclass(frozen=True)
class Annulus:
    """Ring between two concentric radii (an unfilled dot)."""

    cx: float
    cy: float
    r_outer: float
    r_inner: float

    def bbox(self) -> BBox:
        r = self.r_outer
        return (self.cx - r, self.cy - r, self.cx + r, self.cy + r)

    def contains(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        dx = xs - self.cx
        dy = ys - self.cy
        d2 = dx * dx + dy * dy
        return (d2 <= self.r_outer * self.r_outer) & (d2 >= self.r_inner * self.r_inner)


@dataclass(frozen=True)
class HatchFamily:
    """A periodic family of parallel stripes covering the whole tile.

    The family is the set of lines  -q*x + r*y = (k + 1/2) * period / count
    for every integer k, drawn with half-width ``halfwidth`` measured along
    the (unnormalized) functional. ``q`` and ``r`` are small coprime integers,
    so the line direction is (r, q) and the family maps onto itself under
    translation by (cell, 0) and (0, cell); no wrapped copies are needed.

    ``halfwidth`` is stroke_width / 2 * hypot(q, r): membership is tested on
    the integer-scaled functional to keep the arithmetic exact.
    """

    q: int
    r: int
    period: float
    count: int
    halfwidth: float

    def bbox(self) -> BBox:
        inf = math.inf
        return (-inf, -inf, inf, inf)

    def stroke_width(self) -> float:
        return 2.0 * self.halfwidth / math.hypot(self.q, self.r)

    def spacing(self) -> float:
        """Perpendicular distance between neighboring stripes, in units."""
        return self.period / self.count / math.hypot(self.q, self.r)

    def angle_deg(self) -> float:
        """Direction of the stripes, degrees counter-clockwise from +x."""
        return math.degrees(math.atan2(self.q, self.r)) % 180.0

    def contains(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        g = (-self.q) * xs + self.r * ys
        # exact reduction of g into [0, period): floor may be off by one ulp,
        # the corrections below operate on exact dyadic values
        k = np.floor(g / self.period)
        g = g - k * self.period
        g = np.where(g < 0.0, g + self.period, g)
        g = np.where(g >= self.period, g - self.period, g)
        step = self.period / self.count
        idx = np.floor(g / step - 0.5)
        hit = np.zeros(np.shape(g), dtype=bool)
        for delta in (0.0, 1.0):
            centers = ((idx + delta) * 2.0 + 1.0) * self.period / (2.0 * self.count)
            hit |= np.abs(g - centers) <= self.halfwidth
        return hit

    def line_anchors(self, x0: float, y0: float, x1: float, y1: float):
        """(point, direction) for every stripe crossing the given box."""
        h = math.hypot(self.q, self.r)
        nx_, ny_ = -self.q / h, self.r / h
        dx_, dy_ = self.r / h, self.q / h
        corners = [(x0, y0), (x0, y1), (x1, y0), (x1, y1)]
        gs = [(-self.q) * cx + self.r * cy for cx, cy in corners]
        step = self.period / self.count
        pad = self.halfwidth + step
        k_lo = math.floor((min(gs) - pad) / step - 0.5)
        k_hi = math.ceil((max(gs) + pad) / step - 0.5)
        out = []
        for k in range(k_lo, k_hi + 1):
            t = (2 * k + 1) * self.period / (2 * self.count)
            px, py = t * nx_ / h, t * ny_ / h
            out.append(((px, py), (dx_, dy_)))
        return out


@dataclass(frozen=True)
class IconShape:
    """One placed glyph: shared centered artwork plus this instance's center.

    ``rings`` are closed polygons around the origin (N x 2 float arrays,
    implicit closure), filled with the even-odd rule. ``strokes`` are
    polylines drawn with round caps and joins, so membership along them is a
    union of capsules. Lattice siblings share the same ring/stroke arrays and
    differ only in (cx, cy).
    """

    cx: float
    cy: float
    rings: tuple
    strokes: tuple
    stroke_width: float
    half_extent: float

    def bbox(self) -> BBox:
        return (self.cx - self.half_extent, self.cy - self.half_extent,
                self.cx + self.half_extent, self.cy + self.half_extent)

    def contains(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        flat_x, flat_y = np.broadcast_arrays(np.asarray(xs, dtype=float) - self.cx,
                                             np.asarray(ys, dtype=float) - self.cy)
        out = np.zeros(flat_x.shape, dtype=bool)
        if self.rings:
            out |= _even_odd(self.rings, flat_x, flat_y)
        if self.strokes and self.stroke_width > 0.0:
            hw = self.stroke_width / 2.0
            for pts in self.strokes:
                out |= _along_polyline(pts, flat_x, flat_y, hw)
        return out


def _even_odd(rings: Sequence[np.ndarray], xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    crossings = np.zeros(xs.shape, dtype=np.int64)
    for ring in rings:
        pts = np.asarray(ring, dtype=float)
        x0s = pts[:, 0]
        y0s = pts[:, 1]
        x1s = np.roll(x0s, -1)
        y1s = np.roll(y0s, -1)
        for ax, ay, bx, by in zip(x0s, y0s, x1s, y1s):
            if ay == by:
                continue
            cond = (ys >= min(ay, by)) & (ys < max(ay, by))
            t = (ys - ay) / (by - ay)
            x_at = ax + t * (bx - ax)
            crossings += (cond & (x_at > xs)).astype(np.int64)
    return (crossings & 1).astype(bool)


def _along_polyline(pts: np.ndarray, xs: np.ndarray, ys: np.ndarray, hw: float) -> np.ndarray:
    pts = np.asarray(pts, dtype=float)
    out = np.zeros(xs.shape, dtype=bool)
    hw2 = hw * hw
    for i in range(len(pts) - 1):
        ax, ay = pts[i]
        bx, by = pts[i + 1]
        ex, ey = bx - ax, by - ay
        ee = ex * ex + ey * ey
        dx = xs - ax
        dy = ys - ay
        if ee == 0.0:
            out |= dx * dx + dy * dy <= hw2
            continue
        t = np.clip((dx * ex + dy * ey) / ee, 0.0, 1.0)
        qx = dx - t * ex
        qy = dy - t * ey
        out |= qx * qx + qy * qy <= hw2
    return out


Shape = Union[Disc, Annulus, HatchFamily, IconShape]


@dataclass(frozen=True)
class PlacedShape:
    """A base shape translated by an exact offset (multiples of 1/64 unit)."""

    shape: Shape
    dx: float = 0.0
    dy: float = 0.0

    def bbox(self) -> BBox:
        x0, y0, x1, y1 = self.shape.bbox()
        return (x0 + self.dx, y0 + self.dy, x1 + self.dx, y1 + self.dy)
