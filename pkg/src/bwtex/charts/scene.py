"""Render scene: a flat display list that serializes to SVG and rasterizes.

Chart coordinates are canvas pixels, y down. Wedge angles are expressed as
turn fractions with 0 at 12 o'clock, increasing clockwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from bwtex.textures.tile import TileGeometry


def turn_dir(f: float) -> tuple[float, float]:
    """Unit vector for a clockwise turn fraction (0 = up, 0.25 = right)."""
    a = 2.0 * math.pi * f
    return (math.sin(a), -math.cos(a))


@dataclass(frozen=True)
class PolyShape:
    rings: tuple[tuple[tuple[float, float], ...], ...]

    def bbox(self):
        xs = [p[0] for ring in self.rings for p in ring]
        ys = [p[1] for ring in self.rings for p in ring]
        return (min(xs), min(ys), max(xs), max(ys))

    def contains(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        crossings = np.zeros(X.shape, dtype=np.int64)
        for ring in self.rings:
            n = len(ring)
            for i in range(n):
                ax, ay = ring[i]
                bx, by = ring[(i + 1) % n]
                if ay == by:
                    continue
                cond = (Y >= min(ay, by)) & (Y < max(ay, by))
                x_at = ax + (Y - ay) / (by - ay) * (bx - ax)
                crossings += (cond & (x_at > X)).astype(np.int64)
        return (crossings & 1).astype(bool)

    def stroke_contains(self, X, Y, width: float) -> np.ndarray:
        out = np.zeros(X.shape, dtype=bool)
        hw2 = (width / 2.0) ** 2
        for ring in self.rings:
            n = len(ring)
            for i in range(n):
                ax, ay = ring[i]
                bx, by = ring[(i + 1) % n]
                out |= _capsule(X, Y, ax, ay, bx, by, hw2)
        return out


@dataclass(frozen=True)
class CircleShape:
    cx: float
    cy: float
    r: float

    def bbox(self):
        return (self.cx - self.r, self.cy - self.r, self.cx + self.r, self.cy + self.r)

    def contains(self, X, Y):
        return (X - self.cx) ** 2 + (Y - self.cy) ** 2 <= self.r * self.r

    def stroke_contains(self, X, Y, width: float):
        d = np.sqrt((X - self.cx) ** 2 + (Y - self.cy) ** 2)
        return np.abs(d - self.r) <= width / 2.0


@dataclass(frozen=True)
class WedgeShape:
    cx: float
    cy: float
    r: float
    f0: float
    f1: float  # turn fractions, f1 > f0, full circle when f1 - f0 >= 1

    def bbox(self):
        return (self.cx - self.r, self.cy - self.r, self.cx + self.r, self.cy + self.r)

    def _fractions(self, X, Y):
        f = np.arctan2(X - self.cx, -(Y - self.cy)) / (2.0 * math.pi)
        return np.mod(f, 1.0)

    def _in_angle(self, F):
        lo = self.f0 % 1.0
        hi = lo + (self.f1 - self.f0)
        if self.f1 - self.f0 >= 1.0:
            return np.ones(F.shape, dtype=bool)
        if hi <= 1.0:
            return (F >= lo) & (F < hi)
        return (F >= lo) | (F < hi - 1.0)

    def contains(self, X, Y):
        inside_r = (X - self.cx) ** 2 + (Y - self.cy) ** 2 <= self.r * self.r
        return inside_r & self._in_angle(self._fractions(X, Y))

    def stroke_contains(self, X, Y, width: float):
        hw = width / 2.0
        d = np.sqrt((X - self.cx) ** 2 + (Y - self.cy) ** 2)
        arc = (np.abs(d - self.r) <= hw) & self._in_angle(self._fractions(X, Y))
        out = arc
        if self.f1 - self.f0 < 1.0:
            hw2 = hw * hw
            for f in (self.f0, self.f1):
                dx, dy = turn_dir(f)
                out = out | _capsule(X, Y, self.cx, self.cy,
                                     self.cx + dx * self.r, self.cy + dy * self.r, hw2)
        return out


def _capsule(X, Y, ax, ay, bx, by, hw2):
    ex, ey = bx - ax, by - ay
    ee = ex * ex + ey * ey
    dx = X - ax
    dy = Y - ay
    if ee == 0.0:
        return dx * dx + dy * dy <= hw2
    t = np.clip((dx * ex + dy * ey) / ee, 0.0, 1.0)
    qx = dx - t * ex
    qy = dy - t * ey
    return qx * qx + qy * qy <= hw2


Shape = Union[PolyShape, CircleShape, WedgeShape]


@dataclass(frozen=True)
class SolidPaint:
    gray: float


@dataclass(frozen=True)
class PatternPaint:
    pattern_id: str


Paint = Union[SolidPaint, PatternPaint]


@dataclass(frozen=True)
class FillOp:
    shape: Shape
    paint: Paint


@dataclass(frozen=True)
class StrokeOp:
    shape: Shape
    width: float
    gray: float


@dataclass(frozen=True)
class LabelOp:
    x: float
    y: float
    text: str
    size: float = 11.0
    anchor: str = "start"  # start | middle | end
    gray: float = 0.0


Op = Union[FillOp, StrokeOp, LabelOp]


@dataclass
class Scene:
    width: int
    height: int
    patterns: dict[str, TileGeometry] = field(default_factory=dict)
    ops: list[Op] = field(default_factory=list)

    def add_pattern(self, pattern_id: str, tile: TileGeometry) -> str:
        self.patterns[pattern_id] = tile
        return pattern_id

    def fill(self, shape: Shape, paint: Paint) -> None:
        self.ops.append(FillOp(shape, paint))

    def stroke(self, shape: Shape, width: float, gray: float) -> None:
        if width > 0:
            self.ops.append(StrokeOp(shape, width, gray))

    def label(self, x, y, text, size=11.0, anchor="start", gray=0.0) -> None:
        self.ops.append(LabelOp(x, y, str(text), size, anchor, gray))
