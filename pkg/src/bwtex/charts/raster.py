"""Scene rasterization: the oracle behind the SVG output, and PNG export.

The raster samples pixel centers into a grayscale float buffer (0 black,
1 white). Text labels carry no ink here; geometry does. Pattern fills look up
a pre-rasterized tile with the same pixels-per-unit, so an untransformed
pattern is pixel-anchored to the canvas exactly like the SVG output.
"""

from __future__ import annotations

import io
import math

import numpy as np

from bwtex.charts.scene import FillOp, LabelOp, Scene, SolidPaint, StrokeOp
from bwtex.textures.raster import pattern_ink_at
from bwtex.textures.tile import TileGeometry


def scene_to_gray(scene: Scene, scale: int = 1) -> np.ndarray:
    """Rasterize at `scale` pixels per canvas unit. Returns (h, w) floats."""
    w_px = int(round(scene.width * scale))
    h_px = int(round(scene.height * scale))
    buf = np.ones((h_px, w_px), dtype=float)
    xs = (np.arange(w_px, dtype=float) + 0.5) / scale
    ys = (np.arange(h_px, dtype=float) + 0.5) / scale
    tiles = {pid: _TileSampler(tile, scale) for pid, tile in scene.patterns.items()}

    for op in scene.ops:
        if isinstance(op, LabelOp):
            continue
        if isinstance(op, FillOp):
            region = _shape_region(op.shape, xs, ys, scale, pad=1.0)
            if region is None:
                continue
            sl, X, Y = region
            mask = op.shape.contains(X, Y)
            if isinstance(op.paint, SolidPaint):
                buf[sl][mask] = op.paint.gray
            else:
                sampler = tiles[op.paint.pattern_id]
                ink = sampler.ink_at(X[mask], Y[mask])
                target = buf[sl]
                vals = np.where(ink, sampler.ink_gray, sampler.bg_gray)
                target[mask] = vals
                buf[sl] = target
        elif isinstance(op, StrokeOp):
            region = _shape_region(op.shape, xs, ys, scale, pad=op.width + 1.0)
            if region is None:
                continue
            sl, X, Y = region
            mask = op.shape.stroke_contains(X, Y, op.width)
            buf[sl][mask] = op.gray
    return buf


def _shape_region(shape, xs, ys, scale, pad):
    x0, y0, x1, y1 = shape.bbox()
    c0 = max(0, int(math.floor((x0 - pad) * scale)))
    c1 = min(len(xs), int(math.ceil((x1 + pad) * scale)) + 1)
    r0 = max(0, int(math.floor((y0 - pad) * scale)))
    r1 = min(len(ys), int(math.ceil((y1 + pad) * scale)) + 1)
    if c0 >= c1 or r0 >= r1:
        return None
    sl = np.s_[r0:r1, c0:c1]
    X = xs[c0:c1][None, :]
    Y = ys[r0:r1][:, None]
    X, Y = np.broadcast_arrays(X, Y)
    return sl, X, Y


class _TileSampler:
    """Nearest-pixel pattern lookup honoring orientation and phase."""

    def __init__(self, tile: TileGeometry, scale: int):
        self.tile = tile
        self.scale = scale
        n_x = max(1, int(round(tile.cell_width * scale)))
        n_y = max(1, int(round(tile.cell_height * scale)))
        xs = (np.arange(n_x, dtype=float) + 0.5) / scale
        ys = (np.arange(n_y, dtype=float) + 0.5) / scale
        self.mask = pattern_ink_at(tile, xs[None, :], ys[:, None])
        self.ink_gray = 0.0 if tile.ink_fill == "black" else 1.0
        self.bg_gray = 1.0 - self.ink_gray
        theta = math.radians(tile.orientation_deg)
        self.cos_t = math.cos(theta)
        self.sin_t = math.sin(theta)

    def ink_at(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        dx, dy = self.tile.phase
        u = X - dx
        v = Y - dy
        if self.tile.orientation_deg != 0.0:
            u, v = u * self.cos_t + v * self.sin_t, -u * self.sin_t + v * self.cos_t
        cols = np.floor(u * self.scale).astype(np.int64) % self.mask.shape[1]
        rows = np.floor(v * self.scale).astype(np.int64) % self.mask.shape[0]
        return self.mask[rows, cols]


def gray_to_png_bytes(gray: np.ndarray) -> bytes:
    from PIL import Image

    img = Image.fromarray(np.clip(np.round(gray * 255.0), 0, 255).astype(np.uint8), mode="L")
    out = io.BytesIO()
    img.save(out, format="PNG")
    return out.getvalue()
