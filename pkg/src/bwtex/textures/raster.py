"""Pixel-sampling oracle for tiles.

Pixel centers are sampled at ((i + 0.5) / resolution). With a power-of-two
resolution and the dyadic cell sizes produced by the tile builder, every
arithmetic step below is exact, so a 2x2 repetition rasterized directly is
bit-identical to the single-tile raster repeated in pixel space whenever the
tile geometry is truly periodic.
"""

from __future__ import annotations

import math

import numpy as np

from bwtex.errors import InvalidSpec
from bwtex.textures.shapes import HatchFamily
from bwtex.textures.spec import TextureSpec
from bwtex.textures.tile import TileGeometry, build_tile


def _sample_axis(n_pixels: int, resolution: float) -> np.ndarray:
    return (np.arange(n_pixels, dtype=float) + 0.5) / resolution


def _pixel_count(extent: float, resolution: float) -> int:
    n = extent * resolution
    n_round = round(n)
    if abs(n - n_round) > 1e-9:
        raise ValueError(
            f"extent {extent} at resolution {resolution} is not pixel-aligned; "
            f"use a resolution that makes cell * resolution integral"
        )
    return int(n_round)


def tile_ink_mask(tile: TileGeometry, resolution: float) -> np.ndarray:
    """Boolean ink mask of one clipped tile, shape (rows, cols)."""
    w_px = _pixel_count(tile.cell_width, resolution)
    h_px = _pixel_count(tile.cell_height, resolution)
    xs = _sample_axis(w_px, resolution)
    ys = _sample_axis(h_px, resolution)
    return _paint(tile, xs, ys, copies=[(0.0, 0.0)])


def tiling_ink_mask(tile: TileGeometry, resolution: float, nx: int, ny: int) -> np.ndarray:
    """Ink mask of an nx-by-ny repetition, evaluated directly (not resampled).

    Every element is drawn at every repetition offset whose footprint reaches
    into the window; nothing is clipped per cell. Comparing this against a
    pixel-tiled single-cell mask is the seam oracle.
    """
    w_px = _pixel_count(tile.cell_width * nx, resolution)
    h_px = _pixel_count(tile.cell_height * ny, resolution)
    xs = _sample_axis(w_px, resolution)
    ys = _sample_axis(h_px, resolution)
    copies = [
        (i * tile.cell_width, j * tile.cell_height)
        for j in range(-1, ny + 1)
        for i in range(-1, nx + 1)
    ]
    return _paint(tile, xs, ys, copies=copies)


def _paint(tile: TileGeometry, xs: np.ndarray, ys: np.ndarray, copies) -> np.ndarray:
    out = np.zeros((len(ys), len(xs)), dtype=bool)
    x_min, x_max = (xs[0], xs[-1]) if len(xs) else (0.0, 0.0)
    y_min, y_max = (ys[0], ys[-1]) if len(ys) else (0.0, 0.0)
    for placed in tile.elements:
        if isinstance(placed.shape, HatchFamily):
            out |= placed.shape.contains(xs[None, :], ys[:, None])
            continue
        for ox, oy in copies:
            tx = placed.dx + ox
            ty = placed.dy + oy
            bx0, by0, bx1, by1 = placed.shape.bbox()
            if bx1 + tx < x_min or bx0 + tx > x_max or by1 + ty < y_min or by0 + ty > y_max:
                continue
            c0 = np.searchsorted(xs, bx0 + tx, side="left")
            c1 = np.searchsorted(xs, bx1 + tx, side="right")
            r0 = np.searchsorted(ys, by0 + ty, side="left")
            r1 = np.searchsorted(ys, by1 + ty, side="right")
            if c0 >= c1 or r0 >= r1:
                continue
            out[r0:r1, c0:c1] |= placed.shape.contains(
                xs[c0:c1][None, :] - tx, ys[r0:r1][:, None] - ty
            )
    return out


def window_ink_mask(tile: TileGeometry, resolution: float, cx: int, cy: int) -> np.ndarray:
    """Ink mask of the cell window shifted by (cx, cy) whole cells.

    Seamlessness means this equals tile_ink_mask for every (cx, cy): shifting
    the clip window by one period and re-clipping changes nothing.
    """
    w_px = _pixel_count(tile.cell_width, resolution)
    h_px = _pixel_count(tile.cell_height, resolution)
    xs = _sample_axis(w_px, resolution) + cx * tile.cell_width
    ys = _sample_axis(h_px, resolution) + cy * tile.cell_height
    copies = [
        (i * tile.cell_width, j * tile.cell_height)
        for j in (cy - 1, cy, cy + 1)
        for i in (cx - 1, cx, cx + 1)
    ]
    return _paint(tile, xs, ys, copies=copies)


def reduce_mod(values: np.ndarray, period: float) -> np.ndarray:
    """Exact reduction into [0, period) for dyadic inputs."""
    k = np.floor(values / period)
    res = values - k * period
    res = np.where(res < 0.0, res + period, res)
    res = np.where(res >= period, res - period, res)
    return res


def pattern_ink_at(tile: TileGeometry, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Ink membership of arbitrary pattern-space points (broadcastable arrays)."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    xc = reduce_mod(xs, tile.cell_width)
    yc = reduce_mod(ys, tile.cell_height)
    out = np.zeros(np.broadcast(xc, yc).shape, dtype=bool)
    xb = np.broadcast_to(xc, out.shape)
    yb = np.broadcast_to(yc, out.shape)
    for placed in tile.elements:
        if isinstance(placed.shape, HatchFamily):
            out |= placed.shape.contains(xb, yb)
            continue
        bx0, by0, bx1, by1 = placed.bbox()
        cand = (xb >= bx0) & (xb <= bx1) & (yb >= by0) & (yb <= by1)
        if not cand.any():
            continue
        out[cand] |= placed.shape.contains(xb[cand] - placed.dx, yb[cand] - placed.dy)
    return out


def tile_color_mask(tile: TileGeometry, resolution: float) -> np.ndarray:
    """Grayscale raster of one tile: 0.0 is black, 1.0 is white."""
    ink = tile_ink_mask(tile, resolution)
    if tile.background_fill == "white":
        return np.where(ink, 0.0, 1.0)
    return np.where(ink, 1.0, 0.0)


def ink_ratio(spec: TextureSpec, resolution: float = 8.0) -> float:
    """Fraction of one tile covered by the ink (contrast) color.

    Measured on the contrast color, so a pure background tile reports 0
    regardless of whether the background is white or black.
    """
    if resolution < 2.0:
        raise InvalidSpec(f"ink_ratio needs resolution >= 2 px/unit, got {resolution}")
    tile = build_tile(spec)
    return tile_ink_ratio(tile, resolution)


def tile_ink_ratio(tile: TileGeometry, resolution: float = 8.0) -> float:
    n_x = max(1, int(round(tile.cell_width * resolution)))
    n_y = max(1, int(round(tile.cell_height * resolution)))
    xs = _sample_axis(n_x, resolution)
    ys = _sample_axis(n_y, resolution)
    ink = pattern_ink_at(tile, xs[None, :], ys[:, None])
    return float(np.count_nonzero(ink)) / float(ink.size)
