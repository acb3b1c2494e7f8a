"""Seamless tile synthesis.

A tile is built in pattern space: whole-texture orientation and phase are
carried as a pattern transform and never bend the tile geometry itself, so
tiles stay periodic under axis-aligned translation no matter the rotation.

Cell dimensions are quantized to 1/64 unit. The effective pitch therefore
deviates from the nominal 100/density by at most one part in a few thousand,
in exchange every tile offset is an exact dyadic number and repetition is
bit-exact (see shapes module).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from bwtex.errors import InvalidSpec
from bwtex.textures import glyphs, rng
from bwtex.textures.shapes import (
    Annulus,
    Disc,
    HatchFamily,
    IconShape,
    PlacedShape,
)
from bwtex.textures.spec import Dot, Grid, Icon, Line, TextureSpec

QUANTUM = 0.25             # cell edges snap to this, keeping tile offsets dyadic
PITCH_FLOOR_RATIO = 0.25   # pitch must be at least this fraction of size
MAX_RATIONAL_SLOPE = 12    # search bound for grid cross-hatch directions


@dataclass(frozen=True)
class TileGeometry:
    """One repeatable cell of a texture, plus its pattern transform."""

    cell_width: float
    cell_height: float
    background_fill: str
    ink_fill: str
    elements: tuple[PlacedShape, ...]
    orientation_deg: float = 0.0
    phase: tuple[float, float] = (0.0, 0.0)

    @property
    def cell(self) -> tuple[float, float]:
        return (self.cell_width, self.cell_height)


def _quantize(value: float) -> float:
    return max(QUANTUM, round(value / QUANTUM) * QUANTUM)


def _cell_layout(spec: TextureSpec) -> tuple[float, int, float]:
    """(cell edge, lattice count per edge, effective pitch)."""
    nominal_pitch = spec.pitch
    n = max(1, round(spec.density))
    cell = _quantize(n * nominal_pitch)
    return cell, n, cell / n


def _check_floor(spec: TextureSpec, floor_ratio: float) -> None:
    if spec.pitch < floor_ratio * spec.size:
        raise InvalidSpec(
            f"density {spec.density} gives pitch {spec.pitch:.3f} below the floor "
            f"{floor_ratio} * size ({floor_ratio * spec.size:.3f}); reduce density or size"
        )


def build_tile(spec: TextureSpec, *, pitch_floor_ratio: float = PITCH_FLOOR_RATIO) -> TileGeometry:
    """Synthesize the repeatable cell for a texture spec.

    Deterministic for a fixed (spec, seed). Elements that cross the cell
    boundary appear again at every wrapped position that still intersects the
    cell, so clipping the cell and tiling it reproduces the infinite texture.
    """
    _check_floor(spec, pitch_floor_ratio)
    prim = spec.primitive
    if isinstance(prim, Line):
        elements, cell = _build_lines(spec)
    elif isinstance(prim, Grid):
        elements, cell = _build_grid(spec, prim)
    elif isinstance(prim, Dot):
        elements, cell = _build_dots(spec, prim)
    elif isinstance(prim, Icon):
        elements, cell = _build_icons(spec, prim)
    else:  # pragma: no cover - spec validation rejects this earlier
        raise InvalidSpec(f"unsupported primitive {prim!r}")
    return TileGeometry(
        cell_width=cell,
        cell_height=cell,
        background_fill=spec.background,
        ink_fill=spec.ink,
        elements=tuple(elements),
        orientation_deg=spec.orientation_deg,
        phase=spec.phase,
    )


def _build_lines(spec: TextureSpec):
    cell, n, _ = _cell_layout(spec)
    fam = HatchFamily(q=0, r=1, period=cell, count=n, halfwidth=spec.size / 2.0)
    return [PlacedShape(fam)], cell


def _build_grid(spec: TextureSpec, prim: Grid):
    cell, n, s_eff = _cell_layout(spec)
    horizontal = HatchFamily(q=0, r=1, period=cell, count=n, halfwidth=spec.size / 2.0)
    q, r, m = _pick_cross_direction(prim.crossing_angle_deg, n)
    h = math.hypot(q, r)
    crossing = HatchFamily(q=q, r=r, period=cell, count=m, halfwidth=spec.size / 2.0 * h)
    return [PlacedShape(horizontal), PlacedShape(crossing)], cell


def _pick_cross_direction(angle_deg: float, n: int) -> tuple[int, int, int]:
    """Best lattice-rational direction (q, r) and stripe count for a grid.

    Only directions (r, q) with integer components keep a square cell exactly
    periodic, so the requested crossing angle is approximated by the closest
    such direction, trading off angle error against spacing error.
    """
    best = None
    for q in range(1, MAX_RATIONAL_SLOPE + 1):
        for r in range(-MAX_RATIONAL_SLOPE, MAX_RATIONAL_SLOPE + 1):
            if math.gcd(q, abs(r)) != 1:
                continue
            phi = math.degrees(math.atan2(q, r)) % 180.0
            angle_err = abs(phi - angle_deg)
            h = math.hypot(q, r)
            for m in {max(1, math.floor(n / h)), max(1, math.ceil(n / h)), max(1, round(n / h))}:
                # spacing achieved vs the nominal pitch, both relative to cell
                sp_err = abs(n / (m * h) - 1.0)
                score = angle_err + 60.0 * sp_err
                key = (score, h, angle_err, q, r, m)
                if best is None or key < best:
                    best = key
    _, _, _, q, r, m = best
    return q, r, m


def _build_dots(spec: TextureSpec, prim: Dot):
    def make(cx: float, cy: float):
        if prim.filled:
            return Disc(cx, cy, spec.size)
        return Annulus(cx, cy, spec.size, spec.size / 2.0)

    cell, n, pitch = _cell_layout(spec)
    extent = spec.size
    return _place_lattice(spec, cell, n, pitch, extent, make), cell


def _build_icons(spec: TextureSpec, prim: Icon):
    art = glyphs.resolve(prim.glyph_id, prim.style.detail, prim.style.weight)
    cell, n, pitch = _cell_layout(spec)
    rot = math.radians(spec.primitive_rotation_deg)
    cos_r, sin_r = math.cos(rot), math.sin(rot)
    stroke = art.stroke_width * spec.size if (art.stroke_rings or art.stroke_lines) else 0.0

    def transform(points):
        pts = (np.asarray(points, dtype=float) - 0.5) * spec.size
        x = pts[:, 0] * cos_r - pts[:, 1] * sin_r
        y = pts[:, 0] * sin_r + pts[:, 1] * cos_r
        return np.column_stack([x, y])

    # centered artwork is shared by every lattice cell
    rings = tuple(transform(ring) for ring in art.fill_rings)
    strokes = tuple(
        [transform(np.vstack([ring, ring[:1]])) for ring in art.stroke_rings]
        + [transform(line) for line in art.stroke_lines]
    )
    all_pts = np.vstack(list(rings) + list(strokes)) if (rings or strokes) else np.zeros((1, 2))
    half_extent = float(np.abs(all_pts).max()) + stroke / 2.0

    def make(cx: float, cy: float):
        return IconShape(cx=cx, cy=cy, rings=rings, strokes=strokes,
                         stroke_width=stroke, half_extent=half_extent)

    return _place_lattice(spec, cell, n, pitch, half_extent, make), cell


def _place_lattice(spec, cell, n, pitch, extent, make):
    """Canonical lattice cells plus wrapped copies that still touch the tile.

    Jitter is keyed by the canonical cell index, so a wrapped copy is the same
    base shape at an exact whole-cell offset.
    """
    key = rng.stream_key(spec.seed)
    amplitude = spec.randomness * pitch
    reach = extent + amplitude / 2.0
    span = int(math.ceil((reach + pitch) / cell)) + 1

    placed: list[PlacedShape] = []
    for iy in range(n):
        for ix in range(n):
            jx, jy = rng.cell_jitter(key, ix, iy, amplitude)
            cx = (ix + 0.5) * pitch + jx
            cy = (iy + 0.5) * pitch + jy
            base = make(cx, cy)
            x0, y0, x1, y1 = base.bbox()
            for dj in range(-span, span + 1):
                oy = dj * cell
                if y1 + oy < 0.0 or y0 + oy > cell:
                    continue
                for di in range(-span, span + 1):
                    ox = di * cell
                    if x1 + ox < 0.0 or x0 + ox > cell:
                        continue
                    placed.append(PlacedShape(base, ox, oy))
    return placed
