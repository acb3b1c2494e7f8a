"""SVG <pattern> emission for tiles.

Patterns repeat in user space (patternUnits="userSpaceOnUse"), so every shape
filled with the same pattern shows the texture anchored to the canvas, not to
the shape. Whole-texture orientation and phase ride on patternTransform.
Output is deterministic: identical tiles emit byte-identical text.
"""

from __future__ import annotations

import math

import numpy as np

from bwtex.svgutil import fmt, tag
from bwtex.textures.shapes import Annulus, Disc, HatchFamily, IconShape, PlacedShape
from bwtex.textures.tile import TileGeometry

_COLORS = {"white": "#ffffff", "black": "#000000"}


def emit_pattern(tile: TileGeometry, pattern_id: str) -> str:
    """Standalone SVG <pattern> element for one tile."""
    w, h = tile.cell_width, tile.cell_height
    ink = _COLORS[tile.ink_fill]
    parts = [tag("rect", {"x": 0, "y": 0, "width": w, "height": h,
                          "fill": _COLORS[tile.background_fill]})]
    glyph_defs: dict[int, str] = {}  # id(rings) -> def id, shared per glyph artwork
    has_icons = False
    for placed in tile.elements:
        if isinstance(placed.shape, IconShape):
            has_icons = True
            parts.append(_emit_icon_use(placed, tile, ink, pattern_id, glyph_defs, parts))
        else:
            parts.append(_emit_placed(placed, tile, ink))
    transform = _pattern_transform(tile)
    attrs = {
        "id": pattern_id,
        "width": w,
        "height": h,
        "patternUnits": "userSpaceOnUse",
    }
    if has_icons:
        attrs["xmlns:xlink"] = "http://www.w3.org/1999/xlink"
    if transform:
        attrs["patternTransform"] = transform
    return tag("pattern", attrs, "".join(parts))


def _emit_icon_use(placed: PlacedShape, tile: TileGeometry, ink: str,
                   pattern_id: str, glyph_defs: dict, parts: list) -> str:
    shape = placed.shape
    key = id(shape.rings) ^ id(shape.strokes)
    if key not in glyph_defs:
        def_id = f"{pattern_id}-g{len(glyph_defs)}"
        glyph_defs[key] = def_id
        body = _emit_icon(shape, 0.0, 0.0, ink)
        parts.append(f'<defs><g id="{def_id}">{body}</g></defs>')
    return tag("use", {
        "xlink:href": f"#{glyph_defs[key]}",
        "x": shape.cx + placed.dx,
        "y": shape.cy + placed.dy,
    })


def _pattern_transform(tile: TileGeometry) -> str:
    ops = []
    dx, dy = tile.phase
    if dx != 0.0 or dy != 0.0:
        ops.append(f"translate({fmt(dx)} {fmt(dy)})")
    if tile.orientation_deg != 0.0:
        ops.append(f"rotate({fmt(tile.orientation_deg)})")
    return " ".join(ops)


def _emit_placed(placed: PlacedShape, tile: TileGeometry, ink: str) -> str:
    shape = placed.shape
    if isinstance(shape, HatchFamily):
        return _emit_hatch(shape, tile, ink)
    if isinstance(shape, Disc):
        return tag("circle", {"cx": shape.cx + placed.dx, "cy": shape.cy + placed.dy,
                              "r": shape.r, "fill": ink})
    if isinstance(shape, Annulus):
        mid = (shape.r_outer + shape.r_inner) / 2.0
        width = shape.r_outer - shape.r_inner
        return tag("circle", {"cx": shape.cx + placed.dx, "cy": shape.cy + placed.dy,
                              "r": mid, "fill": "none", "stroke": ink,
                              "stroke-width": width})
    raise TypeError(f"cannot emit shape {shape!r}")


def _emit_hatch(fam: HatchFamily, tile: TileGeometry, ink: str) -> str:
    # one <line> per stripe, extended a little past the cell so butt caps
    # never show at the seam
    w, h = tile.cell_width, tile.cell_height
    pad = fam.stroke_width() + 1.0
    out = []
    for (px, py), (dx, dy) in fam.line_anchors(0.0, 0.0, w, h):
        seg = _clip_infinite_line(px, py, dx, dy, -pad, -pad, w + pad, h + pad)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = seg
        out.append(tag("line", {"x1": x1, "y1": y1, "x2": x2, "y2": y2,
                                "stroke": ink, "stroke-width": fam.stroke_width()}))
    return "".join(out)


def _clip_infinite_line(px, py, dx, dy, x0, y0, x1, y1):
    """Segment of the infinite line p + t*d inside an axis box, or None."""
    t_lo, t_hi = -math.inf, math.inf
    for p, d, lo, hi in ((px, dx, x0, x1), (py, dy, y0, y1)):
        if d == 0.0:
            if not lo <= p <= hi:
                return None
            continue
        ta = (lo - p) / d
        tb = (hi - p) / d
        if ta > tb:
            ta, tb = tb, ta
        t_lo = max(t_lo, ta)
        t_hi = min(t_hi, tb)
    if t_lo >= t_hi:
        return None
    return (px + t_lo * dx, py + t_lo * dy), (px + t_hi * dx, py + t_hi * dy)


def _emit_icon(shape: IconShape, dx: float, dy: float, ink: str) -> str:
    out = []
    if shape.rings:
        d = " ".join(_ring_path(r, dx, dy) for r in shape.rings)
        out.append(tag("path", {"d": d, "fill": ink, "fill-rule": "evenodd"}))
    if shape.strokes and shape.stroke_width > 0.0:
        d = " ".join(_poly_path(p, dx, dy) for p in shape.strokes)
        out.append(tag("path", {"d": d, "fill": "none", "stroke": ink,
                                "stroke-width": shape.stroke_width,
                                "stroke-linecap": "round",
                                "stroke-linejoin": "round"}))
    return "".join(out)


def _ring_path(ring: np.ndarray, dx: float, dy: float) -> str:
    pts = np.asarray(ring, dtype=float)
    coords = " ".join(f"{fmt(x + dx)} {fmt(y + dy)}" for x, y in pts)
    head, _, rest = coords.partition(" ")
    rest_head, _, tail = rest.partition(" ")
    return f"M {head} {rest_head} L {tail} Z" if tail else f"M {coords} Z"


def _poly_path(poly: np.ndarray, dx: float, dy: float) -> str:
    pts = np.asarray(poly, dtype=float)
    coords = " ".join(f"{fmt(x + dx)} {fmt(y + dy)}" for x, y in pts)
    head, _, rest = coords.partition(" ")
    rest_head, _, tail = rest.partition(" ")
    return f"M {head} {rest_head} L {tail}" if tail else f"M {coords}"
