"""Scene to SVG 1.1 serialization. Deterministic: same scene, same bytes."""

from __future__ import annotations

import math

from bwtex.charts.scene import (
    CircleShape,
    FillOp,
    LabelOp,
    PolyShape,
    Scene,
    SolidPaint,
    StrokeOp,
    WedgeShape,
    turn_dir,
)
from bwtex.svgutil import esc, fmt, tag
from bwtex.textures.pattern import emit_pattern


def gray_hex(gray: float) -> str:
    v = max(0, min(255, round(gray * 255.0)))
    return f"#{v:02x}{v:02x}{v:02x}"


def scene_to_svg(scene: Scene) -> str:
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{scene.width}" '
        f'height="{scene.height}" viewBox="0 0 {scene.width} {scene.height}">'
    ]
    if scene.patterns:
        defs = "".join(emit_pattern(tile, pid) for pid, tile in scene.patterns.items())
        parts.append(f"<defs>{defs}</defs>")
    for op in scene.ops:
        parts.append(_emit_op(op))
    parts.append("</svg>")
    return "".join(parts)


def ops_fragment(ops) -> str:
    """Serialize a bare op list (no svg element, no defs)."""
    return "".join(_emit_op(op) for op in ops)


def _emit_op(op) -> str:
    if isinstance(op, FillOp):
        fill = (
            f"url(#{op.paint.pattern_id})"
            if not isinstance(op.paint, SolidPaint)
            else gray_hex(op.paint.gray)
        )
        return _shape_element(op.shape, {"fill": fill})
    if isinstance(op, StrokeOp):
        return _shape_element(op.shape, {
            "fill": "none",
            "stroke": gray_hex(op.gray),
            "stroke-width": op.width,
        })
    if isinstance(op, LabelOp):
        return tag("text", {
            "x": op.x, "y": op.y,
            "font-family": "sans-serif", "font-size": op.size,
            "text-anchor": op.anchor, "fill": gray_hex(op.gray),
        }, esc(op.text))
    raise TypeError(f"cannot emit {op!r}")


def _shape_element(shape, attrs: dict) -> str:
    if isinstance(shape, PolyShape):
        d = " ".join(_ring_d(r) for r in shape.rings)
        return tag("path", {"d": d, **attrs})
    if isinstance(shape, CircleShape):
        return tag("circle", {"cx": shape.cx, "cy": shape.cy, "r": shape.r, **attrs})
    if isinstance(shape, WedgeShape):
        return tag("path", {"d": _wedge_d(shape), **attrs})
    raise TypeError(f"cannot emit shape {shape!r}")


def _ring_d(ring) -> str:
    coords = " ".join(f"{fmt(x)} {fmt(y)}" for x, y in ring)
    head_x, _, rest = coords.partition(" ")
    head_y, _, tail = rest.partition(" ")
    if tail:
        return f"M {head_x} {head_y} L {tail} Z"
    return f"M {coords} Z"


def _wedge_d(w: WedgeShape) -> str:
    if w.f1 - w.f0 >= 1.0:
        # full turn: two half arcs
        x0, y0 = w.cx, w.cy - w.r
        x1, y1 = w.cx, w.cy + w.r
        return (
            f"M {fmt(x0)} {fmt(y0)} "
            f"A {fmt(w.r)} {fmt(w.r)} 0 0 1 {fmt(x1)} {fmt(y1)} "
            f"A {fmt(w.r)} {fmt(w.r)} 0 0 1 {fmt(x0)} {fmt(y0)} Z"
        )
    d0 = turn_dir(w.f0)
    d1 = turn_dir(w.f1)
    x0, y0 = w.cx + d0[0] * w.r, w.cy + d0[1] * w.r
    x1, y1 = w.cx + d1[0] * w.r, w.cy + d1[1] * w.r
    large = 1 if (w.f1 - w.f0) > 0.5 else 0
    return (
        f"M {fmt(w.cx)} {fmt(w.cy)} L {fmt(x0)} {fmt(y0)} "
        f"A {fmt(w.r)} {fmt(w.r)} 0 {large} 1 {fmt(x1)} {fmt(y1)} Z"
    )
