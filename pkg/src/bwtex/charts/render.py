"""Chart rendering: bar, pie, and region map with texture or unicolor fills.

Paint order per chart: every shape's fill first, then all white halo bands,
then all outlines, then axis furniture and the legend. Halos and outlines are
centered strokes: a white stroke of width 2*halo + outline below a black
stroke of width outline puts a white band of exactly halo_width between the
texture and the outline on each side of a border.
"""

from __future__ import annotations

from shapely.geometry import Polygon

from bwtex.charts.halo import apply_halo, wedge_polygon
from bwtex.charts.layout import (
    Rect,
    bar_layout,
    legend_layout,
    map_layout,
    pie_layout,
)
from bwtex.charts.raster import gray_to_png_bytes, scene_to_gray
from bwtex.charts.scene import (
    PatternPaint,
    PolyShape,
    Scene,
    SolidPaint,
    WedgeShape,
)
from bwtex.charts.spec import Category, ChartSpec, Dataset, TextureFill, UnicolorFill
from bwtex.charts.svg import ops_fragment, scene_to_svg
from bwtex.svgutil import fmt
from bwtex.textures.tile import build_tile

SWATCH_SIZE = 18.0
AXIS_GRAY = 0.2
LABEL_SIZE = 11.0
TICK_LABEL_SIZE = 9.0


def pattern_id_for(index: int) -> str:
    return f"tex-{index}"


def render_scene(chart: ChartSpec, data: Dataset) -> Scene:
    data.validate_for(chart)
    scene = Scene(chart.canvas[0], chart.canvas[1])
    page = PolyShape(rings=(((0, 0), (chart.canvas[0], 0),
                             (chart.canvas[0], chart.canvas[1]), (0, chart.canvas[1])),))
    scene.fill(page, SolidPaint(1.0))

    paints = _register_fills(scene, chart)
    if chart.kind == "bar":
        _render_bars(scene, chart, data, paints)
    elif chart.kind == "pie":
        _render_pie(scene, chart, data, paints)
    else:
        _render_map(scene, chart, data, paints)

    lay = legend_layout(chart, SWATCH_SIZE)
    if lay is not None:
        scene.ops.extend(_legend_ops(chart.categories, lay, paints))
    return scene


def render_chart(chart: ChartSpec, data: Dataset) -> str:
    return scene_to_svg(render_scene(chart, data))


def render_chart_png(chart: ChartSpec, data: Dataset, scale: int = 4) -> bytes:
    return gray_to_png_bytes(scene_to_gray(render_scene(chart, data), scale))


def render_legend(categories: tuple[Category, ...], swatch_size: float = SWATCH_SIZE) -> str:
    """Standalone legend fragment referencing the chart's pattern ids."""
    if not categories:
        raise ValueError("legend needs at least one category")
    entries = []
    y = 0.0
    for i, c in enumerate(categories):
        entries.append((c.name, Rect(0.0, y, swatch_size, swatch_size),
                        (swatch_size + 6, y + swatch_size * 0.72)))
        y += swatch_size + 8
    scene = Scene(0, 0)
    paints = {c.name: _paint_for(scene, i, c) for i, c in enumerate(categories)}
    ops = _legend_ops(categories, _FixedLegend(tuple(entries)), paints)
    return f"<g>{ops_fragment(ops)}</g>"


class _FixedLegend:
    def __init__(self, entries):
        self.entries = entries


def _register_fills(scene: Scene, chart: ChartSpec) -> dict:
    return {c.name: _paint_for(scene, i, c) for i, c in enumerate(chart.categories)}


def _paint_for(scene: Scene, index: int, category: Category):
    if isinstance(category.fill, UnicolorFill):
        return SolidPaint(category.fill.gray_level)
    tile = build_tile(category.fill.texture)
    pid = pattern_id_for(index)
    scene.add_pattern(pid, tile)
    return PatternPaint(pid)


def _rect_shape(r: Rect) -> PolyShape:
    return PolyShape(rings=(((r.x, r.y), (r.x + r.w, r.y),
                             (r.x + r.w, r.y + r.h), (r.x, r.y + r.h)),))


def _render_bars(scene: Scene, chart: ChartSpec, data: Dataset, paints) -> None:
    lay = bar_layout(chart, data)
    shapes = [(name, _rect_shape(r)) for name, r in lay.bars if r.h > 0]
    for name, shape in shapes:
        scene.fill(shape, paints[name])
    for name, shape in shapes:
        scene.stroke(shape, chart.outline_width, 0.0)
    # value axis with ticks
    axis_x = lay.plot.x
    scene.stroke(PolyShape(rings=(((axis_x, lay.plot.y), (axis_x, lay.plot.y + lay.plot.h)),)),
                 1.0, AXIS_GRAY)
    for value, y in lay.ticks:
        scene.stroke(PolyShape(rings=(((axis_x - 4, y), (axis_x, y)),)), 1.0, AXIS_GRAY)
        scene.label(axis_x - 7, y + 3, fmt(value), TICK_LABEL_SIZE, "end", AXIS_GRAY)
    base_y = lay.plot.y + lay.plot.h
    scene.stroke(PolyShape(rings=(((axis_x, base_y), (lay.plot.x + lay.plot.w, base_y)),)),
                 1.0, AXIS_GRAY)


def _render_pie(scene: Scene, chart: ChartSpec, data: Dataset, paints) -> None:
    lay = pie_layout(chart, data)
    wedges = []
    for name, f0, f1 in lay.slices:
        if f1 <= f0:
            continue
        shape = WedgeShape(lay.cx, lay.cy, lay.r, f0, f1)
        stack = apply_halo(wedge_polygon(lay.cx, lay.cy, lay.r, f0, f1),
                           chart.halo_width, chart.outline_width)
        wedges.append((name, shape, stack.degenerate))
    for name, shape, degenerate in wedges:
        scene.fill(shape, SolidPaint(1.0) if degenerate else paints[name])
    if chart.halo_width > 0:
        for _, shape, _ in wedges:
            scene.stroke(shape, 2 * chart.halo_width + chart.outline_width, 1.0)
    for _, shape, _ in wedges:
        scene.stroke(shape, chart.outline_width, 0.0)


def _render_map(scene: Scene, chart: ChartSpec, data: Dataset, paints) -> None:
    lay = map_layout(chart)
    shapes = []
    for name, rings in lay.shapes:
        shape = PolyShape(rings=rings)
        degenerate = all(
            apply_halo(Polygon(ring), chart.halo_width, chart.outline_width).degenerate
            for ring in rings
        ) if (chart.halo_width > 0 or chart.outline_width > 0) else False
        shapes.append((name, shape, degenerate))
    for name, shape, degenerate in shapes:
        scene.fill(shape, SolidPaint(1.0) if degenerate else paints[name])
    if chart.halo_width > 0:
        for _, shape, _ in shapes:
            scene.stroke(shape, 2 * chart.halo_width + chart.outline_width, 1.0)
    for _, shape, _ in shapes:
        scene.stroke(shape, chart.outline_width, 0.0)
    # numeric value chips at region anchors
    for name, ax, ay in lay.anchors:
        text = fmt(data[name])
        half_w = 3.2 * len(text) + 4
        chip = PolyShape(rings=(((ax - half_w, ay - 8), (ax + half_w, ay - 8),
                                 (ax + half_w, ay + 6), (ax - half_w, ay + 6)),))
        scene.fill(chip, SolidPaint(1.0))
        scene.stroke(chip, 0.75, 0.4)
        scene.label(ax, ay + 3, text, TICK_LABEL_SIZE, "middle", 0.0)


def _legend_ops(categories, lay, paints) -> list:
    ops_scene = Scene(0, 0)
    for (name, rect, label_pos) in lay.entries:
        shape = _rect_shape(rect)
        ops_scene.fill(shape, paints[name])
        ops_scene.stroke(shape, 0.75, 0.35)
        ops_scene.label(label_pos[0], label_pos[1], name, LABEL_SIZE, "start", 0.0)
    return ops_scene.ops
