"""Pure layout math for the three chart kinds plus the legend.

Everything the renderer draws is positioned here, so proportionality
properties can be tested on numbers instead of parsed SVG.
"""

from __future__ import annotations

from dataclasses import dataclass

from bwtex.charts.spec import ChartSpec, Dataset

LEGEND_RIGHT_W = 124
LEGEND_BOTTOM_H = 30
BAR_MARGIN = (44, 12, 14, 30)   # left, right, top, bottom
PIE_MARGIN = 18
MAP_MARGIN = 14
BAR_GAP_FRACTION = 0.4          # gap between bars, as a fraction of bar width
AXIS_TICK_STEP = 10.0


@dataclass(frozen=True)
class Rect:
    x: float
    y: float
    w: float
    h: float


@dataclass(frozen=True)
class BarLayout:
    plot: Rect
    axis_max: float
    bars: tuple[tuple[str, Rect], ...]
    ticks: tuple[tuple[float, float], ...]  # (value, y position)


@dataclass(frozen=True)
class PieLayout:
    cx: float
    cy: float
    r: float
    slices: tuple[tuple[str, float, float], ...]  # (name, f0, f1) turn fractions


@dataclass(frozen=True)
class MapLayout:
    shapes: tuple[tuple[str, tuple], ...]  # (name, rings in canvas coords)
    anchors: tuple[tuple[str, float, float], ...]


@dataclass(frozen=True)
class LegendLayout:
    entries: tuple[tuple[str, Rect, tuple[float, float]], ...]  # name, swatch, label pos


def chart_area(chart: ChartSpec) -> Rect:
    w, h = chart.canvas
    if chart.legend == "right":
        return Rect(0, 0, w - LEGEND_RIGHT_W, h)
    if chart.legend == "bottom":
        return Rect(0, 0, w, h - LEGEND_BOTTOM_H)
    return Rect(0, 0, w, h)


def axis_maximum(values) -> float:
    top = max(values, default=0.0)
    if top <= 100.0:
        return 100.0
    step = AXIS_TICK_STEP
    return float(int((top + step - 0.999999) // step) * step)


def bar_layout(chart: ChartSpec, data: Dataset) -> BarLayout:
    area = chart_area(chart)
    ml, mr, mt, mb = BAR_MARGIN
    plot = Rect(area.x + ml, area.y + mt, area.w - ml - mr, area.h - mt - mb)
    names = [c.name for c in chart.categories]
    values = [data[n] for n in names]
    axis_max = axis_maximum(values)
    n = len(names)
    bar_w = plot.w / (n + BAR_GAP_FRACTION * (n + 1))
    gap = BAR_GAP_FRACTION * bar_w
    bars = []
    for i, (name, v) in enumerate(zip(names, values)):
        h = v / axis_max * plot.h
        x = plot.x + gap + i * (bar_w + gap)
        bars.append((name, Rect(x, plot.y + plot.h - h, bar_w, h)))
    ticks = []
    t = 0.0
    while t <= axis_max + 1e-9:
        ticks.append((t, plot.y + plot.h - t / axis_max * plot.h))
        t += AXIS_TICK_STEP
    return BarLayout(plot=plot, axis_max=axis_max, bars=tuple(bars), ticks=tuple(ticks))


def pie_layout(chart: ChartSpec, data: Dataset) -> PieLayout:
    area = chart_area(chart)
    r = min(area.w, area.h) / 2.0 - PIE_MARGIN
    cx = area.x + area.w / 2.0
    cy = area.y + area.h / 2.0
    names = [c.name for c in chart.categories]
    values = [data[n] for n in names]
    total = sum(values)
    slices = []
    cum = 0.0
    for name, v in zip(names, values):
        f0 = cum / total
        cum += v
        f1 = cum / total
        slices.append((name, f0, f1))
    return PieLayout(cx=cx, cy=cy, r=r, slices=tuple(slices))


def map_layout(chart: ChartSpec) -> MapLayout:
    area = chart_area(chart)
    regions = chart.map_regions.regions
    xs = [p[0] for _, polys in regions for ring in polys for p in ring]
    ys = [p[1] for _, polys in regions for ring in polys for p in ring]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    avail_w = area.w - 2 * MAP_MARGIN
    avail_h = area.h - 2 * MAP_MARGIN
    scale = min(avail_w / (x1 - x0), avail_h / (y1 - y0))
    off_x = area.x + (area.w - (x1 - x0) * scale) / 2.0 - x0 * scale
    off_y = area.y + (area.h - (y1 - y0) * scale) / 2.0 - y0 * scale

    def tx(p):
        return (p[0] * scale + off_x, p[1] * scale + off_y)

    shapes = []
    anchors = []
    for name, polys in regions:
        rings = tuple(tuple(tx(p) for p in ring) for ring in polys)
        shapes.append((name, rings))
        pts = [p for ring in rings for p in ring]
        ax = sum(p[0] for p in pts) / len(pts)
        ay = sum(p[1] for p in pts) / len(pts)
        anchors.append((name, ax, ay))
    return MapLayout(shapes=tuple(shapes), anchors=tuple(anchors))


def legend_layout(chart: ChartSpec, swatch: float = 18.0) -> LegendLayout | None:
    if chart.legend == "none":
        return None
    w, h = chart.canvas
    names = [c.name for c in chart.categories]
    entries = []
    if chart.legend == "right":
        x = w - LEGEND_RIGHT_W + 10
        y = 16.0
        step = swatch + 8
        for name in names:
            entries.append((name, Rect(x, y, swatch, swatch),
                            (x + swatch + 6, y + swatch * 0.72)))
            y += step
    else:
        sw = min(swatch, 14.0)
        cell = w / len(names)
        y = h - LEGEND_BOTTOM_H + (LEGEND_BOTTOM_H - sw) / 2.0
        for i, name in enumerate(names):
            x = i * cell + 6
            entries.append((name, Rect(x, y, sw, sw), (x + sw + 5, y + sw * 0.72)))
    return LegendLayout(entries=tuple(entries))
