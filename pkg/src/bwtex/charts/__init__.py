"""Textured chart rendering to SVG."""

from bwtex.charts.halo import HaloStack, apply_halo, wedge_polygon
from bwtex.charts.layout import bar_layout, legend_layout, map_layout, pie_layout
from bwtex.charts.raster import gray_to_png_bytes, scene_to_gray
from bwtex.charts.render import (
    render_chart,
    render_chart_png,
    render_legend,
    render_scene,
)
from bwtex.charts.spec import (
    Category,
    ChartSpec,
    Dataset,
    RegionMap,
    TextureFill,
    UnicolorFill,
    LIGHT_GRAY,
    chart_from_json,
    chart_to_json,
    dataset_from_json,
    dataset_to_json,
)
from bwtex.charts.svg import scene_to_svg

__all__ = [
    "Category", "ChartSpec", "Dataset", "RegionMap",
    "TextureFill", "UnicolorFill", "LIGHT_GRAY",
    "chart_to_json", "chart_from_json", "dataset_to_json", "dataset_from_json",
    "render_chart", "render_chart_png", "render_legend", "render_scene",
    "scene_to_svg", "scene_to_gray", "gray_to_png_bytes",
    "apply_halo", "HaloStack", "wedge_polygon",
    "bar_layout", "pie_layout", "map_layout", "legend_layout",
]
