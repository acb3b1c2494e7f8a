"""Parameterized black-and-white texture synthesis."""

from bwtex.textures.lint import (
    INK_TOO_CLOSE,
    ORIENTATION_TOO_CLOSE,
    LintFinding,
    LintReport,
    lint_texture_set,
)
from bwtex.textures.ops import scale_in_sync, swap_parameters
from bwtex.textures.pattern import emit_pattern
from bwtex.textures.raster import (
    window_ink_mask,
    ink_ratio,
    pattern_ink_at,
    tile_color_mask,
    tile_ink_mask,
    tile_ink_ratio,
    tiling_ink_mask,
)
from bwtex.textures.spec import (
    Dot,
    Grid,
    Icon,
    IconStyle,
    Line,
    TextureSpec,
)
from bwtex.textures.tile import TileGeometry, build_tile

__all__ = [
    "Dot", "Grid", "Icon", "IconStyle", "Line", "TextureSpec",
    "TileGeometry", "build_tile", "emit_pattern",
    "ink_ratio", "tile_ink_ratio", "tile_ink_mask", "tiling_ink_mask",
    "tile_color_mask", "pattern_ink_at", "window_ink_mask",
    "scale_in_sync", "swap_parameters",
    "lint_texture_set", "LintReport", "LintFinding",
    "ORIENTATION_TOO_CLOSE", "INK_TOO_CLOSE",
]
