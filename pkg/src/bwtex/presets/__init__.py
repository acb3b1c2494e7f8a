"""Shipped defaults: texture sets, icon glyphs, datasets, chart templates.

Importing this package loads the asset tree and fills the glyph registry, so
icon textures resolve everywhere afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass

from bwtex.charts.spec import (
    Category,
    ChartSpec,
    Dataset,
    RegionMap,
    TextureFill,
    chart_from_json,
)
from bwtex.errors import OutOfRange
from bwtex.presets import loader
from bwtex.study.datasets import VEGETABLES
from bwtex.textures.spec import IconStyle, TextureSpec

loader.install_glyphs()

BERTIN_SET_COUNT = 5

# Frozen from the study dataset generator at seed 0 (dataset 1), values on the
# 0-100 scale used throughout.
DEFAULT_DATASET_VALUES = (62.3, 29.3, 8.7, 6.5, 78.2, 87.1, 59.6)


@dataclass(frozen=True)
class PresetSet:
    id: str
    kind: str  # geometric | iconic
    textures: tuple[TextureSpec, ...]


@dataclass(frozen=True)
class IconGlyph:
    glyph_id: str
    vegetable: str
    style: IconStyle
    outline_path: str


def load_bertin_set(index: int) -> PresetSet:
    """One of the five shipped geometric default sets (1-based index)."""
    if not 1 <= index <= BERTIN_SET_COUNT:
        raise OutOfRange(f"bertin set index must be 1..{BERTIN_SET_COUNT}, got {index}")
    raw = loader.load_texture_set(f"bertin/bertin-{index}.json")
    return PresetSet(id=raw["id"], kind=raw["kind"], textures=raw["textures"])


def iconic_default_set() -> PresetSet:
    raw = loader.load_texture_set("defaults/iconic-default.json")
    return PresetSet(id=raw["id"], kind=raw["kind"], textures=raw["textures"])


def default_dataset() -> Dataset:
    return Dataset.of(dict(zip(VEGETABLES, DEFAULT_DATASET_VALUES)))


@dataclass(frozen=True)
class ChartPreset:
    id: str
    chart_kind: str
    fill_kind: str
    chart: ChartSpec


_WINNER_IDS = {
    ("bar", "geometric"): "BG2-like",
    ("bar", "iconic"): "BI1-like",
    ("pie", "geometric"): "PG1-like",
    ("pie", "iconic"): "PI1-like",
}


def winner_preset(chart: str, fill: str) -> ChartPreset:
    """Named chart template approximating a study-winning design."""
    try:
        preset_id = _WINNER_IDS[(chart, fill)]
    except KeyError:
        raise OutOfRange(f"no winner preset for chart={chart!r} fill={fill!r}") from None
    raw = loader.load_winner(f"winners/{preset_id}.json")
    return ChartPreset(
        id=raw["id"],
        chart_kind=raw["chart_kind"],
        fill_kind=raw["fill_kind"],
        chart=chart_from_json(raw["chart"]),
    )


def region_map_fixture() -> RegionMap:
    raw = loader._read_json("maps/vegetables-7.json")
    return RegionMap(regions=tuple(
        (r["category"], tuple(tuple(tuple(float(x) for x in pt) for pt in ring)
                              for ring in r["polygons"]))
        for r in raw["regions"]
    ))


def glyph_catalog() -> list[IconGlyph]:
    """All 28 (vegetable, style) glyph variants with their outline path data."""
    out = []
    for veg in VEGETABLES:
        for detail in ("detailed", "simplified"):
            art = loader._parse_glyph_file(loader.asset_root() / "glyphs" / f"{veg}-{detail}.svg")
            path_d = " ".join(
                "M " + " ".join(f"{x:g} {y:g}" for x, y in ring) + " Z"
                for ring in art["outer"]
            )
            for weight in ("outline", "filled"):
                out.append(IconGlyph(
                    glyph_id=veg,
                    vegetable=veg,
                    style=IconStyle(detail=detail, weight=weight),
                    outline_path=path_d,
                ))
    return out


# -- probe session templates -------------------------------------------------

_CHART_DEFAULTS = {
    "bar": {"outline": 1.0, "halo": 0.0, "canvas": (560, 380)},
    "pie": {"outline": 1.0, "halo": 0.0, "canvas": (460, 420)},
    "map": {"outline": 1.0, "halo": 0.0, "canvas": (520, 420)},
}


def preset_ids() -> list[str]:
    ids = [f"bertin-{i}" for i in range(1, BERTIN_SET_COUNT + 1)]
    ids.append("iconic-default")
    ids.extend(sorted(_WINNER_IDS.values()))
    return ids


def build_chart(preset_id: str, chart_kind: str) -> ChartSpec:
    """Chart spec for a probe session: preset textures on the default chart."""
    if preset_id in _WINNER_IDS.values():
        raw = loader.load_winner(f"winners/{preset_id}.json")
        chart = chart_from_json(raw["chart"])
        if chart.kind == chart_kind:
            return chart
        texture_set = PresetSet(
            id=preset_id, kind=raw["fill_kind"],
            textures=tuple(c.fill.texture for c in chart.categories),
        )
    elif preset_id.startswith("bertin-"):
        texture_set = load_bertin_set(int(preset_id.split("-", 1)[1]))
    elif preset_id == "iconic-default":
        texture_set = iconic_default_set()
    else:
        raise OutOfRange(f"unknown preset {preset_id!r}")
    return _chart_from_set(texture_set, chart_kind)


def _chart_from_set(texture_set: PresetSet, chart_kind: str) -> ChartSpec:
    defaults = _CHART_DEFAULTS.get(chart_kind)
    if defaults is None:
        raise OutOfRange(f"unknown chart kind {chart_kind!r}")
    cats = tuple(
        Category(name=veg, glyph_id=veg, fill=TextureFill(texture=tex))
        for veg, tex in zip(VEGETABLES, texture_set.textures)
    )
    return ChartSpec(
        kind=chart_kind,
        categories=cats,
        outline_width=defaults["outline"],
        halo_width=defaults["halo"],
        legend="right",
        map_regions=region_map_fixture() if chart_kind == "map" else None,
        canvas=defaults["canvas"],
    )
