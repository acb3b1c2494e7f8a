"""Chart model: categories, fills, region maps, datasets, and their JSON form."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Union

from bwtex.errors import EmptyPie, InvalidSpec, MismatchedDataset, MissingRegions
from bwtex.textures.spec import Icon, TextureSpec

CHART_KINDS = ("bar", "pie", "map")
LEGENDS = ("none", "right", "bottom")


@dataclass(frozen=True)
class TextureFill:
    texture: TextureSpec


@dataclass(frozen=True)
class UnicolorFill:
    gray_level: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.gray_level <= 1.0:
            raise InvalidSpec(f"gray_level must lie in [0, 1], got {self.gray_level}")


FillStyle = Union[TextureFill, UnicolorFill]

LIGHT_GRAY = UnicolorFill(gray_level=0.85)


@dataclass(frozen=True)
class Category:
    name: str
    glyph_id: str
    fill: FillStyle

    def __post_init__(self) -> None:
        if not self.name:
            raise InvalidSpec("category name must be non-empty")
        if isinstance(self.fill, TextureFill) and isinstance(self.fill.texture.primitive, Icon):
            if self.fill.texture.primitive.glyph_id != self.glyph_id:
                raise InvalidSpec(
                    f"category {self.name!r} uses glyph {self.fill.texture.primitive.glyph_id!r}, "
                    f"but its own glyph is {self.glyph_id!r}"
                )


@dataclass(frozen=True)
class RegionMap:
    regions: tuple[tuple[str, tuple[tuple[tuple[float, float], ...], ...]], ...]
    """(category name, polygons) pairs; each polygon is a ring of (x, y) vertices."""

    def category_names(self) -> list[str]:
        return [name for name, _ in self.regions]

    def polygons_of(self, category: str) -> tuple:
        for name, polys in self.regions:
            if name == category:
                return polys
        raise MissingRegions(f"no region for category {category!r}")


@dataclass(frozen=True)
class ChartSpec:
    kind: str
    categories: tuple[Category, ...]
    outline_width: float = 1.0
    halo_width: float = 0.0
    legend: str = "right"
    map_regions: RegionMap | None = None
    canvas: tuple[int, int] = (480, 360)

    def __post_init__(self) -> None:
        if self.kind not in CHART_KINDS:
            raise InvalidSpec(f"chart kind must be one of {CHART_KINDS}, got {self.kind!r}")
        if self.legend not in LEGENDS:
            raise InvalidSpec(f"legend must be one of {LEGENDS}, got {self.legend!r}")
        names = [c.name for c in self.categories]
        if len(set(names)) != len(names):
            raise InvalidSpec(f"category names must be unique, got {names}")
        if not self.categories:
            raise InvalidSpec("chart needs at least one category")
        if self.outline_width < 0 or self.halo_width < 0:
            raise InvalidSpec("outline and halo widths must be non-negative")
        if self.kind == "bar" and self.halo_width != 0:
            raise InvalidSpec("bar charts do not take a halo; set halo_width to 0")
        if self.kind == "map":
            if self.map_regions is None:
                raise MissingRegions("map charts need map_regions")
            region_names = sorted(self.map_regions.category_names())
            if region_names != sorted(names):
                raise MissingRegions(
                    f"map regions {region_names} do not match categories {sorted(names)}"
                )
        if not (self.canvas[0] > 0 and self.canvas[1] > 0):
            raise InvalidSpec("canvas must be positive")

    def category(self, name: str) -> Category:
        for c in self.categories:
            if c.name == name:
                return c
        raise MismatchedDataset(f"no category named {name!r}")

    def with_fill(self, name: str, fill: FillStyle) -> "ChartSpec":
        cats = tuple(replace(c, fill=fill) if c.name == name else c for c in self.categories)
        return replace(self, categories=cats)


@dataclass(frozen=True)
class Dataset:
    values: tuple[tuple[str, float], ...]

    @classmethod
    def of(cls, mapping: dict[str, float]) -> "Dataset":
        return cls(values=tuple(mapping.items()))

    def as_dict(self) -> dict[str, float]:
        return dict(self.values)

    def __getitem__(self, name: str) -> float:
        for k, v in self.values:
            if k == name:
                return v
        raise KeyError(name)

    def validate_for(self, chart: ChartSpec) -> None:
        got = sorted(k for k, _ in self.values)
        want = sorted(c.name for c in chart.categories)
        if got != want:
            raise MismatchedDataset(f"dataset keys {got} do not match categories {want}")
        if any(v < 0 for _, v in self.values):
            raise MismatchedDataset("dataset values must be non-negative")
        if chart.kind == "pie" and sum(v for _, v in self.values) <= 0:
            raise EmptyPie("pie values sum to zero")


# -- JSON ------------------------------------------------------------------

def fill_to_json(fill: FillStyle) -> dict:
    if isinstance(fill, TextureFill):
        return {"type": "texture", "texture": fill.texture.to_json()}
    return {"type": "unicolor", "gray_level": fill.gray_level}


def fill_from_json(obj: dict) -> FillStyle:
    if not isinstance(obj, dict) or "type" not in obj:
        raise InvalidSpec("fill must be an object with a 'type' tag")
    if obj["type"] == "texture":
        _reject_unknown(obj, {"type", "texture"})
        return TextureFill(texture=TextureSpec.from_json(obj["texture"]))
    if obj["type"] == "unicolor":
        _reject_unknown(obj, {"type", "gray_level"})
        return UnicolorFill(gray_level=float(obj["gray_level"]))
    raise InvalidSpec(f"unknown fill type {obj['type']!r}")


def chart_to_json(chart: ChartSpec) -> dict:
    out = {
        "kind": chart.kind,
        "categories": [
            {"name": c.name, "glyph_id": c.glyph_id, "fill": fill_to_json(c.fill)}
            for c in chart.categories
        ],
        "outline_width": chart.outline_width,
        "halo_width": chart.halo_width,
        "legend": chart.legend,
        "canvas": [chart.canvas[0], chart.canvas[1]],
    }
    if chart.map_regions is not None:
        out["map_regions"] = {
            "regions": [
                {"category": name, "polygons": [[list(pt) for pt in ring] for ring in polys]}
                for name, polys in chart.map_regions.regions
            ]
        }
    return out


def chart_from_json(obj: dict) -> ChartSpec:
    if not isinstance(obj, dict):
        raise InvalidSpec("chart spec must be a JSON object")
    _reject_unknown(obj, {"kind", "categories", "outline_width", "halo_width",
                          "legend", "canvas", "map_regions"})
    cats = []
    for c in obj.get("categories", []):
        _reject_unknown(c, {"name", "glyph_id", "fill"})
        cats.append(Category(name=c["name"], glyph_id=c["glyph_id"],
                             fill=fill_from_json(c["fill"])))
    regions = None
    if obj.get("map_regions") is not None:
        mr = obj["map_regions"]
        _reject_unknown(mr, {"regions"})
        regions = RegionMap(regions=tuple(
            (r["category"], tuple(tuple(tuple(float(x) for x in pt) for pt in ring)
                                  for ring in r["polygons"]))
            for r in mr["regions"]
        ))
    canvas = obj.get("canvas", [480, 360])
    return ChartSpec(
        kind=obj["kind"],
        categories=tuple(cats),
        outline_width=float(obj.get("outline_width", 1.0)),
        halo_width=float(obj.get("halo_width", 0.0)),
        legend=obj.get("legend", "right"),
        map_regions=regions,
        canvas=(int(canvas[0]), int(canvas[1])),
    )


def dataset_to_json(data: Dataset) -> dict:
    return {"values": {k: v for k, v in data.values}}


def dataset_from_json(obj: dict) -> Dataset:
    if not isinstance(obj, dict) or "values" not in obj:
        raise InvalidSpec("dataset must be an object with a 'values' map")
    _reject_unknown(obj, {"values"})
    return Dataset(values=tuple((k, float(v)) for k, v in obj["values"].items()))


def _reject_unknown(obj: dict, allowed: set) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise InvalidSpec(f"unknown keys: {sorted(unknown)}")
