"""Asset tree loading.

The default tree ships inside the package under assets/v1; the BWTEX_ASSETS
environment variable points the loader somewhere else (it must contain the
same layout). Everything is read once and cached; the glyph registry is
filled as a side effect.
"""

from __future__ import annotations

import json
import os
import xml.etree.ElementTree as ET
from functools import lru_cache
from importlib import resources
from pathlib import Path

import numpy as np

from bwtex.errors import InvalidSpec
from bwtex.textures import glyphs
from bwtex.textures.spec import TextureSpec

ASSET_ENV_VAR = "BWTEX_ASSETS"
_DETAILS = ("detailed", "simplified")
_WEIGHTS = ("outline", "filled")


def asset_root() -> Path:
    override = os.environ.get(ASSET_ENV_VAR)
    if override:
        return Path(override)
    return Path(resources.files("bwtex.presets")) / "assets" / "v1"


def _read_json(rel: str) -> dict:
    path = asset_root() / rel
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


@lru_cache(maxsize=None)
def load_texture_set(rel: str) -> dict:
    payload = _read_json(rel)
    return {
        "id": payload["id"],
        "kind": payload["kind"],
        "textures": tuple(TextureSpec.from_json(t) for t in payload["textures"]),
    }


@lru_cache(maxsize=None)
def load_winner(rel: str) -> dict:
    return _read_json(rel)


def _parse_path_d(d: str) -> list[list[tuple[float, float]]]:
    """Subpaths of an absolute M/L/Z path, as vertex lists."""
    tokens = d.replace(",", " ").split()
    subpaths: list[list[tuple[float, float]]] = []
    current: list[tuple[float, float]] = []
    nums: list[float] = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok in ("M", "L"):
            if tok == "M" and current:
                subpaths.append(current)
                current = []
            i += 1
            continue
        if tok == "Z":
            i += 1
            continue
        if tok in ("m", "l", "z") or tok.isalpha():
            raise InvalidSpec(f"glyph paths must use absolute M/L/Z, got {tok!r}")
        nums.append(float(tok))
        if len(nums) == 2:
            current.append((nums[0], nums[1]))
            nums = []
        i += 1
    if nums:
        raise InvalidSpec("dangling coordinate in glyph path")
    if current:
        subpaths.append(current)
    return subpaths


def _parse_glyph_file(path: Path) -> dict:
    root = ET.parse(path).getroot()
    stroke_width = float(root.get("data-stroke-width", "0.05"))
    parts: dict[str, list] = {"outer": [], "hole": [], "line": []}
    for el in root.iter():
        if not el.tag.endswith("path"):
            continue
        role = el.get("data-part")
        if role not in parts:
            raise InvalidSpec(f"unknown glyph part {role!r} in {path.name}")
        for sub in _parse_path_d(el.get("d", "")):
            parts[role].append(np.asarray(sub, dtype=float))
    return {"stroke_width": stroke_width, **parts}


@lru_cache(maxsize=1)
def install_glyphs() -> int:
    """Register the 28 glyph variants; returns the count."""
    glyph_dir = asset_root() / "glyphs"
    count = 0
    for svg_path in sorted(glyph_dir.glob("*-*.svg")):
        veg, detail = svg_path.stem.rsplit("-", 1)
        if detail not in _DETAILS:
            continue
        art = _parse_glyph_file(svg_path)
        outer = tuple(art["outer"])
        holes = tuple(art["hole"])
        lines = tuple(art["line"])
        sw = art["stroke_width"]
        glyphs.register(glyphs.GlyphArtwork(
            glyph_id=veg, detail=detail, weight="filled",
            fill_rings=outer + holes, stroke_width=0.0,
        ))
        glyphs.register(glyphs.GlyphArtwork(
            glyph_id=veg, detail=detail, weight="outline",
            stroke_rings=outer + holes, stroke_lines=lines, stroke_width=sw,
        ))
        count += 2
    return count
