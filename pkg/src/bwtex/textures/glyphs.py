"""Process-wide icon glyph registry.

The texture engine resolves icon primitives against this registry; the preset
package fills it at import time from the shipped asset tree. The registry is
read-only after startup, so lookups are safe from any thread.

Artwork lives in a unit box [0, 1] x [0, 1], y pointing down. A glyph variant
consists of closed rings that are filled with the even-odd rule, closed rings
that are only stroked, open polylines that are stroked, and a stroke width as
a fraction of the box edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from bwtex.errors import UnknownGlyph


@dataclass(frozen=True)
class GlyphArtwork:
    glyph_id: str
    detail: str
    weight: str
    fill_rings: tuple = ()
    stroke_rings: tuple = ()
    stroke_lines: tuple = ()
    stroke_width: float = 0.06


_REGISTRY: dict[tuple[str, str, str], GlyphArtwork] = {}


def register(art: GlyphArtwork) -> None:
    key = (art.glyph_id, art.detail, art.weight)
    _REGISTRY[key] = art


def resolve(glyph_id: str, detail: str, weight: str) -> GlyphArtwork:
    try:
        return _REGISTRY[(glyph_id, detail, weight)]
    except KeyError:
        raise UnknownGlyph(
            f"no glyph {glyph_id!r} with detail={detail!r} weight={weight!r} "
            f"(registered ids: {sorted(known_ids())})"
        ) from None


def known_ids() -> set:
    return {glyph_id for glyph_id, _, _ in _REGISTRY}


def variant_count() -> int:
    return len(_REGISTRY)


def clear() -> None:
    # test hook; production code never unregisters
    _REGISTRY.clear()
