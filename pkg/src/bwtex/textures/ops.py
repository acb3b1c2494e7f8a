"""Whole-spec operations: coupled rescaling and parameter swapping."""

from __future__ import annotations

from dataclasses import replace

from bwtex.errors import InvalidSpec
from bwtex.textures.spec import Icon, TextureSpec


def scale_in_sync(spec: TextureSpec, k: float) -> TextureSpec:
    """Scale size by k and density by 1/k, preserving the ink ratio.

    Pitch and size grow by the same factor, so coverage is unchanged up to
    raster noise.
    """
    if not k > 0.0:
        raise InvalidSpec(f"scale factor must be positive, got {k}")
    return replace(spec, size=spec.size * k, density=spec.density / k)


def swap_parameters(a: TextureSpec, b: TextureSpec) -> tuple[TextureSpec, TextureSpec]:
    """Exchange every parameter between two textures.

    When both are icon textures, each side keeps its own glyph (the carrot
    stays a carrot, it just adopts the other texture's look). A swap between
    an icon texture and a geometric one exchanges the kinds wholesale.
    """
    if isinstance(a.primitive, Icon) and isinstance(b.primitive, Icon):
        new_a = replace(b, primitive=replace(b.primitive, glyph_id=a.primitive.glyph_id))
        new_b = replace(a, primitive=replace(a.primitive, glyph_id=b.primitive.glyph_id))
        return new_a, new_b
    return b, a
