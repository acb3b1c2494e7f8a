"""Texture parameterization and its JSON form.

A texture is a tiling of one primitive kind (dots, lines, a grid, or icons)
over an abstract unit grid. Densities are expressed per 100 units of length:
for lines and grids the line spacing is ``100 / density`` units, for dots and
icons the lattice pitch is ``100 / density`` units. Sizes are in the same
units (stroke width for lines, radius for dots, bounding-box edge for icons).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Any, Union

from bwtex.errors import InvalidSpec

BACKGROUNDS = ("white", "black")
ICON_DETAILS = ("detailed", "simplified")
ICON_WEIGHTS = ("outline", "filled")

MAX_SEED = (1 << 64) - 1


@dataclass(frozen=True)
class IconStyle:
    detail: str = "detailed"
    weight: str = "outline"

    def __post_init__(self) -> None:
        if self.detail not in ICON_DETAILS:
            raise InvalidSpec(f"icon detail must be one of {ICON_DETAILS}, got {self.detail!r}")
        if self.weight not in ICON_WEIGHTS:
            raise InvalidSpec(f"icon weight must be one of {ICON_WEIGHTS}, got {self.weight!r}")


@dataclass(frozen=True)
class Dot:
    filled: bool = True

    kind: str = field(default="dot", init=False, repr=False)


@dataclass(frozen=True)
class Line:
    kind: str = field(default="line", init=False, repr=False)


@dataclass(frozen=True)
class Grid:
    crossing_angle_deg: float = 90.0

    kind: str = field(default="grid", init=False, repr=False)

    def __post_init__(self) -> None:
        if not 0.0 < self.crossing_angle_deg < 180.0:
            raise InvalidSpec(
                f"grid crossing angle must lie strictly between 0 and 180 degrees, "
                f"got {self.crossing_angle_deg}"
            )


@dataclass(frozen=True)
class Icon:
    glyph_id: str
    style: IconStyle = IconStyle()

    kind: str = field(default="icon", init=False, repr=False)

    def __post_init__(self) -> None:
        if not self.glyph_id:
            raise InvalidSpec("icon glyph_id must be a non-empty identifier")


Primitive = Union[Dot, Line, Grid, Icon]


def _norm_angle(value: float) -> float:
    a = math.fmod(float(value), 360.0)
    if a < 0.0:
        a += 360.0
    return a


@dataclass(frozen=True)
class TextureSpec:
    """Complete description of one black-and-white texture.

    ``orientation_deg`` rotates the whole texture; ``primitive_rotation_deg``
    additionally rotates each icon around its own center and is ignored for
    the geometric kinds. ``randomness`` displaces every dot/icon uniformly
    within +-(randomness * pitch / 2) per axis, reproducibly from ``seed``.
    ``phase`` translates the texture in units.
    """

    primitive: Primitive
    density: float
    size: float
    orientation_deg: float = 0.0
    primitive_rotation_deg: float = 0.0
    background: str = "white"
    randomness: float = 0.0
    phase: tuple[float, float] = (0.0, 0.0)
    seed: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.primitive, (Dot, Line, Grid, Icon)):
            raise InvalidSpec(f"unknown primitive: {self.primitive!r}")
        if not (isinstance(self.density, (int, float)) and math.isfinite(self.density) and self.density > 0):
            raise InvalidSpec(f"density must be a positive finite number, got {self.density!r}")
        if not (isinstance(self.size, (int, float)) and math.isfinite(self.size) and self.size > 0):
            raise InvalidSpec(f"size must be a positive finite number, got {self.size!r}")
        if self.background not in BACKGROUNDS:
            raise InvalidSpec(f"background must be 'white' or 'black', got {self.background!r}")
        if not (isinstance(self.randomness, (int, float)) and 0.0 <= self.randomness <= 1.0):
            raise InvalidSpec(f"randomness must lie in [0, 1], got {self.randomness!r}")
        if not (isinstance(self.seed, int) and 0 <= self.seed <= MAX_SEED):
            raise InvalidSpec(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        if not (isinstance(self.phase, tuple) and len(self.phase) == 2):
            object.__setattr__(self, "phase", (float(self.phase[0]), float(self.phase[1])))
        object.__setattr__(self, "density", float(self.density))
        object.__setattr__(self, "size", float(self.size))
        object.__setattr__(self, "orientation_deg", _norm_angle(self.orientation_deg))
        object.__setattr__(self, "primitive_rotation_deg", _norm_angle(self.primitive_rotation_deg))
        object.__setattr__(self, "randomness", float(self.randomness))
        object.__setattr__(self, "phase", (float(self.phase[0]), float(self.phase[1])))

    @property
    def pitch(self) -> float:
        """Nominal lattice pitch / line spacing in units."""
        return 100.0 / self.density

    @property
    def ink(self) -> str:
        return "black" if self.background == "white" else "white"

    def with_(self, **changes: Any) -> "TextureSpec":
        return replace(self, **changes)

    # -- JSON form ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "primitive": _primitive_to_json(self.primitive),
            "density": self.density,
            "size": self.size,
            "orientation_deg": self.orientation_deg,
            "primitive_rotation_deg": self.primitive_rotation_deg,
            "background": self.background,
            "randomness": self.randomness,
            "phase": [self.phase[0], self.phase[1]],
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "TextureSpec":
        if not isinstance(obj, dict):
            raise InvalidSpec(f"texture spec must be a JSON object, got {type(obj).__name__}")
        known = {
            "primitive", "density", "size", "orientation_deg", "primitive_rotation_deg",
            "background", "randomness", "phase", "seed",
        }
        unknown = set(obj) - known
        if unknown:
            raise InvalidSpec(f"unknown texture spec keys: {sorted(unknown)}")
        missing = known - set(obj)
        if missing:
            raise InvalidSpec(f"missing texture spec keys: {sorted(missing)}")
        phase = obj["phase"]
        if not (isinstance(phase, (list, tuple)) and len(phase) == 2):
            raise InvalidSpec("phase must be a [dx, dy] pair")
        seed = obj["seed"]
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise InvalidSpec("seed must be an integer")
        return cls(
            primitive=_primitive_from_json(obj["primitive"]),
            density=obj["density"],
            size=obj["size"],
            orientation_deg=obj["orientation_deg"],
            primitive_rotation_deg=obj["primitive_rotation_deg"],
            background=obj["background"],
            randomness=obj["randomness"],
            phase=(float(phase[0]), float(phase[1])),
            seed=seed,
        )


def _primitive_to_json(p: Primitive) -> dict:
    if isinstance(p, Dot):
        return {"kind": "dot", "filled": p.filled}
    if isinstance(p, Line):
        return {"kind": "line"}
    if isinstance(p, Grid):
        return {"kind": "grid", "crossing_angle_deg": p.crossing_angle_deg}
    if isinstance(p, Icon):
        return {
            "kind": "icon",
            "glyph_id": p.glyph_id,
            "style": {"detail": p.style.detail, "weight": p.style.weight},
        }
    raise InvalidSpec(f"unknown primitive: {p!r}")


def _primitive_from_json(obj: Any) -> Primitive:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InvalidSpec("primitive must be an object with a 'kind' tag")
    kind = obj["kind"]
    if kind == "dot":
        _expect_keys(obj, {"kind", "filled"})
        filled = obj.get("filled", True)
        if not isinstance(filled, bool):
            raise InvalidSpec("dot 'filled' must be a boolean")
        return Dot(filled=filled)
    if kind == "line":
        _expect_keys(obj, {"kind"})
        return Line()
    if kind == "grid":
        _expect_keys(obj, {"kind", "crossing_angle_deg"})
        return Grid(crossing_angle_deg=float(obj.get("crossing_angle_deg", 90.0)))
    if kind == "icon":
        _expect_keys(obj, {"kind", "glyph_id", "style"})
        style = obj.get("style", {})
        if not isinstance(style, dict):
            raise InvalidSpec("icon style must be an object")
        _expect_keys(style, {"detail", "weight"})
        return Icon(
            glyph_id=obj.get("glyph_id", ""),
            style=IconStyle(
                detail=style.get("detail", "detailed"),
                weight=style.get("weight", "outline"),
            ),
        )
    raise InvalidSpec(f"unknown primitive kind {kind!r}")


def _expect_keys(obj: dict, allowed: set) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise InvalidSpec(f"unknown keys: {sorted(unknown)}")
