"""Discriminability lint for texture sets.

Pairs of same-kind textures are flagged when they are too easy to confuse:
orientations closer than 30 degrees (modulo the kind's rotational symmetry)
without at least a 2:1 spacing ratio, or nearly equal ink coverage at nearly
equal orientation. Boundary values (exactly 30 degrees, exactly 2.0) pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from bwtex.errors import InvalidSpec
from bwtex.textures.raster import ink_ratio
from bwtex.textures.spec import Dot, Grid, Icon, Line, TextureSpec

ORIENTATION_TOO_CLOSE = "ORIENTATION_TOO_CLOSE"
INK_TOO_CLOSE = "INK_TOO_CLOSE"

MIN_ANGLE_DEG = 30.0
MIN_SPACING_RATIO = 2.0
MIN_INK_GAP = 0.05


@dataclass(frozen=True)
class LintFinding:
    pair: tuple[int, int]
    rule: str
    severity: str
    message: str


@dataclass(frozen=True)
class LintReport:
    findings: tuple[LintFinding, ...]

    def __bool__(self) -> bool:
        return not self.findings

    def by_rule(self, rule: str) -> list[LintFinding]:
        return [f for f in self.findings if f.rule == rule]


def rotational_symmetry_deg(spec: TextureSpec) -> float:
    """Angle after which the texture looks the same again."""
    prim = spec.primitive
    if isinstance(prim, Line):
        return 180.0
    if isinstance(prim, Grid):
        return 90.0 if prim.crossing_angle_deg == 90.0 else 180.0
    return 360.0


def angular_difference(a: TextureSpec, b: TextureSpec) -> float:
    sym = math.gcd(int(rotational_symmetry_deg(a)), int(rotational_symmetry_deg(b)))
    d = math.fmod(a.orientation_deg - b.orientation_deg, sym)
    if d < 0:
        d += sym
    return min(d, sym - d)


def spacing_ratio(a: TextureSpec, b: TextureSpec) -> float:
    pa, pb = a.pitch, b.pitch
    hi, lo = max(pa, pb), min(pa, pb)
    return hi / lo


def lint_texture_set(
    specs: Sequence[TextureSpec],
    *,
    ink_resolution: float = 4.0,
) -> LintReport:
    """Check every same-kind pair of a texture set for discriminability."""
    if len(specs) < 2:
        raise InvalidSpec("lint needs at least two texture specs")
    ratios = [ink_ratio(s, ink_resolution) for s in specs]
    findings: list[LintFinding] = []
    for i in range(len(specs)):
        for j in range(i + 1, len(specs)):
            a, b = specs[i], specs[j]
            if _kind_name(a) != _kind_name(b):
                continue
            ang = angular_difference(a, b)
            close_angle = ang < MIN_ANGLE_DEG
            if close_angle and spacing_ratio(a, b) < MIN_SPACING_RATIO:
                findings.append(LintFinding(
                    pair=(i, j),
                    rule=ORIENTATION_TOO_CLOSE,
                    severity="warning",
                    message=(
                        f"textures {i} and {j} ({_kind_name(a)}): orientations differ by "
                        f"{ang:.1f} deg (< {MIN_ANGLE_DEG:g}) and spacing ratio "
                        f"{spacing_ratio(a, b):.2f} is below {MIN_SPACING_RATIO:g}"
                    ),
                ))
            if close_angle and abs(ratios[i] - ratios[j]) < MIN_INK_GAP:
                findings.append(LintFinding(
                    pair=(i, j),
                    rule=INK_TOO_CLOSE,
                    severity="warning",
                    message=(
                        f"textures {i} and {j} ({_kind_name(a)}): ink coverage differs by "
                        f"{abs(ratios[i] - ratios[j]):.3f} (< {MIN_INK_GAP:g}) at similar orientation"
                    ),
                ))
    findings.sort(key=lambda f: (f.pair, f.rule))
    return LintReport(findings=tuple(findings))


def _kind_name(spec: TextureSpec) -> str:
    prim = spec.primitive
    if isinstance(prim, Dot):
        return "dot"
    if isinstance(prim, Line):
        return "line"
    if isinstance(prim, Grid):
        return "grid"
    if isinstance(prim, Icon):
        return "icon"
    raise InvalidSpec(f"unknown primitive {prim!r}")
