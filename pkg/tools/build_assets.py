#!/usr/bin/env python3
"""Author and write the shipped asset tree (glyphs, texture sets, templates).

Run from the repo root:  python tools/build_assets.py
Regenerates src/bwtex/presets/assets/v1 deterministically. Glyph silhouettes
are unioned with shapely so overlapping authored parts merge into clean
outer rings.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from shapely.geometry import MultiPolygon, Polygon
from shapely.geometry.polygon import orient

ASSET_ROOT = Path(__file__).resolve().parent.parent / "src" / "bwtex" / "presets" / "assets" / "v1"

VEGETABLES = ("carrots", "celery", "corn", "eggplant", "mushrooms", "olives", "tomatoes")


# ---------------------------------------------------------------------------
# geometry helpers (unit box, y down)

def ellipse(cx, cy, rx, ry, n=20, rot=0.0):
    r = math.radians(rot)
    pts = []
    for i in range(n):
        a = 2 * math.pi * i / n
        x, y = rx * math.cos(a), ry * math.sin(a)
        pts.append((cx + x * math.cos(r) - y * math.sin(r),
                    cy + x * math.sin(r) + y * math.cos(r)))
    return pts


def circle(cx, cy, r, n=16):
    return ellipse(cx, cy, r, r, n)


def diamond(cx, cy, rx, ry):
    return [(cx, cy - ry), (cx + rx, cy), (cx, cy + ry), (cx - rx, cy)]


def star(cx, cy, r_out, r_in, spikes=5, rot_deg=-90.0):
    pts = []
    for i in range(spikes * 2):
        r = r_out if i % 2 == 0 else r_in
        a = math.radians(rot_deg) + math.pi * i / spikes
        pts.append((cx + r * math.cos(a), cy + r * math.sin(a)))
    return pts


def thick_quad(line, t):
    """Slim quad around a polyline segment chain (for ridge holes)."""
    (x0, y0), (x1, y1) = line[0], line[-1]
    dx, dy = x1 - x0, y1 - y0
    n = math.hypot(dx, dy)
    nx, ny = -dy / n * t / 2, dx / n * t / 2
    return [(x0 + nx, y0 + ny), (x1 + nx, y1 + ny), (x1 - nx, y1 - ny), (x0 - nx, y0 - ny)]


# ---------------------------------------------------------------------------
# glyph artwork: parts make the silhouette; holes and lines carry the detail

def carrot():
    root = [(0.38, 0.33), (0.62, 0.33), (0.595, 0.52), (0.565, 0.70), (0.535, 0.86),
            (0.515, 0.96), (0.47, 0.86), (0.435, 0.70), (0.405, 0.52)]
    leaf_l = [(0.46, 0.36), (0.28, 0.08), (0.40, 0.10), (0.52, 0.32)]
    leaf_m = [(0.46, 0.32), (0.49, 0.03), (0.56, 0.03), (0.55, 0.32)]
    leaf_r = [(0.52, 0.32), (0.62, 0.10), (0.73, 0.09), (0.57, 0.36)]
    lines = [
        [(0.435, 0.47), (0.575, 0.43)],
        [(0.45, 0.60), (0.565, 0.56)],
        [(0.465, 0.73), (0.545, 0.70)],
    ]
    holes = [thick_quad(l, 0.022) for l in lines]
    return [root, leaf_l, leaf_m, leaf_r], holes, lines


def celery():
    parts = [
        [(0.33, 0.28), (0.41, 0.28), (0.43, 0.90), (0.29, 0.90)],
        [(0.46, 0.24), (0.54, 0.24), (0.57, 0.93), (0.43, 0.93)],
        [(0.59, 0.28), (0.67, 0.28), (0.71, 0.90), (0.57, 0.90)],
        diamond(0.37, 0.19, 0.075, 0.115),
        diamond(0.50, 0.15, 0.075, 0.115),
        diamond(0.63, 0.19, 0.075, 0.115),
    ]
    lines = [
        [(0.36, 0.34), (0.345, 0.84)],
        [(0.50, 0.30), (0.50, 0.87)],
        [(0.64, 0.34), (0.655, 0.84)],
    ]
    holes = [thick_quad(l, 0.02) for l in lines]
    return parts, holes, lines


def corn():
    ear = []
    for x, y in ellipse(0.5, 0.47, 0.175, 0.37, n=24):
        pinch = 1.0 - 0.42 * max(0.0, y - 0.30) / 0.55
        ear.append((0.5 + (x - 0.5) * pinch, y))
    husk_l = [(0.37, 0.42), (0.26, 0.62), (0.305, 0.90), (0.465, 0.93)]
    husk_r = [(0.63, 0.42), (0.74, 0.62), (0.695, 0.90), (0.535, 0.93)]
    lines = [
        [(0.45, 0.20), (0.45, 0.70)],
        [(0.50, 0.16), (0.50, 0.72)],
        [(0.55, 0.20), (0.55, 0.70)],
        [(0.39, 0.32), (0.61, 0.32)],
        [(0.375, 0.46), (0.625, 0.46)],
        [(0.39, 0.60), (0.61, 0.60)],
    ]
    holes = [circle(cx, cy, 0.021, n=10) for cx, cy in
             [(0.475, 0.39), (0.525, 0.39), (0.475, 0.53), (0.525, 0.53)]]
    return [ear, husk_l, husk_r], holes, lines


def eggplant():
    body = ellipse(0.56, 0.62, 0.20, 0.30, n=24, rot=18)
    neck = ellipse(0.425, 0.37, 0.10, 0.16, n=16, rot=30)
    calyx = [(0.33, 0.05), (0.42, 0.16), (0.56, 0.20), (0.455, 0.275), (0.48, 0.38),
             (0.37, 0.31), (0.255, 0.35), (0.30, 0.25), (0.22, 0.16), (0.345, 0.17)]
    lines = [[(0.66, 0.50), (0.70, 0.63), (0.675, 0.76)]]
    holes = [thick_quad(lines[0], 0.025)]
    return [body, neck, calyx], holes, lines


def mushroom():
    cap = [(0.19, 0.46)]
    for i in range(13):
        a = math.pi + math.pi * i / 12
        cap.append((0.5 + 0.31 * math.cos(a), 0.44 + 0.28 * math.sin(a)))
    cap.append((0.81, 0.46))
    stem = [(0.42, 0.44), (0.58, 0.44), (0.615, 0.84), (0.575, 0.90),
            (0.425, 0.90), (0.385, 0.84)]
    holes = [circle(0.37, 0.27, 0.05, n=12), circle(0.565, 0.215, 0.05, n=12)]
    lines = [[(0.24, 0.46), (0.76, 0.46)]]
    return [cap, stem], holes, lines


def olive():
    body = ellipse(0.50, 0.56, 0.23, 0.31, n=24, rot=12)
    holes = [circle(0.435, 0.345, 0.065, n=12)]
    lines = [
        [(0.56, 0.235), (0.635, 0.07)],
        [(0.615, 0.47), (0.645, 0.62)],
    ]
    return [body], holes, lines


def tomato():
    body = circle(0.5, 0.585, 0.315, n=24)
    calyx = star(0.5, 0.30, 0.17, 0.07, spikes=5)
    stem = [(0.48, 0.10), (0.52, 0.10), (0.515, 0.22), (0.485, 0.22)]
    holes = [circle(0.405, 0.46, 0.035, n=10)]
    lines = [
        [(0.335, 0.48), (0.315, 0.60), (0.33, 0.72)],
        [(0.665, 0.48), (0.685, 0.60), (0.67, 0.72)],
    ]
    return [body, calyx, stem], holes, lines


ARTWORK = {
    "carrots": carrot,
    "celery": celery,
    "corn": corn,
    "eggplant": eggplant,
    "mushrooms": mushroom,
    "olives": olive,
    "tomatoes": tomato,
}

GLYPH_STROKE_WIDTH = 0.05


def _union_rings(parts, tolerance):
    geom = parts[0]
    merged = Polygon(geom)
    for p in parts[1:]:
        merged = merged.union(Polygon(p))
    merged = merged.simplify(tolerance)
    polys = list(merged.geoms) if isinstance(merged, MultiPolygon) else [merged]
    outers, interior_holes = [], []
    for poly in polys:
        poly = orient(poly)
        outers.append([(round(x, 4), round(y, 4)) for x, y in poly.exterior.coords[:-1]])
        for hole in poly.interiors:
            if Polygon(hole).area < 1e-3:
                continue  # sliver left over from a union seam
            interior_holes.append([(round(x, 4), round(y, 4)) for x, y in hole.coords[:-1]])
    return outers, interior_holes


def _path_d(ring, close=True):
    coords = " ".join(f"{x:g} {y:g}" for x, y in ring)
    first, _, rest = coords.partition(" ")
    second, _, tail = rest.partition(" ")
    base = f"M {first} {second} L {tail}" if tail else f"M {coords}"
    return base + (" Z" if close else "")


def write_glyphs():
    out_dir = ASSET_ROOT / "glyphs"
    out_dir.mkdir(parents=True, exist_ok=True)
    for veg, author in ARTWORK.items():
        parts, holes, lines = author()
        for detail, tol in (("detailed", 0.004), ("simplified", 0.02)):
            outers, interior = _union_rings(parts, tol)
            rings_holes = [[(round(x, 4), round(y, 4)) for x, y in h] for h in holes] + interior
            body = [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1 1" '
                    f'data-glyph="{veg}" data-detail="{detail}" '
                    f'data-stroke-width="{GLYPH_STROKE_WIDTH}">']
            for ring in outers:
                body.append(f'<path data-part="outer" d="{_path_d(ring)}"/>')
            if detail == "detailed":
                for ring in rings_holes:
                    body.append(f'<path data-part="hole" d="{_path_d(ring)}"/>')
                for line in lines:
                    pts = [(round(x, 4), round(y, 4)) for x, y in line]
                    body.append(f'<path data-part="line" d="{_path_d(pts, close=False)}"/>')
            body.append("</svg>")
            (out_dir / f"{veg}-{detail}.svg").write_text("\n".join(body) + "\n")
    print(f"wrote {len(ARTWORK) * 2} glyph files")


# ---------------------------------------------------------------------------
# texture sets

def t(kind, density, size, orientation=0.0, background="white", **kw):
    prim: dict = {"kind": kind}
    if kind == "dot":
        prim["filled"] = kw.pop("filled", True)
    if kind == "grid":
        prim["crossing_angle_deg"] = kw.pop("crossing", 90.0)
    if kind == "icon":
        prim["glyph_id"] = kw.pop("glyph")
        prim["style"] = {"detail": kw.pop("detail"), "weight": kw.pop("weight")}
    assert not kw, kw
    return {
        "primitive": prim,
        "density": density,
        "size": size,
        "orientation_deg": orientation,
        "primitive_rotation_deg": 0.0,
        "background": background,
        "randomness": 0.0,
        "phase": [0.0, 0.0],
        "seed": 0,
    }


BERTIN_SETS = {
    "bertin-1": [
        t("line", 8, 1.0, 0), t("line", 8, 1.0, 90), t("line", 8, 1.0, 45),
        t("line", 8, 1.0, 135), t("dot", 8, 2.5), t("dot", 3.5, 3.0),
        t("grid", 8, 1.0),
    ],
    "bertin-2": [
        t("line", 4, 5.0, 0), t("line", 10, 1.0, 90), t("line", 10, 3.0, 45),
        t("dot", 10, 3.0), t("dot", 4.8, 6.0, filled=False), t("grid", 10, 1.2),
        t("line", 10, 10.0, 0),
    ],
    "bertin-3": [
        t("line", 16, 0.8, 0), t("line", 16, 0.8, 90), t("line", 16, 0.8, 45),
        t("line", 16, 0.8, 135), t("dot", 16, 1.0), t("dot", 7, 3.2),
        t("grid", 16, 0.8),
    ],
    "bertin-4": [
        t("line", 6, 3.0, 90), t("line", 12, 1.0, 0),
        t("line", 12, 2.0, 45, background="black"), t("dot", 12, 2.2),
        t("dot", 5, 5.0, filled=False), t("grid", 12, 1.0, background="black"),
        t("line", 6, 6.0, 135),
    ],
    "bertin-5": [
        t("line", 3, 8.0, 0), t("line", 3, 8.0, 90), t("line", 6, 4.0, 45),
        t("dot", 3, 8.0), t("dot", 6.5, 3.0), t("grid", 6, 2.0),
        t("line", 10, 10.0, 0),
    ],
}


def write_bertin():
    out_dir = ASSET_ROOT / "bertin"
    out_dir.mkdir(parents=True, exist_ok=True)
    for set_id, textures in BERTIN_SETS.items():
        payload = {"id": set_id, "kind": "geometric", "textures": textures}
        (out_dir / f"{set_id}.json").write_text(json.dumps(payload, indent=2) + "\n")
    print(f"wrote {len(BERTIN_SETS)} bertin sets")


# ---------------------------------------------------------------------------
# winner-like chart templates and the iconic default

GEOM_MIX = [
    t("line", 10, 2.0, 45), t("dot", 12, 2.0, 0), t("line", 8, 3.0, 0),
    t("grid", 10, 1.0, 0), t("line", 10, 2.0, 135), t("dot", 5, 5.0, filled=False),
    t("line", 6, 3.5, 90),
]


def icon_mix(detail, weight, density, size):
    return [t("icon", density, size, glyph=veg, detail=detail, weight=weight)
            for veg in VEGETABLES]


def chart_template(kind, fills, outline, halo, canvas, legend="right", regions=None):
    cats = []
    for veg, fill in zip(VEGETABLES, fills):
        cats.append({"name": veg, "glyph_id": veg, "fill": {"type": "texture", "texture": fill}})
    payload = {
        "kind": kind,
        "categories": cats,
        "outline_width": outline,
        "halo_width": halo,
        "legend": legend,
        "canvas": list(canvas),
    }
    if regions is not None:
        payload["map_regions"] = regions
    return payload


WINNERS = {
    "BG2-like": ("bar", "geometric"),
    "BI1-like": ("bar", "iconic"),
    "PG1-like": ("pie", "geometric"),
    "PI1-like": ("pie", "iconic"),
}


def write_winners():
    out_dir = ASSET_ROOT / "winners"
    out_dir.mkdir(parents=True, exist_ok=True)
    charts = {
        "BG2-like": chart_template("bar", GEOM_MIX, 1.0, 0.0, (560, 380)),
        "BI1-like": chart_template("bar", icon_mix("detailed", "outline", 7, 11.0),
                                   1.0, 0.0, (560, 380)),
        "PG1-like": chart_template("pie", GEOM_MIX, 1.5, 2.0, (460, 420)),
        "PI1-like": chart_template("pie", icon_mix("simplified", "filled", 6, 12.0),
                                   1.0, 3.0, (460, 420)),
    }
    for preset_id, chart in charts.items():
        kind, fill_kind = WINNERS[preset_id]
        payload = {"id": preset_id, "chart_kind": kind, "fill_kind": fill_kind, "chart": chart}
        (out_dir / f"{preset_id}.json").write_text(json.dumps(payload, indent=2) + "\n")
    iconic_default = {
        "id": "iconic-default",
        "kind": "iconic",
        "textures": icon_mix("detailed", "outline", 6, 12.0),
    }
    (out_dir.parent / "defaults").mkdir(exist_ok=True)
    (out_dir.parent / "defaults" / "iconic-default.json").write_text(
        json.dumps(iconic_default, indent=2) + "\n")
    print("wrote 4 winner templates + iconic default")


# ---------------------------------------------------------------------------
# region map fixture: seven regions with shared borders on a 100 x 80 board

MAP_REGIONS = {
    "carrots": [[(0, 0), (40, 0), (40, 40), (0, 40)]],
    "celery": [[(40, 0), (80, 0), (80, 20), (60, 20), (60, 40), (40, 40)]],
    "corn": [[(80, 0), (100, 0), (100, 60), (80, 60), (80, 40), (60, 40),
              (60, 20), (80, 20)]],
    "eggplant": [[(0, 40), (20, 40), (20, 60), (40, 60), (40, 80), (0, 80)]],
    "mushrooms": [[(20, 40), (60, 40), (60, 80), (40, 80), (40, 60), (20, 60)]],
    "olives": [[(60, 40), (80, 40), (80, 80), (60, 80)]],
    "tomatoes": [[(80, 60), (100, 60), (100, 80), (80, 80)]],
}


def write_map():
    out_dir = ASSET_ROOT / "maps"
    out_dir.mkdir(parents=True, exist_ok=True)
    payload = {
        "regions": [
            {"category": name, "polygons": [[list(p) for p in ring] for ring in rings]}
            for name, rings in MAP_REGIONS.items()
        ]
    }
    (out_dir / "vegetables-7.json").write_text(json.dumps(payload, indent=2) + "\n")
    print("wrote map fixture")


def main():
    write_glyphs()
    write_bertin()
    write_winners()
    write_map()


if __name__ == "__main__":
    main()
