"""Tiny SVG writing helpers shared by the pattern and chart emitters."""

from __future__ import annotations

from xml.sax.saxutils import escape


def fmt(x: float) -> str:
    """Canonical, round-trippable number formatting: '3' not '3.0'."""
    f = float(x)
    if f == int(f) and abs(f) < 1e15:
        return str(int(f))
    return repr(f)


def esc(text: str) -> str:
    return escape(str(text), {'"': "&quot;"})


def tag(name: str, attrs: dict, body: str | None = None) -> str:
    parts = [f"<{name}"]
    for k, v in attrs.items():
        if v is None:
            continue
        parts.append(f' {k}="{esc(v) if isinstance(v, str) else fmt(v)}"')
    if body is None:
        parts.append("/>")
    else:
        parts.append(f">{body}</{name}>")
    return "".join(parts)
