"""bwtex: black-and-white texture synthesis, textured charts, and study tooling."""

from bwtex import presets as _presets  # loads the glyph registry at import

__version__ = "0.1.0"
