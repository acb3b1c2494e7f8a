"""Counter-based jitter stream.

Jitter must be a pure function of (seed, lattice cell index) so that a cell's
displacement never depends on how many other cells the tile happens to
contain. The contract, which independent reimplementations must match
bit-for-bit:

  mix(z): the splitmix64 finalizer
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9   (mod 2^64)
      z = (z ^ (z >> 27)) * 0x94D049BB133111EB   (mod 2^64)
      z = z ^ (z >> 31)

  stream key   k  = mix(seed ^ 0xA0761D6478BD642F)
  cell counter c  = (ix << 24) ^ iy          with 0 <= ix, iy < 2^24
  r1 = mix(k ^ mix(c ^ 0x9E3779B97F4A7C15))
  r2 = mix(r1 ^ 0x9E3779B97F4A7C15)
  u  = (r1 >> 11) / 2^53,   v = (r2 >> 11) / 2^53      both in [0, 1)

The cell displacement is then ((u - 0.5) * a, (v - 0.5) * a) with amplitude
a = randomness * pitch.
"""

from __future__ import annotations

_M64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_DOMAIN = 0xA0761D6478BD642F


def mix64(z: int) -> int:
    z &= _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return (z ^ (z >> 31)) & _M64


def stream_key(seed: int) -> int:
    return mix64((seed & _M64) ^ _DOMAIN)


def cell_unit_pair(key: int, ix: int, iy: int) -> tuple[float, float]:
    """Two uniform [0, 1) doubles for lattice cell (ix, iy)."""
    if not (0 <= ix < (1 << 24) and 0 <= iy < (1 << 24)):
        raise ValueError(f"lattice index out of range: ({ix}, {iy})")
    c = ((ix << 24) ^ iy) & _M64
    r1 = mix64(key ^ mix64(c ^ _GOLDEN))
    r2 = mix64(r1 ^ _GOLDEN)
    return (r1 >> 11) * 2.0**-53, (r2 >> 11) * 2.0**-53


def cell_jitter(key: int, ix: int, iy: int, amplitude: float) -> tuple[float, float]:
    """Displacement within +-amplitude/2 per axis for lattice cell (ix, iy)."""
    if amplitude == 0.0:
        return 0.0, 0.0
    u, v = cell_unit_pair(key, ix, iy)
    return (u - 0.5) * amplitude, (v - 0.5) * amplitude
