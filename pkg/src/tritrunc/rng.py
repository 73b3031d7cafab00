"""Deterministic, language-portable random streams.

The experiments must reproduce byte-identically from a seed alone, across
machines and without depending on any library's generator versioning.  Two
small, fully specified primitives provide that:

* ``SplitMix64`` — the output function is the standard finalizer

      mix(x): x ^= x >> 30; x *= 0xBF58476D1CE4E5B9;
              x ^= x >> 27; x *= 0x94D049BB133111EB;
              x ^= x >> 31

  applied to seed + (i+1) * 0x9E3779B97F4A7C15 (all mod 2^64), so draw i of a
  stream is a pure function of (seed, i) and a stream can be evaluated in
  bulk or out of order.

* ``derive_seed`` — FNV-1a (64-bit, offset 0xCBF29CE484222325, prime
  0x100000001B3) over a type-tagged byte encoding of the arguments:
  strings as 's' + UTF-8 bytes, integers as 'i' + 8-byte little-endian
  two's complement, floats as 'f' + IEEE-754 binary64 little-endian; each
  part is preceded by its tag and followed by a 0xFF separator.

Gaussians come from Box-Muller on 53-bit uniforms; complex Gaussians have
independent standard-normal real and imaginary parts.
"""

from __future__ import annotations

import struct

import numpy as np

__all__ = ["SplitMix64", "derive_seed"]

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def _mix(x):
    x = x.astype(np.uint64, copy=True)
    with np.errstate(over="ignore"):
        x ^= x >> np.uint64(30)
        x *= _MIX1
        x ^= x >> np.uint64(27)
        x *= _MIX2
        x ^= x >> np.uint64(31)
    return x


def derive_seed(*parts):
    """Hash a tuple of strings/ints/floats into a 64-bit stream seed."""
    h = _FNV_OFFSET
    for part in parts:
        if isinstance(part, str):
            blob = b"s" + part.encode("utf-8")
        elif isinstance(part, (int, np.integer)):
            blob = b"i" + int(part).to_bytes(8, "little", signed=True)
        elif isinstance(part, float):
            blob = b"f" + struct.pack("<d", part)
        else:
            raise TypeError(f"cannot derive a seed from {type(part).__name__}")
        for byte in blob + b"\xff":
            h ^= byte
            h = (h * _FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


class SplitMix64:
    """Counter-based SplitMix64 stream over a 64-bit seed."""

    def __init__(self, seed):
        self._seed = np.uint64(int(seed) & 0xFFFFFFFFFFFFFFFF)
        self._next = 0

    def _raw(self, count):
        idx = np.arange(self._next + 1, self._next + int(count) + 1, dtype=np.uint64)
        self._next += int(count)
        with np.errstate(over="ignore"):
            return _mix(self._seed + idx * _GAMMA)

    def uniform(self, count):
        """count uniforms in (0, 1], using the top 53 bits of each word."""
        return (
            (self._raw(count) >> np.uint64(11)).astype(np.float64) + 1.0
        ) * 2.0**-53

    def normal(self, count):
        """count standard normals via Box-Muller (pairs; odd tail dropped)."""
        count = int(count)
        half = (count + 1) // 2
        u1 = self.uniform(half)
        u2 = self.uniform(half)
        r = np.sqrt(-2.0 * np.log(u1))
        theta = 2.0 * np.pi * u2
        out = np.concatenate([r * np.cos(theta), r * np.sin(theta)])
        return out[:count]

    def complex_normal(self, shape):
        """Array of complex Gaussians: independent N(0,1) real/imag parts."""
        shape = (shape,) if isinstance(shape, int) else tuple(shape)
        n = int(np.prod(shape))
        re = self.normal(n)
        im = self.normal(n)
        return (re + 1j * im).reshape(shape)

    def complex_matrix(self, rows, cols):
        return self.complex_normal((int(rows), int(cols)))

    def integers(self, count, upper):
        """count integers uniform on 0..upper-1 (rejection-free modular map)."""
        return (self._raw(count) % np.uint64(int(upper))).astype(np.int64)
