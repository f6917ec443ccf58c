"""xoshiro256** seeded through splitmix64.

The state is four 64-bit words filled by four splitmix64 outputs from the
user seed.  Doubles take the top 53 bits of an output.  Everything is plain
Python integer arithmetic, so streams are identical on every platform.
"""
from __future__ import annotations

import math

import numpy as np

_MASK = (1 << 64) - 1


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK


def splitmix64(seed: int):
    """Generator of splitmix64 outputs."""
    x = seed & _MASK
    while True:
        x = (x + 0x9E3779B97F4A7C15) & _MASK
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        yield z ^ (z >> 31)


class Xoshiro256:
    def __init__(self, seed: int = 0, state=None):
        if state is not None:
            s = [int(v) & _MASK for v in state]
            if len(s) != 4 or not any(s):
                raise ValueError("state must be four words, not all zero")
        else:
            sm = splitmix64(int(seed))
            s = [next(sm) for _ in range(4)]
        self.s = s

    def next_u64(self) -> int:
        s = self.s
        result = (_rotl((s[1] * 5) & _MASK, 7) * 9) & _MASK
        t = (s[1] << 17) & _MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def random(self) -> float:
        """Uniform double in [0, 1)."""
        return (self.next_u64() >> 11) * 2.0 ** -53

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def unit_vector3(self) -> np.ndarray:
        """Uniform direction: ``z`` uniform in [-1, 1], azimuth uniform."""
        z = self.uniform(-1.0, 1.0)
        t = self.uniform(0.0, 2 * math.pi)
        rho = math.sqrt(max(0.0, 1 - z * z))
        return np.array([rho * math.cos(t), rho * math.sin(t), z])
