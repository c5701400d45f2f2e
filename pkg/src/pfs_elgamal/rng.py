"""Seedable SplitMix64 generator used for reproducible key and nonce draws.

Update rule (all arithmetic mod 2**64)::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output z ^ (z >> 31)

``randrange(lo, hi)`` draws ``span = hi - lo`` by rejection: take
``ceil(bits / 64)`` outputs, concatenate them big-endian (first output most
significant), keep the low ``bits = span.bit_length()`` bits, and retry while
the value is ``>= span``. The result is ``lo + value``.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        if seed < 0:
            raise ValueError("seed must be nonnegative")
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randrange(self, start: int, stop: int) -> int:
        span = stop - start
        if span <= 0:
            raise ValueError(f"empty range [{start}, {stop})")
        bits = span.bit_length()
        words = (bits + 63) // 64
        while True:
            v = 0
            for _ in range(words):
                v = (v << 64) | self.next_u64()
            v &= (1 << bits) - 1
            if v < span:
                return start + v
