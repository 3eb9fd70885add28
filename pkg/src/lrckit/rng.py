"""Deterministic pseudo-random generator shared by the generators and the CLI.

SplitMix64 (Steele, Lea, Flood 2014): a 64-bit counter advanced by a fixed
odd constant, passed through an avalanche mixer.  Pure integer arithmetic
mod 2**64, so identical seeds give identical streams on every platform and
Python version.  Uniform draws below a bound use top-bit rejection, which
keeps the stream layout independent of the bound's bit pattern.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return _mix(self._state)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("bound must be positive")
        k = (n - 1).bit_length()
        if k == 0:
            return 0
        while True:
            v = self.next64() >> (64 - k)
            if v < n:
                return v

    def subset(self, n: int, k: int) -> tuple[int, ...]:
        """Uniformly random k-subset of [0, n), returned sorted."""
        if k > n:
            raise ValueError(f"cannot draw {k} distinct values from [0, {n})")
        picked: set[int] = set()
        while len(picked) < k:
            picked.add(self.below(n))
        return tuple(sorted(picked))

    def spawn(self) -> "SplitMix64":
        """Child generator with a stream derived from (and independent of) this one."""
        return SplitMix64(self.next64())
