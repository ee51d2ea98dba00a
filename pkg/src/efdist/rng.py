"""Seeded 64-bit pseudo-random numbers via SplitMix64.

All randomized generators in this package draw from this one algorithm so
that a seed reproduces the same graph in any implementation of the same
spec.  SplitMix64 (Steele, Lea, Flood 2014) advances a 64-bit state by the
golden-ratio increment and scrambles it with two xor-multiply rounds:

    state += 0x9E3779B97F4A7C15          (mod 2^64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9   (mod 2^64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB   (mod 2^64)
    return z ^ (z >> 31)

Derived conveniences (documented because they are part of the reproducible
contract):

* ``random()`` = ``next_u64() >> 11`` scaled by 2^-53 (a float in [0, 1)).
* ``randrange(n)`` = ``next_u64() % n`` (modulo reduction; the tiny modulo
  bias is irrelevant at the scales used here).
* ``shuffle`` is a Fisher-Yates pass from the last index down, swapping
  index ``i`` with ``randrange(i + 1)``.
* ``derive_seed(seed, i)`` = first output of SplitMix64 seeded with
  ``seed XOR (i + 1) * 0x9E3779B97F4A7C15`` (per-trial sub-seeds).
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """Deterministic 64-bit generator; state is a single u64."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        return self.next_u64() % n

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_seed(seed: int, index: int) -> int:
    """Sub-seed for trial ``index`` of an experiment seeded with ``seed``."""
    return SplitMix64((seed ^ ((index + 1) * _GAMMA)) & _MASK).next_u64()
