"""SplitMix64, the fixed pseudo-random generator used for every seeded draw.

SplitMix64 (Steele, Lea & Flood 2014; the seeding generator of Vigna's
xoshiro family) advances a 64-bit counter by the golden-ratio increment and
hashes it. Reference outputs for seed 1234567::

    6457827717110365317, 3203168211198807973, 9817491932198370423,
    4593380528125082431, 16408922859458223821

Integers in ``[0, bound)`` are drawn by rejection: raw outputs below
``2**64 mod bound`` are discarded, so no residue is favoured.
"""

from __future__ import annotations

from typing import MutableSequence

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

REFERENCE_SEED = 1234567
REFERENCE_OUTPUTS = (
    6457827717110365317,
    3203168211198807973,
    9817491932198370423,
    4593380528125082431,
    16408922859458223821,
)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound)."""
        if not 0 < bound <= 1 << 64:
            raise ValueError("bound must be in 1..2**64")
        threshold = (1 << 64) % bound
        while True:
            r = self.next_u64()
            if r >= threshold:
                return r % bound

    def shuffle(self, items: MutableSequence) -> None:
        """Fisher-Yates, in place."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
