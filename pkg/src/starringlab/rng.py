"""SplitMix64: the fixed, named, splittable generator behind probe sets.

The exact algorithm is part of the external reproducibility contract:
reports generated from the same (seed, count) must be byte-identical, so
the generator identity cannot be an implementation detail.
"""

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed):
        self.state = seed & MASK

    def next_u64(self):
        self.state = (self.state + GOLDEN) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def split(self):
        """Derive an independent child generator."""
        return SplitMix64(self.next_u64())

    def randint(self, lo, hi):
        """Uniform integer in [lo, hi], inclusive."""
        span = hi - lo + 1
        return lo + self.next_u64() % span

    def chance(self, num, den):
        """True with probability num/den."""
        return self.next_u64() % den < num
