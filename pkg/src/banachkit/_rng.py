"""Counter-based 64-bit generator.

Every draw is a pure function of ``(seed, counter)``, so a Random set gives the
same membership for an integer ``n`` no matter which window it is evaluated on.

Algorithm (fixed; all arithmetic mod 2**64):

    key  = mix(seed)
    word = mix(key + counter * 0x9E3779B97F4A7C15)

where ``mix`` is the SplitMix64 finalizer and negative counters are taken in
two's complement.  A Bernoulli(p) draw succeeds iff ``word >> 11 < ceil(p * 2**53)``,
which is evaluated in exact integer arithmetic.
"""

from fractions import Fraction
import math

import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
MASK64 = (1 << 64) - 1


def _mix(z):
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def words(seed: int, counters) -> np.ndarray:
    """Return the 64-bit words for ``counters`` under ``seed`` as a uint64 array."""
    ctr = np.asarray(counters, dtype=np.int64).view(np.uint64)
    with np.errstate(over="ignore"):
        key = _mix(np.array([seed & MASK64], dtype=np.uint64))[0]
        return _mix(key + ctr * _GOLDEN)


def word(seed: int, counter: int) -> int:
    return int(words(seed, [counter])[0])


def bernoulli_threshold(density) -> int:
    """Integer threshold on the top 53 bits equivalent to ``u < density``."""
    return math.ceil(Fraction(density) * (1 << 53))


def bernoulli(seed: int, lo: int, hi: int, density) -> np.ndarray:
    """Independent Bernoulli(density) draws for the integers lo..hi inclusive."""
    w = words(seed, np.arange(lo, hi + 1, dtype=np.int64))
    return (w >> np.uint64(11)) < np.uint64(bernoulli_threshold(density))


def below(seed: int, counters, bound: int) -> np.ndarray:
    """Draws reduced into ``range(bound)`` (modulo bias is irrelevant at our scales)."""
    return (words(seed, counters) % np.uint64(bound)).astype(np.int64)
