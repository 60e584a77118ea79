"""Bohr sets ``{k : ||(k - shift) * a_i|| < eps for all i}``.

Membership is decided exactly.  Frequencies and radii given as floats are
evaluated as the exact binary rationals they denote, so there is no comparison
tolerance: a float frequency ``a`` is ``m / 2**e`` and ``(k * m) mod 2**e`` is
computed in wrapping uint64 arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math
from typing import Union

import numpy as np

from .errors import SpecError

Real = Union[Fraction, float, int]

# int64 storage for k - shift
K_LIMIT = 1 << 62


def as_fraction(x: Real) -> Fraction:
    """Exact rational value of ``x`` (floats become dyadic rationals)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float) and not math.isfinite(x):
        raise SpecError(f"non-finite value {x}")
    return Fraction(x)


def dist_to_int(x: Fraction) -> Fraction:
    """``||x||``, the distance from ``x`` to the nearest integer."""
    f = x - math.floor(x)
    return min(f, 1 - f)


@dataclass(frozen=True)
class BohrSpec:
    freqs: tuple
    eps: Real
    shift: int = 0

    def __post_init__(self):
        freqs = tuple(self.freqs)
        object.__setattr__(self, "freqs", freqs)
        if not freqs:
            raise SpecError("a Bohr set needs at least one frequency")
        for a in freqs:
            if not 0 <= as_fraction(a) < 1:
                raise SpecError(f"frequency {a} outside [0,1)")
        eps = as_fraction(self.eps)
        if not 0 < eps <= Fraction(1, 2):
            raise SpecError(f"radius {self.eps} outside (0, 1/2]")
        if int(self.shift) != self.shift:
            raise SpecError(f"shift must be an integer, got {self.shift}")
        object.__setattr__(self, "shift", int(self.shift))

    def rational_period(self) -> int:
        """Least common denominator of the frequencies (the set is periodic with it)."""
        return math.lcm(*(as_fraction(a).denominator for a in self.freqs))

    def translated(self, m: int) -> "BohrSpec":
        return BohrSpec(self.freqs, self.eps, self.shift + m)


def bohr_member(k: int, spec: BohrSpec) -> bool:
    """Strict-inequality membership, evaluated with exact fractions."""
    eps = as_fraction(spec.eps)
    return all(dist_to_int((k - spec.shift) * as_fraction(a)) < eps for a in spec.freqs)


def _near_zero(r, q: int, eps: Fraction):
    # ||r/q|| < eps  <=>  r < T or r > q - T, T = ceil(eps*q); valid for 0 <= r < q
    t = math.ceil(eps * q)
    return (r < t) | (r > q - t)


def _residues(k: np.ndarray, p: int, q: int):
    """``(k * p) mod q`` for an int64 array ``k``, exactly."""
    if q == 1:
        return np.zeros(k.shape, dtype=np.int64), True
    if q & (q - 1) == 0 and q <= (1 << 63):
        with np.errstate(over="ignore"):
            r = (k.view(np.uint64) * np.uint64(p)) & np.uint64(q - 1)
        return r, True
    if q < (1 << 31):
        return (np.mod(k, q) * p) % q, True
    return [(int(x) * p) % q for x in k.tolist()], False


def bohr_mask(spec: BohrSpec, lo: int, hi: int) -> np.ndarray:
    """Vectorized membership for the integers lo..hi."""
    if max(abs(lo - spec.shift), abs(hi - spec.shift)) >= K_LIMIT:
        raise SpecError("Bohr evaluation limited to |k - shift| < 2**62")
    k = np.arange(lo - spec.shift, hi - spec.shift + 1, dtype=np.int64)
    eps = as_fraction(spec.eps)
    out = np.ones(k.shape, dtype=bool)
    for a in spec.freqs:
        fa = as_fraction(a)
        q, p = fa.denominator, fa.numerator
        r, vectorized = _residues(k, p, q)
        if vectorized:
            if r.dtype == np.uint64:
                t = math.ceil(eps * q)
                out &= (r < np.uint64(t)) | (r > np.uint64(q - t))
            else:
                out &= _near_zero(r, q, eps)
        else:
            t = math.ceil(eps * q)
            out &= np.array([x < t or x > q - t for x in r], dtype=bool)
    return out


def bohr_residues(spec: BohrSpec) -> tuple[int, frozenset]:
    """Period and residue set of a Bohr set, computed one residue at a time."""
    p = spec.rational_period()
    return p, frozenset(r for r in range(p) if bohr_member(r, spec))
