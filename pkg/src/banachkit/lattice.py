"""Sets in Z^d on boxes: cube densities, difference sets, and piecewise
syndeticity with ``K = [-k, k]^d``.  Dimensions are limited to 1..4."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import itertools
import json

import numpy as np
from scipy import ndimage, signal

from .errors import OutOfWindowError, SpecError, WindowError
from .setmodel import Window, materialize

MAX_DIM = 4


@dataclass(frozen=True)
class Box:
    """Product of inclusive integer ranges."""

    ranges: tuple

    def __post_init__(self):
        ranges = tuple((int(lo), int(hi)) for lo, hi in self.ranges)
        if not 1 <= len(ranges) <= MAX_DIM:
            raise WindowError(f"dimension must be 1..{MAX_DIM}, got {len(ranges)}")
        for lo, hi in ranges:
            if lo > hi:
                raise WindowError(f"empty range {lo}:{hi}")
        object.__setattr__(self, "ranges", ranges)

    @classmethod
    def parse(cls, text: str) -> "Box":
        """``"lo:hi,lo:hi,..."``."""
        return cls(tuple(Window.parse(part).as_list() for part in text.split(",")))

    @classmethod
    def cube(cls, corner, side: int) -> "Box":
        return cls(tuple((c, c + side - 1) for c in corner))

    @property
    def dim(self) -> int:
        return len(self.ranges)

    @property
    def shape(self) -> tuple:
        return tuple(hi - lo + 1 for lo, hi in self.ranges)

    @property
    def lows(self) -> tuple:
        return tuple(lo for lo, _ in self.ranges)

    @property
    def volume(self) -> int:
        return int(np.prod(self.shape, dtype=object))

    def contains_box(self, other: "Box") -> bool:
        return other.dim == self.dim and all(
            a <= c and d <= b for (a, b), (c, d) in zip(self.ranges, other.ranges))

    def as_list(self):
        return [list(r) for r in self.ranges]


@dataclass(frozen=True, eq=False)
class LatticeSet:
    box: Box
    table: np.ndarray = field(repr=False)

    def __post_init__(self):
        t = np.array(self.table, dtype=bool, copy=True)
        if t.shape != self.box.shape:
            raise WindowError(f"table shape {t.shape} does not match box {self.box.shape}")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @classmethod
    def from_points(cls, box: Box, points) -> "LatticeSet":
        t = np.zeros(box.shape, dtype=bool)
        for p in points:
            idx = tuple(x - lo for x, (lo, _) in zip(p, box.ranges))
            if any(not 0 <= i < s for i, s in zip(idx, box.shape)):
                raise OutOfWindowError(f"{p} outside box")
            t[idx] = True
        return cls(box, t)

    @classmethod
    def product(cls, factors) -> "LatticeSet":
        """Cartesian product of one-dimensional windowed sets."""
        factors = list(factors)
        box = Box(tuple(f.window.as_list() for f in factors))
        t = np.ones(box.shape, dtype=bool)
        for axis, f in enumerate(factors):
            shape = [1] * box.dim
            shape[axis] = f.window.length
            t = t & f.membership.reshape(shape)
        return cls(box, t)

    @classmethod
    def from_specs(cls, specs, box: Box) -> "LatticeSet":
        """Product of DSL set descriptions, one per axis."""
        if len(specs) != box.dim:
            raise SpecError(f"{len(specs)} factor specs for a {box.dim}-dimensional box")
        return cls.product(materialize(s, Window(*r)) for s, r in zip(specs, box.ranges))

    @classmethod
    def periodic(cls, box: Box, periods, residues) -> "LatticeSet":
        """Points whose coordinate-wise residues mod ``periods`` lie in ``residues``."""
        grids = np.meshgrid(*[np.arange(lo, hi + 1) for lo, hi in box.ranges], indexing="ij")
        keys = np.stack([np.mod(g, p) for g, p in zip(grids, periods)], axis=-1)
        pattern = np.zeros(tuple(periods), dtype=bool)
        for r in residues:
            pattern[tuple(int(x) % p for x, p in zip(r, periods))] = True
        return cls(box, pattern[tuple(keys[..., i] for i in range(box.dim))])

    @property
    def count(self) -> int:
        return int(self.table.sum())

    def points(self) -> list[tuple]:
        lows = np.array(self.box.lows)
        return [tuple(int(x) for x in p + lows) for p in np.argwhere(self.table)]

    def __eq__(self, other):
        if not isinstance(other, LatticeSet):
            return NotImplemented
        return self.box == other.box and np.array_equal(self.table, other.table)

    __hash__ = None


def cube_sums(table: np.ndarray, side: int) -> np.ndarray:
    """Member counts of every ``side^d`` subcube, indexed by lower corner."""
    out = table.astype(np.int64)
    for axis in range(out.ndim):
        csum = np.cumsum(out, axis=axis)
        pad = [(0, 0)] * out.ndim
        pad[axis] = (1, 0)
        csum = np.pad(csum, pad)
        hi = [slice(None)] * out.ndim
        lo = [slice(None)] * out.ndim
        hi[axis] = slice(side, None)
        lo[axis] = slice(None, -side)
        out = csum[tuple(hi)] - csum[tuple(lo)]
    return out


def banach_density_est_d(s: LatticeSet, L: int) -> Fraction:
    """Maximum density over all axis-aligned ``L^d`` subcubes of the box."""
    if L < 1 or any(L > n for n in s.box.shape):
        raise WindowError(f"cube side {L} does not fit in box {s.box.shape}")
    return Fraction(int(cube_sums(s.table, L).max()), L ** s.box.dim)


def diff_set_d(a: LatticeSet, b: LatticeSet) -> LatticeSet:
    """All differences ``x - y``; box is ``a.box - b.box`` componentwise."""
    if a.box.dim != b.box.dim:
        raise SpecError("dimension mismatch")
    if not a.table.any() or not b.table.any():
        raise SpecError("difference set of an empty operand")
    box = Box(tuple((alo - bhi, ahi - blo)
                    for (alo, ahi), (blo, bhi) in zip(a.box.ranges, b.box.ranges)))
    flipped = b.table[(slice(None, None, -1),) * b.box.dim]
    counts = signal.convolve(a.table.astype(np.float64), flipped.astype(np.float64), method="auto")
    return LatticeSet(box, np.rint(counts) > 0)


@dataclass(frozen=True)
class LatticeCertificate:
    """``s + [-k, k]^d`` contains each listed cube."""

    k: int
    cubes: tuple
    box: Box

    def to_dict(self):
        return {"k": self.k, "cubes": [c.as_list() for c in self.cubes], "box": self.box.as_list()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d) -> "LatticeCertificate":
        return cls(int(d["k"]), tuple(Box(tuple(map(tuple, c))) for c in d["cubes"]),
                   Box(tuple(map(tuple, d["box"]))))


def _dilate(table: np.ndarray, k: int) -> np.ndarray:
    if k == 0:
        return table
    return ndimage.maximum_filter(table, size=2 * k + 1, mode="constant", cval=False)


def _first_cube(s: LatticeSet, k: int, side: int):
    full = cube_sums(_dilate(s.table, k), side) == side ** s.box.dim
    if not full.any():
        return None
    corner = np.unravel_index(int(np.argmax(full)), full.shape)
    return Box.cube([c + lo for c, lo in zip(corner, s.box.lows)], side)


def pws_certificate_d(s: LatticeSet, k_max: int, L_min: int) -> LatticeCertificate | None:
    """Smallest ``k <= k_max`` whose dilation contains an ``L_min^d`` cube inside the box.

    The certificate lists the lexicographically first such cube.
    """
    if k_max < 0 or L_min < 1:
        raise SpecError(f"need k_max >= 0 and L_min >= 1, got {k_max}, {L_min}")
    if any(L_min > n for n in s.box.shape) or not s.table.any():
        return None
    if _first_cube(s, k_max, L_min) is None:
        return None
    lo, hi = 0, k_max
    while lo < hi:
        mid = (lo + hi) // 2
        if _first_cube(s, mid, L_min) is not None:
            hi = mid
        else:
            lo = mid + 1
    return LatticeCertificate(lo, (_first_cube(s, lo, L_min),), s.box)


def check_lattice_certificate(s: LatticeSet, cert: LatticeCertificate) -> bool:
    """Re-validate by counting members of ``[x-k, x+k]^d`` (clipped to the box) for every cube cell."""
    if cert.k < 0 or cert.box != s.box or not cert.cubes:
        return False
    # summed-area table with a zero border
    sat = s.table.astype(np.int64)
    for axis in range(sat.ndim):
        sat = np.cumsum(sat, axis=axis)
    sat = np.pad(sat, [(1, 0)] * sat.ndim)
    shape = np.array(s.box.shape)
    lows = np.array(s.box.lows)
    for cube in cert.cubes:
        if not s.box.contains_box(cube):
            return False
        cells = np.stack(np.meshgrid(*[np.arange(lo, hi + 1) for lo, hi in cube.ranges],
                                     indexing="ij"), axis=-1).reshape(-1, s.box.dim) - lows
        a = np.clip(cells - cert.k, 0, shape)
        b = np.clip(cells + cert.k + 1, 0, shape)
        total = np.zeros(len(cells), dtype=np.int64)
        for corner in itertools.product((0, 1), repeat=s.box.dim):
            idx = tuple(np.where(c, b[:, i], a[:, i]) for i, c in enumerate(corner))
            sign = (-1) ** (s.box.dim - sum(corner))
            total += sign * sat[idx]
        if not (total > 0).all():
            return False
    return True
