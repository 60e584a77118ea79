"""Symbolic set descriptions.

Nodes are frozen dataclasses, so structural equality and hashing come for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..bohrset import BohrSpec, as_fraction
from ..errors import SpecError

SEED_LIMIT = 1 << 64


@dataclass(frozen=True)
class Periodic:
    """All integers whose residue mod ``period`` lies in ``residues``."""

    period: int
    residues: frozenset

    def __post_init__(self):
        if int(self.period) != self.period or self.period < 1:
            raise SpecError(f"period must be >= 1, got {self.period}")
        res = frozenset(int(r) % self.period for r in self.residues)
        if not res:
            raise SpecError("periodic set needs at least one residue")
        object.__setattr__(self, "period", int(self.period))
        object.__setattr__(self, "residues", res)


@dataclass(frozen=True)
class AP:
    """One-sided progression ``start, start + step, start + 2*step, ...``."""

    start: int
    step: int

    def __post_init__(self):
        if int(self.step) != self.step or self.step < 1:
            raise SpecError(f"step must be >= 1, got {self.step}")


@dataclass(frozen=True)
class Bohr:
    spec: BohrSpec


@dataclass(frozen=True)
class Random:
    """Independent Bernoulli(density) membership keyed by (seed, n)."""

    density: Union[Fraction, float]
    seed: int

    def __post_init__(self):
        if not 0 <= as_fraction(self.density) <= 1:
            raise SpecError(f"density must lie in [0,1], got {self.density}")
        if int(self.seed) != self.seed or not 0 <= self.seed < SEED_LIMIT:
            raise SpecError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass(frozen=True)
class Explicit:
    values: frozenset

    def __post_init__(self):
        vals = frozenset(int(v) for v in self.values)
        if not vals:
            raise SpecError("explicit set needs at least one element")
        object.__setattr__(self, "values", vals)


@dataclass(frozen=True)
class Union_:
    left: "SetSpec"
    right: "SetSpec"


@dataclass(frozen=True)
class Intersect:
    left: "SetSpec"
    right: "SetSpec"


@dataclass(frozen=True)
class Shift:
    """The translate ``inner + n``."""

    inner: "SetSpec"
    n: int


@dataclass(frozen=True)
class DiffSet:
    """The difference set ``{a - b : a in left, b in right}``."""

    left: "SetSpec"
    right: "SetSpec"


SetSpec = Union[Periodic, AP, Bohr, Random, Explicit, Union_, Intersect, Shift, DiffSet]
LEAVES = (Periodic, AP, Bohr, Random, Explicit)
BINARY = (Union_, Intersect, DiffSet)


def contains_random(spec) -> bool:
    if isinstance(spec, Random):
        return True
    if isinstance(spec, BINARY):
        return contains_random(spec.left) or contains_random(spec.right)
    if isinstance(spec, Shift):
        return contains_random(spec.inner)
    return False
