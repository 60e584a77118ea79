"""Set descriptions, their DSL, and finite-window materialization."""

from .ast import (AP, Bohr, DiffSet, Explicit, Intersect, Periodic, Random, SetSpec, Shift,
                  Union_, contains_random)
from .dsl import format_spec, parse
from .materialize import diff_set, eventual_form, is_periodic_class, materialize
from .windows import Window, WindowedSet

__all__ = [
    "AP", "Bohr", "DiffSet", "Explicit", "Intersect", "Periodic", "Random", "SetSpec",
    "Shift", "Union_", "Window", "WindowedSet", "contains_random", "diff_set",
    "eventual_form", "format_spec", "is_periodic_class", "materialize", "parse",
]
