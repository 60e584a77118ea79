"""Certificate-producing checks for density, syndeticity and Bohr structure of integer sets."""

from .bohr import folner_bohr_check, piecewise_bohr_check, spectral_hints
from .bohrset import BohrSpec, bohr_member
from .density import (DensityReport, banach_density_est, best_shift, exact_density,
                      window_density)
from .folner import FolnerReport, greedy_disjoint_shifts, verify_cc_cover
from .jin import JinReport, find_translate, jin_experiment
from .lattice import (Box, LatticeCertificate, LatticeSet, banach_density_est_d, diff_set_d,
                      pws_certificate_d)
from .setmodel import Window, WindowedSet, diff_set, format_spec, materialize, parse
from .structure import PwsCertificate, check_pws_certificate, min_gap_bound, pws_certificate

__version__ = "0.1.0"

__all__ = [
    "folner_bohr_check",
    "piecewise_bohr_check",
    "spectral_hints",
    "BohrSpec",
    "bohr_member",
    "DensityReport",
    "banach_density_est",
    "best_shift",
    "exact_density",
    "window_density",
    "FolnerReport",
    "greedy_disjoint_shifts",
    "verify_cc_cover",
    "JinReport",
    "find_translate",
    "jin_experiment",
    "Box",
    "LatticeCertificate",
    "LatticeSet",
    "banach_density_est_d",
    "diff_set_d",
    "pws_certificate_d",
    "Window",
    "WindowedSet",
    "diff_set",
    "format_spec",
    "materialize",
    "parse",
    "PwsCertificate",
    "check_pws_certificate",
    "min_gap_bound",
    "pws_certificate",
]
