"""Orientation signs of real determinant lines over real curves.

Everything is exact arithmetic over Z and GF(2).  The usual entry points
are re-exported here; the submodules hold the rest.
"""

from .autgroup import AutClass, compose, generator, generator_names, identity, ind2, minus_one
from .curve import RealCurve, admissible_w1, make_curve, valid_topologies
from .errors import RealDetError
from .f2 import F2Matrix, F2Vector
from .signs import (
    FullAutClass,
    RealBundle,
    SLClass,
    det_orientation_sign,
    loop_orientability,
    minus_id_sign,
    picard_w1,
    s_n,
    s_top,
)
from .spin import QuadraticForm, arf, arf_delta, enumerate_real_spin, find_real_spin

__version__ = "0.1.0"

__all__ = [
    "AutClass",
    "F2Matrix",
    "F2Vector",
    "FullAutClass",
    "QuadraticForm",
    "RealBundle",
    "RealCurve",
    "RealDetError",
    "SLClass",
    "admissible_w1",
    "arf",
    "arf_delta",
    "compose",
    "det_orientation_sign",
    "enumerate_real_spin",
    "find_real_spin",
    "generator",
    "generator_names",
    "identity",
    "ind2",
    "loop_orientability",
    "make_curve",
    "minus_id_sign",
    "minus_one",
    "picard_w1",
    "s_n",
    "s_top",
    "valid_topologies",
]
