"""Nilpotent orbits of cyclic quivers: closure posets, fibre point counts and
local intersection cohomology via deconvolution."""

from .core import (
    DimVector,
    Multisegment,
    Segment,
    canonicalize,
    dim_vector,
    enumerate_multisegments,
    epsilon_rows,
    flag_dim,
    orbit_dim,
    parse_multisegment,
    truncate,
)
from .poly import IntPoly

__all__ = [
    "DimVector",
    "IntPoly",
    "Multisegment",
    "Segment",
    "canonicalize",
    "dim_vector",
    "enumerate_multisegments",
    "epsilon_rows",
    "flag_dim",
    "orbit_dim",
    "parse_multisegment",
    "truncate",
]
