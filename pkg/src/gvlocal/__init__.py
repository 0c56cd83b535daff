"""Exact GW/GV invariant conversion and local computations for contractible curves."""
from gvlocal.series import BACKEND, LambdaSeries, gv_kernel, series_invert, series_mul, two_sin_half
from gvlocal.transform import (
    DegreeFunctional,
    InvariantTable,
    LocalMultiplicities,
    gv_from_gw_all_genus,
    gv_from_gw_genus0,
    gw_from_gv,
    integrality_check,
    local_contribution,
)

__version__ = "0.1.0"
