"""Exact enumeration of staircase tableaux, Askey-Wilson moments and the ASEP."""

from .errors import *  # noqa: F401,F403
from .exact import Fraction, GaussianRational, LaurentSeries, QuadExt
from .polyring import MultiPoly, poly_eval
from .tableaux import (
    StaircaseTableau,
    enumerate_tableaux,
    enumerate_type,
    type_of,
    validate,
    weight,
    z_poly,
    z_sigma_poly,
    z_fast,
)
from .moments import (
    AWParams,
    PolySample,
    TridiagonalSpec,
    aw_integrate_poly,
    aw_integrate_q0,
    aw_moments_combinatorial,
    aw_moments_explicit,
    aw_moments_signed,
    aw_moments_tridiagonal,
    aw_poly_coeffs,
    aw_poly_eval,
    phi_basis_coeffs,
    recurrence_coeffs,
    tridiag_moments,
)
from .partition import (
    GreekParams,
    abcd_from_greek,
    genfun_coeffs,
    greek_from_abcd,
    z_fugacity_explicit,
    z_q0_explicit,
    z_q1_closed,
)
from .typegen import z_sigma_delta0, z_sigma_ntw
from .asep import build_chain, stationary_exact, verify_newthm
from .combinat import dyck_moment, forest_of, matching_stats, phi, tree_to_cycle
from .kernel import BACKEND

__version__ = "0.1.0"
