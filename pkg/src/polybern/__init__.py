"""Exact umbral calculus for poly-Bernoulli and related Appell polynomials."""
from .families import (
    FamilyTag,
    bernoulli_number,
    falling_factorial,
    family_polynomial,
    poly_bernoulli_number,
    poly_bernoulli_polynomial,
    stirling2,
)
from .identities import GridSpec, run_grid
from .polynomial import Polynomial
from .report import CheckReport
from .series import (
    Series,
    gf_family,
    gf_poly_bernoulli,
    polylog_delta_series,
    series_add,
    series_compose,
    series_inverse,
    series_mul,
)
from .umbral import (
    AppellFamily,
    ConnectionMatrix,
    appell_polynomial,
    appell_step,
    apply,
    connection_appell,
    pair,
    sheffer_orthogonality_check,
)

__version__ = "0.1.0"
