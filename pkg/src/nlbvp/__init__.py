"""Spectral toolkit for the Laplacian on (0,1) with the coupled boundary
condition phi(0) + phi(1) = -phi'(0) = phi'(1).

The eigenfunctions of this problem are the eigenfunctions of the integral
operator with kernel -|x-y|/2 on the unit interval.  The package computes
the spectrum from its secular equations, evaluates the reciprocal power sums
A_p = sum_n lambda_n^(-p) exactly by three independent rational pipelines,
cross-checks them against numerical trace and series oracles, derives
certified sandwich bounds for the unique negative eigenvalue, and covers the
analogous Bessel-zero power sums of the unit disk.
"""

from __future__ import annotations

__version__ = "0.1.0"

from nlbvp.bounds import BoundPair, BoundScheme, bound_ratio_pair, bound_root_pair, converge_lambda0
from nlbvp.disk import DiskSum, DivergentSumError, bessel_zero, disk_power_sum, sigma
from nlbvp.oracles import (
    OracleMethod,
    OracleReport,
    direct_sum,
    iterated_kernel_diag2,
    kernel_eval,
    nystrom_trace_power,
    tan_reference_sum,
)
from nlbvp.rayleigh import (
    Method,
    RayleighTable,
    bernoulli,
    maclaurin_coeffs,
    power_sums_bernoulli,
    power_sums_newton,
    power_sums_recursion,
    s_values,
    t_sequence,
    zeta_even,
)
from nlbvp.roots import (
    ConvergenceError,
    RootResult,
    SecularEquation,
    enumerate_roots,
    solve_cot_root,
    solve_coth_fixed_point,
    solve_tan_root,
)
from nlbvp.eigen import (
    EigenvalueEntry,
    Family,
    boundary_residual,
    coth_alpha,
    eigenfunction_eval,
    eigenvalue,
    normalization_check,
    spectrum,
)

__all__ = [
    "__version__",
    "BoundPair",
    "BoundScheme",
    "ConvergenceError",
    "DiskSum",
    "DivergentSumError",
    "EigenvalueEntry",
    "Family",
    "Method",
    "OracleMethod",
    "OracleReport",
    "RayleighTable",
    "RootResult",
    "SecularEquation",
    "bernoulli",
    "bessel_zero",
    "bound_ratio_pair",
    "bound_root_pair",
    "boundary_residual",
    "converge_lambda0",
    "coth_alpha",
    "direct_sum",
    "disk_power_sum",
    "eigenfunction_eval",
    "eigenvalue",
    "enumerate_roots",
    "iterated_kernel_diag2",
    "kernel_eval",
    "maclaurin_coeffs",
    "normalization_check",
    "nystrom_trace_power",
    "power_sums_bernoulli",
    "power_sums_newton",
    "power_sums_recursion",
    "s_values",
    "sigma",
    "solve_cot_root",
    "solve_coth_fixed_point",
    "solve_tan_root",
    "spectrum",
    "t_sequence",
    "tan_reference_sum",
    "zeta_even",
]
