"""Bicomplex and hyperbolic arithmetic, ideals, and operator spectra."""
from ._accel import backend_name
from .core import (
    DEFAULT_TOL, E1, E2, ONE, ZERO, Bicomplex, Hyperbolic, NotInvertible,
    ToleranceConfig, add, conj, idempotent_decompose, in_d_plus, inverse,
    is_invertible, is_zero, is_zero_divisor, leq_prime, mul, norm_d, recompose,
)
from .linalg import (
    BCMatrix, BCVector, ConvergenceFailure, NotInApSpectrum, SpectrumSet,
    approx_eig_witness, approx_point_spectrum, decompose_operator, eigenvalues,
    invariant_subspace_check, kernel_bc, operator_norm_d, point_spectrum,
    sigma_p_not_in_ap_demo, spectrum_membership,
)
from .parse import BicomplexSyntaxError, parse_bicomplex
from .report import Report

__version__ = "0.1.0"
