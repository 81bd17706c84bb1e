"""Power sums of Hermite roots, Catalan coefficients and Wigner-matrix checks.

The heavy lifting lives in the C++ extension ``hmom._core``; this package
re-exports its public surface. Exact quantities come back as ``int`` /
``fractions.Fraction``, numerical ones as floats.
"""

from hmom._core import (
    __version__,
    ConsistencyError,
    NumericError,
    UsageError,
    akl,
    bound_check,
    catalan_numbers,
    catalan_recursion_check,
    char_poly,
    coefficient_targets,
    conjugate_recursion_check,
    count_paths,
    empirical_moment,
    exact_expected_charpoly,
    f_n,
    falling_factorial,
    fixed_point_residual,
    hermite_coeff_closed,
    hermite_coefficients,
    hermite_roots,
    lattice_paths,
    matching_count_complete,
    mc_expected_charpoly,
    moment_determinant,
    moment_polynomial,
    moment_series,
    power_sums,
    reconstruct_A,
    sample_matrix,
    second_coeff_series,
    second_coeffs,
    semicircle_cdf,
    semicircle_density,
    semicircle_moment,
    spectrum_histogram,
    symmetric_eigenvalues,
    verify_all,
    walk_identity_check,
)

__all__ = [
    "__version__",
    "ConsistencyError",
    "NumericError",
    "UsageError",
    "akl",
    "bound_check",
    "catalan_numbers",
    "catalan_recursion_check",
    "char_poly",
    "coefficient_targets",
    "conjugate_recursion_check",
    "count_paths",
    "empirical_moment",
    "exact_expected_charpoly",
    "f_n",
    "falling_factorial",
    "fixed_point_residual",
    "hermite_coeff_closed",
    "hermite_coefficients",
    "hermite_roots",
    "lattice_paths",
    "matching_count_complete",
    "mc_expected_charpoly",
    "moment_determinant",
    "moment_polynomial",
    "moment_series",
    "power_sums",
    "reconstruct_A",
    "sample_matrix",
    "second_coeff_series",
    "second_coeffs",
    "semicircle_cdf",
    "semicircle_density",
    "semicircle_moment",
    "spectrum_histogram",
    "symmetric_eigenvalues",
    "verify_all",
    "walk_identity_check",
]
