#ifndef HMOM_SPECTRA_HPP
#define HMOM_SPECTRA_HPP

#include <vector>

#include "hmom/exact.hpp"

namespace hmom {

/// Numerical roots of H_n, sorted ascending, with the semicircle scaling
/// lambda_j = xi_j / (2 sqrt n).
struct RootSet {
    int n = 0;
    std::vector<double> roots;
    std::vector<double> scaled;
};

/// All eigenvalues of the symmetric tridiagonal matrix with diagonal `diag`
/// and subdiagonal `off` (size n-1), by the implicit-shift QL algorithm.
/// Returns them sorted ascending; throws numeric_error on non-convergence.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> off);

/// Eigenvalues of a dense symmetric matrix: Householder reduction to
/// tridiagonal form followed by the QL sweep. Only the lower triangle of a
/// is read.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a);

/// Roots of H_n as the eigenvalues of the Jacobi matrix with zero diagonal
/// and off-diagonal entries sqrt(1)..sqrt(n-1).
RootSet hermite_roots(int n);

/// (1/n) sum_j lambda_j^k = M_n(k) / (2^k n^(k/2+1)).
double empirical_moment(const RootSet& rs, int k);

/// Moments of the semicircle density: C_{k/2} / 2^k for even k, 0 for odd k.
BigRat semicircle_moment(int k);

/// rho_sc(x) = (2/pi) sqrt(1-x^2) on [-1,1].
double semicircle_density(double x);

/// Cumulative distribution of rho_sc, clamped outside [-1,1].
double semicircle_cdf(double x);

}  // namespace hmom

#endif  // HMOM_SPECTRA_HPP
