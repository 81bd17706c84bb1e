#ifndef HMOM_MOMENTS_HPP
#define HMOM_MOMENTS_HPP

#include <utility>
#include <vector>

#include "hmom/polynomial.hpp"

namespace hmom {

/// M_n(2k) as an exact polynomial in n, with the two top coefficients pulled
/// out: deg poly = k+1, leading = coefficient of n^(k+1) (a Catalan number),
/// second = coefficient of n^k.
struct MomentPolynomial {
    int k = 0;
    ExactPolynomial poly;  // variable 'n'
    BigInt leading;
    BigInt second;
};

/// Power sums M_n(1)..M_n(kmax) of the roots of H_n by forward substitution
/// of the Newton identities (requires kmax <= n). Element j is M_n(j+1).
std::vector<BigInt> power_sums_exact(int n, int kmax);

/// M_n(2k) as a polynomial in n, by exact Lagrange interpolation through the
/// k+2 sample points n = 2k..3k+1. Aborts with consistency_error if the
/// result is not an integer polynomial of degree k+1.
MomentPolynomial moment_polynomial(int k);

/// The same polynomial by expanding the k x k Newton-identity determinant
/// whose entries are the closed-form Hermite coefficients as polynomials
/// in n.
ExactPolynomial moment_determinant(int k);

/// (C_k, s_k): the expected leading and second coefficients,
/// C_k = binom(2k,k)/(k+1) and s_k = -(2^(2k-1) - binom(2k-1,k)).
std::pair<BigInt, BigInt> coefficient_targets(int k);

}  // namespace hmom

#endif  // HMOM_MOMENTS_HPP
