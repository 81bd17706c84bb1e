#ifndef HMOM_SERIES_ANALYSIS_HPP
#define HMOM_SERIES_ANALYSIS_HPP

#include <vector>

#include "hmom/hermite.hpp"
#include "hmom/series.hpp"

namespace hmom {

/// The ratio f_n(z) = Hhat_{n-1}(z/sqrt n) / Hhat_n(z/sqrt n) in the even
/// representation: both conjugates are even, so with t = z^2/n the value is
/// numer(t)/denom(t) for integer polynomials in t. denom(0) = 1 and denom
/// stays positive for |z| <= 1/3 by the root bound on H_n.
struct EvenRatio {
    int n = 0;
    ExactPolynomial numer;  // even part of Hhat_{n-1}, variable 't'
    ExactPolynomial denom;  // even part of Hhat_n, variable 't'

    static EvenRatio make(int n);
    static EvenRatio make(const HermitePair& lower, const HermitePair& upper);

    /// Exact value numer(t)/denom(t); domain error if denom(t) <= 0.
    BigRat value_at_t(const BigRat& t) const;
};

/// E(t) with Hhat(x) = E(x^2); throws if Hhat has an odd-degree term.
ExactPolynomial even_part(const ExactPolynomial& h_hat);

/// Catalan generating function c(z) = sum C_k z^k up to order K. Satisfies
/// 1 = c(z) - z c(z)^2 coefficient-wise.
TruncatedSeries catalan_series(int K);

/// Generating function of the power sums of the roots of H_n:
/// M_n(z) = n - z Hhat_n'(z)/Hhat_n(z), expanded to order K <= n.
/// Coefficient k is M_n(k).
TruncatedSeries moment_series(int n, int K);

/// f_n(z) for rational 0 <= z <= 1/3, exactly.
BigRat f_n_eval(int n, const BigRat& z);

/// f_n(z) - (n-1)/n z^2 f_n(z) f_{n-1}(sqrt((n-1)/n) z) - 1; identically 0.
BigRat fixed_point_residual(int n, const BigRat& z);

/// Exact decision r <= c(y) for rational r, 0 < y <= 1/9, via
/// 1 - 2yr >= 0 and (1 - 2yr)^2 >= 1 - 4y.
bool le_catalan_value(const BigRat& r, const BigRat& y);

/// Both bounds f_n(z) <= 1/z^2 and f_n(z) <= c(z^2), decided exactly.
bool bound_check(int n, const BigRat& z);

/// S(z) = -z c(z)/(1-4z); coefficient k is s_k.
TruncatedSeries second_coeff_series(int K);

/// One grid point of the gf-check sweep.
struct GfPoint {
    int n;
    BigRat z;
    BigRat f;
    bool bound_ok;
    bool residual_zero;
};

/// Evaluates f_n, the c(z^2) / 1/z^2 bounds and the fixed-point residual for
/// every n = 1..n_max against every z in zs. The Hermite sequence is built
/// once; points are checked in parallel when threads > 1.
std::vector<GfPoint> gf_grid(int n_max, const std::vector<BigRat>& zs, int threads = 1);

}  // namespace hmom

#endif  // HMOM_SERIES_ANALYSIS_HPP
