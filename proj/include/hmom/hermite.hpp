#ifndef HMOM_HERMITE_HPP
#define HMOM_HERMITE_HPP

#include <vector>

#include "hmom/polynomial.hpp"

namespace hmom {

/// Monic (probabilists') Hermite polynomial H_n together with its conjugate
/// Hhat_n(z) = z^n H_n(1/z). H_n is monic of degree n; Hhat_n is an even
/// polynomial with Hhat_n(0) = 1.
struct HermitePair {
    int n = 0;
    ExactPolynomial h;      // H_n, variable 'x'
    ExactPolynomial h_hat;  // Hhat_n, variable 'z'
};

/// H_0 = 1, H_1 = x, H_{n+1} = x H_n - n H_{n-1}.
HermitePair hermite_monic(int n);

/// All pairs H_0..H_nmax in one pass of the recursion.
std::vector<HermitePair> hermite_sequence(int n_max);

/// Closed-form coefficient a^(n)_{n-k} of x^{n-k} in H_n:
/// (-1)^(k/2) * binom(n,k) * k! / ((k/2)! 2^(k/2)) for even k, 0 for odd k.
BigInt hermite_coeff_closed(int n, int k);

/// Checks the conjugate recursion Hhat_{n+1} = Hhat_n - n x^2 Hhat_{n-1} and
/// the derivative identity x Hhat_n' = n (Hhat_n - Hhat_{n-1}) as exact
/// polynomial identities.
bool conjugate_recursion_check(int n);

/// Number of k-edge matchings of the complete graph K_n: binom(n,2k)(2k-1)!!.
/// Equals |a^(n)_{n-2k}|.
BigInt matching_count_complete(int n, int k);

}  // namespace hmom

#endif  // HMOM_HERMITE_HPP
