#ifndef HMOM_AKL_HPP
#define HMOM_AKL_HPP

#include "hmom/polynomial.hpp"

namespace hmom {

/// Falling factorial (x)_l = x(x-1)...(x-l+1), with (x)_0 = 1.
ExactPolynomial falling_factorial(int l);

/// Product (x-o)(x-o-1)...(x-o-len+1): a falling factorial started at x-o.
ExactPolynomial falling_factorial_from(int offset, int len);

/// The determinant-derived family A(k,l) via the recursion
///   A(k,l) = sum_{i=1..l+1} A(k-1,i) (x-i)_{l-i+1}
/// with bases A(1,l) = (x)_{l+1}, A(0,1) = x, A(0,l) = 0 for l >= 2.
/// Memoized; deg A(k,l) = k+l for k,l >= 1, and M_n(2k) = A(k,1) at x = n.
ExactPolynomial akl_poly(int k, int l);

/// Closed form A(2,l) = (x)_{l+1}/2 * ((2l+2)x - (l+1)(l+2)).
ExactPolynomial akl_a2l_closed(int l);

}  // namespace hmom

#endif  // HMOM_AKL_HPP
