#ifndef HMOM_EXACT_HPP
#define HMOM_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hmom {

// Arbitrary-precision scalars. cpp_rational keeps (num, den) reduced with
// den > 0 after every operation.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Caller passed arguments outside an operation's contract.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A numerical routine failed to converge or left its domain.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check (integrality, degree, route equality) failed.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigInt factorial(int n) {
    if (n < 0) throw usage_error("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

// (2k-1)!! with the empty-product convention (-1)!! = 1.
inline BigInt odd_double_factorial(int k) {
    if (k < 0) throw usage_error("odd_double_factorial: negative k");
    BigInt r = 1;
    for (int i = 3; i <= 2 * k - 1; i += 2) r *= i;
    return r;
}

inline BigInt catalan(int k) {
    if (k < 0) throw usage_error("catalan: negative index");
    return binomial(2 * k, k) / (k + 1);
}

inline BigInt pow2(int e) {
    if (e < 0) throw usage_error("pow2: negative exponent");
    return BigInt(1) << e;
}

// cpp_rational's two-argument constructor insists on a positive denominator;
// this normalizes the sign first.
inline BigRat rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw usage_error("rat: zero denominator");
    if (den < 0) return BigRat(-num, -den);
    return BigRat(num, den);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// "p/q" (or "p" when q == 1).
inline std::string to_string(const BigRat& v) {
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const BigRat& v) { return v.convert_to<double>(); }

}  // namespace hmom

#endif  // HMOM_EXACT_HPP
