#include "hmom/hermite.hpp"

namespace hmom {

namespace {

ExactPolynomial make_pair_hat(const ExactPolynomial& h, int n) { return conjugate(h, n).with_var('z'); }

}  // namespace

std::vector<HermitePair> hermite_sequence(int n_max) {
    if (n_max < 0) throw usage_error("hermite_sequence: negative degree");
    std::vector<HermitePair> out;
    out.reserve(n_max + 1);
    ExactPolynomial prev;  // H_{n-1}
    ExactPolynomial cur = ExactPolynomial::constant(BigInt(1), 'x');
    const ExactPolynomial x = ExactPolynomial::monomial(1, BigInt(1), 'x');
    for (int n = 0; n <= n_max; ++n) {
        out.push_back({n, cur, make_pair_hat(cur, n)});
        ExactPolynomial next = x * cur;
        if (n >= 1) next -= prev * BigInt(n);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

HermitePair hermite_monic(int n) {
    if (n < 0) throw usage_error("hermite_monic: negative degree");
    auto seq = hermite_sequence(n);
    return std::move(seq.back());
}

BigInt hermite_coeff_closed(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw usage_error("hermite_coeff_closed: need 0 <= k <= n");
    if (k % 2 != 0) return 0;
    const int half = k / 2;
    BigInt value = binomial(n, k) * factorial(k);
    value /= factorial(half) * pow2(half);
    return (half % 2 == 0) ? value : -value;
}

bool conjugate_recursion_check(int n) {
    if (n < 1) throw usage_error("conjugate_recursion_check: need n >= 1");
    const auto seq = hermite_sequence(n + 1);
    const ExactPolynomial x2 = ExactPolynomial::monomial(2, BigInt(1), 'z');
    const ExactPolynomial& lo = seq[n - 1].h_hat;
    const ExactPolynomial& mid = seq[n].h_hat;
    const ExactPolynomial& hi = seq[n + 1].h_hat;
    if (hi != mid - x2 * lo * BigInt(n)) return false;
    // x Hhat_n'(x) = n (Hhat_n - Hhat_{n-1})
    const ExactPolynomial lhs = ExactPolynomial::monomial(1, BigInt(1), 'z') * mid.derivative();
    const ExactPolynomial rhs = (mid - lo) * BigInt(n);
    return lhs == rhs;
}

BigInt matching_count_complete(int n, int k) {
    if (n < 0 || k < 0 || 2 * k > n) throw usage_error("matching_count_complete: need 0 <= 2k <= n");
    return binomial(n, 2 * k) * odd_double_factorial(k);
}

}  // namespace hmom
