#include "hmom/moments.hpp"

#include <cstdint>
#include <map>

#include "hmom/hermite.hpp"

namespace hmom {

std::vector<BigInt> power_sums_exact(int n, int kmax) {
    if (n < 1 || kmax < 1) throw usage_error("power_sums_exact: need n >= 1 and kmax >= 1");
    if (kmax > n) throw usage_error("power_sums_exact: the Newton-identity form used requires kmax <= n");
    const ExactPolynomial h = hermite_monic(n).h;
    // m[k] satisfies sum_{j=0..k} m[k-j] b_{n-j} = (n-k) b_{n-k}, m[0] = n.
    std::vector<BigInt> m(kmax + 1);
    m[0] = n;
    for (int k = 1; k <= kmax; ++k) {
        BigInt acc = h.coeff(n - k) * BigInt(n - k);
        for (int j = 1; j <= k; ++j) acc -= h.coeff(n - j) * m[k - j];
        m[k] = std::move(acc);
    }
    return {m.begin() + 1, m.end()};
}

namespace {

/// Exact Lagrange interpolation through integer nodes (xs[i], ys[i]).
RatPolynomial lagrange_interpolate(const std::vector<int>& xs, const std::vector<BigInt>& ys) {
    const std::size_t m = xs.size();
    RatPolynomial acc('n');
    for (std::size_t i = 0; i < m; ++i) {
        RatPolynomial basis = RatPolynomial::constant(BigRat(ys[i]), 'n');
        BigInt denom = 1;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            basis *= RatPolynomial({BigRat(-xs[j]), BigRat(1)}, 'n');
            denom *= xs[i] - xs[j];
        }
        basis *= rat(BigInt(1), denom);
        acc += basis;
    }
    return acc;
}

/// a^(n)_{n-2m} as a polynomial in n: (-1)^m (n)_{2m} / (2^m m!).
RatPolynomial hermite_coeff_poly(int m) {
    RatPolynomial p = RatPolynomial::constant(BigRat(1), 'n');
    for (int j = 0; j < 2 * m; ++j) p *= RatPolynomial({BigRat(-j), BigRat(1)}, 'n');
    p *= BigRat(BigInt(m % 2 == 0 ? 1 : -1), pow2(m) * factorial(m));
    return p;
}

/// Determinant by cofactor expansion along the leftmost remaining column,
/// memoized on the bitmask of remaining rows (the column is implied by the
/// number of rows already consumed).
class CofactorDet {
   public:
    explicit CofactorDet(std::vector<std::vector<RatPolynomial>> m) : m_(std::move(m)), k_(static_cast<int>(m_.size())) {}

    RatPolynomial run() { return det((std::uint32_t(1) << k_) - 1); }

   private:
    RatPolynomial det(std::uint32_t rows) {
        if (rows == 0) return RatPolynomial::constant(BigRat(1), 'n');
        if (auto it = memo_.find(rows); it != memo_.end()) return it->second;
        const int col = k_ - __builtin_popcount(rows);
        RatPolynomial acc('n');
        int parity = 0;
        for (int r = 0; r < k_; ++r) {
            if (!(rows & (std::uint32_t(1) << r))) continue;
            const RatPolynomial& entry = m_[r][col];
            if (!entry.is_zero()) {
                RatPolynomial term = entry * det(rows & ~(std::uint32_t(1) << r));
                if (parity % 2 == 1) term = -term;
                acc += term;
            }
            ++parity;
        }
        memo_.emplace(rows, acc);
        return acc;
    }

    std::vector<std::vector<RatPolynomial>> m_;
    int k_;
    std::map<std::uint32_t, RatPolynomial> memo_;
};

}  // namespace

MomentPolynomial moment_polynomial(int k) {
    if (k < 1) throw usage_error("moment_polynomial: need k >= 1");
    // Nodes start at n = 2k so the kmax <= n hypothesis holds at every node.
    std::vector<int> xs(k + 2);
    std::vector<BigInt> ys(k + 2);
    for (int i = 0; i < k + 2; ++i) {
        xs[i] = 2 * k + i;
        ys[i] = power_sums_exact(xs[i], 2 * k)[2 * k - 1];
    }
    ExactPolynomial poly = to_integer(lagrange_interpolate(xs, ys));
    if (poly.degree() != k + 1)
        throw consistency_error("moment_polynomial: interpolant has degree " + std::to_string(poly.degree()) +
                                ", expected " + std::to_string(k + 1));
    return {k, poly, poly.coeff(k + 1), poly.coeff(k)};
}

ExactPolynomial moment_determinant(int k) {
    if (k < 1) throw usage_error("moment_determinant: need k >= 1");
    if (k > 16) throw usage_error("moment_determinant: cofactor route is sized for k <= 16; use the interpolation route");
    std::vector<RatPolynomial> a(k + 1);  // a[m] = a^(n)_{n-2m}
    for (int m = 0; m <= k; ++m) a[m] = hermite_coeff_poly(m);
    std::vector<std::vector<RatPolynomial>> mat(k, std::vector<RatPolynomial>(k, RatPolynomial('n')));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k - 1; ++j)
            if (i >= j) mat[i][j] = a[i - j];
        mat[i][k - 1] = a[i + 1] * BigRat(-2 * (i + 1));
    }
    return to_integer(CofactorDet(std::move(mat)).run());
}

std::pair<BigInt, BigInt> coefficient_targets(int k) {
    if (k < 1) throw usage_error("coefficient_targets: need k >= 1");
    return {catalan(k), -(pow2(2 * k - 1) - binomial(2 * k - 1, k))};
}

}  // namespace hmom
