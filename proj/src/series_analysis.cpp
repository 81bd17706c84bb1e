#include "hmom/series_analysis.hpp"

#include <atomic>
#include <thread>

namespace hmom {

ExactPolynomial even_part(const ExactPolynomial& h_hat) {
    std::vector<BigInt> out((h_hat.degree() / 2) + 1);
    for (int j = 0; j <= h_hat.degree(); ++j) {
        if (j % 2 == 0)
            out[j / 2] = h_hat.coeff(j);
        else if (h_hat.coeff(j) != 0)
            throw usage_error("even_part: polynomial has an odd-degree term");
    }
    return ExactPolynomial(std::move(out), 't');
}

EvenRatio EvenRatio::make(const HermitePair& lower, const HermitePair& upper) {
    if (upper.n != lower.n + 1) throw usage_error("EvenRatio: pair degrees must be consecutive");
    return {upper.n, even_part(lower.h_hat), even_part(upper.h_hat)};
}

EvenRatio EvenRatio::make(int n) {
    if (n < 1) throw usage_error("EvenRatio: need n >= 1");
    const auto seq = hermite_sequence(n);
    return make(seq[n - 1], seq[n]);
}

BigRat EvenRatio::value_at_t(const BigRat& t) const {
    const BigRat den = eval_rational(denom, t);
    if (den <= 0) throw numeric_error("EvenRatio: denominator not positive at t = " + to_string(t));
    return eval_rational(numer, t) / den;
}

TruncatedSeries catalan_series(int K) {
    if (K < 0) throw usage_error("catalan_series: negative order");
    // C_{k+1} = sum_{i=0..k} C_i C_{k-i}
    std::vector<BigRat> c(K + 1);
    c[0] = 1;
    for (int k = 0; k < K; ++k) {
        BigRat acc = 0;
        for (int i = 0; i <= k; ++i) acc += c[i] * c[k - i];
        c[k + 1] = std::move(acc);
    }
    return TruncatedSeries(std::move(c));
}

// The generating-function identity holds as a formal series to any order, so
// K may exceed n; comparisons against the Newton identities are only made on
// k <= n.
TruncatedSeries moment_series(int n, int K) {
    if (n < 1) throw usage_error("moment_series: need n >= 1");
    if (K < 0) throw usage_error("moment_series: need K >= 0");
    const ExactPolynomial h_hat = hermite_monic(n).h_hat;
    const ExactPolynomial z = ExactPolynomial::monomial(1, BigInt(1), 'z');
    const TruncatedSeries num = TruncatedSeries::from_polynomial(-(z * h_hat.derivative()), K);
    const TruncatedSeries den = TruncatedSeries::from_polynomial(h_hat, K);
    TruncatedSeries m = series_div(num, den);
    m.set_coeff(0, m.coeff(0) + n);
    return m;
}

namespace {

BigRat f_from_even(const EvenRatio& r, const BigRat& z) {
    if (z < 0 || z > BigRat(1, 3)) throw usage_error("f_n: need 0 <= z <= 1/3");
    return r.value_at_t(z * z / r.n);
}

}  // namespace

BigRat f_n_eval(int n, const BigRat& z) { return f_from_even(EvenRatio::make(n), z); }

BigRat fixed_point_residual(int n, const BigRat& z) {
    if (n < 2) throw usage_error("fixed_point_residual: need n >= 2");
    if (z < 0 || z > BigRat(1, 3)) throw usage_error("fixed_point_residual: need 0 <= z <= 1/3");
    const auto seq = hermite_sequence(n);
    // Both ratios live at the same t = z^2/n: the inner argument of f_{n-1}
    // enters only through its square (n-1) z^2 / n, and dividing by n-1
    // brings it back to t.
    const BigRat t = z * z / n;
    const BigRat f_n = EvenRatio::make(seq[n - 1], seq[n]).value_at_t(t);
    const BigRat f_lower = EvenRatio::make(seq[n - 2], seq[n - 1]).value_at_t(t);
    return f_n - BigRat(n - 1, n) * z * z * f_n * f_lower - 1;
}

bool le_catalan_value(const BigRat& r, const BigRat& y) {
    if (y <= 0 || y > BigRat(1, 9)) throw usage_error("le_catalan_value: need 0 < y <= 1/9");
    const BigRat lhs = 1 - 2 * y * r;
    return lhs >= 0 && lhs * lhs >= 1 - 4 * y;
}

bool bound_check(int n, const BigRat& z) {
    if (z <= 0) throw usage_error("bound_check: need z > 0");
    const BigRat f = f_n_eval(n, z);
    return f * z * z <= 1 && le_catalan_value(f, z * z);
}

TruncatedSeries second_coeff_series(int K) {
    if (K < 1) throw usage_error("second_coeff_series: need K >= 1");
    const TruncatedSeries num = -(catalan_series(K).shift_up());
    TruncatedSeries den(K);
    den.set_coeff(0, BigRat(1));
    den.set_coeff(1, BigRat(-4));
    return series_div(num, den);
}

std::vector<GfPoint> gf_grid(int n_max, const std::vector<BigRat>& zs, int threads) {
    if (n_max < 1) throw usage_error("gf_grid: need n_max >= 1");
    for (const auto& z : zs)
        if (z <= 0 || z > BigRat(1, 3)) throw usage_error("gf_grid: grid values must lie in (0, 1/3]");
    const auto seq = hermite_sequence(n_max);
    std::vector<ExactPolynomial> evens(n_max + 1);
    for (int m = 0; m <= n_max; ++m) evens[m] = even_part(seq[m].h_hat);

    const auto positive_value = [&](int m, const BigRat& t) {
        const BigRat v = eval_rational(evens[m], t);
        if (v <= 0) throw numeric_error("gf_grid: conjugate polynomial not positive at t = " + to_string(t));
        return v;
    };

    std::vector<GfPoint> out(static_cast<std::size_t>(n_max) * zs.size());
    const auto eval_point = [&](int n, const BigRat& z, GfPoint& p) {
        const BigRat t = z * z / n;
        const BigRat f = positive_value(n - 1, t) / positive_value(n, t);
        p.n = n;
        p.z = z;
        p.f = f;
        p.bound_ok = f * z * z <= 1 && le_catalan_value(f, z * z);
        if (n >= 2) {
            const BigRat f_lower = positive_value(n - 2, t) / positive_value(n - 1, t);
            p.residual_zero = (f - BigRat(n - 1, n) * z * z * f * f_lower - 1) == 0;
        } else {
            p.residual_zero = f == 1;  // f_1 = 1 identically
        }
    };

    const int total = static_cast<int>(out.size());
    const int workers = std::max(1, std::min(threads, total));
    if (workers == 1) {
        for (int idx = 0; idx < total; ++idx)
            eval_point(idx / static_cast<int>(zs.size()) + 1, zs[idx % zs.size()], out[idx]);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1))
                    eval_point(idx / static_cast<int>(zs.size()) + 1, zs[idx % zs.size()], out[idx]);
            });
        for (auto& th : pool) th.join();
    }
    return out;
}

}  // namespace hmom
