#ifndef HMOM_SERIES_HPP
#define HMOM_SERIES_HPP

#include <utility>
#include <vector>

#include "hmom/exact.hpp"
#include "hmom/polynomial.hpp"

namespace hmom {

/// Formal power series over BigRat truncated at a fixed order K: exactly the
/// coefficients of z^0..z^K are stored and arithmetic never changes the
/// order. Mixed-order operands are a usage error.
class TruncatedSeries {
   public:
    explicit TruncatedSeries(int order) : c_(check_order(order) + 1, BigRat(0)) {}
    explicit TruncatedSeries(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw usage_error("series: empty coefficient list");
    }

    static TruncatedSeries one(int order) {
        TruncatedSeries s(order);
        s.c_[0] = 1;
        return s;
    }

    static TruncatedSeries from_polynomial(const ExactPolynomial& p, int order) {
        TruncatedSeries s(order);
        for (int j = 0; j <= order; ++j) s.c_[j] = BigRat(p.coeff(j));
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const BigRat& coeff(int k) const {
        if (k < 0 || k > order()) throw usage_error("series coefficient index out of range");
        return c_[k];
    }

    void set_coeff(int k, BigRat v) {
        if (k < 0 || k > order()) throw usage_error("series coefficient index out of range");
        c_[k] = std::move(v);
    }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
        check_order_match(rhs);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& rhs) {
        check_order_match(rhs);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
        return *this;
    }

    TruncatedSeries& operator*=(const BigRat& s) {
        for (auto& c : c_) c *= s;
        return *this;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries out = *this;
        for (auto& c : out.c_) c = -c;
        return out;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const BigRat& s) { return a *= s; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order_match(b);
        const int K = a.order();
        TruncatedSeries out(K);
        for (int i = 0; i <= K; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; i + j <= K; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

    /// Multiplication by z; the old top coefficient falls off the truncation.
    TruncatedSeries shift_up() const {
        TruncatedSeries out(order());
        for (int j = 1; j <= order(); ++j) out.c_[j] = c_[j - 1];
        return out;
    }

   private:
    void check_order_match(const TruncatedSeries& o) const {
        if (order() != o.order()) throw usage_error("series order mismatch");
    }
    static int check_order(int order) {
        if (order < 0) throw usage_error("series: negative order");
        return order;
    }

    std::vector<BigRat> c_;
};

/// Power-series long division a/b, requiring b(0) != 0 and equal orders.
inline TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw usage_error("series_div: order mismatch");
    if (b.coeff(0) == 0) throw numeric_error("series_div: divisor has zero constant term");
    const int K = a.order();
    TruncatedSeries q(K);
    for (int k = 0; k <= K; ++k) {
        BigRat acc = a.coeff(k);
        for (int i = 0; i < k; ++i) acc -= q.coeff(i) * b.coeff(k - i);
        q.set_coeff(k, acc / b.coeff(0));
    }
    return q;
}

}  // namespace hmom

#endif  // HMOM_SERIES_HPP
