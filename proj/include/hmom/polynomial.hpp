#ifndef HMOM_POLYNOMIAL_HPP
#define HMOM_POLYNOMIAL_HPP

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

#include "hmom/exact.hpp"

namespace hmom {

/// Dense univariate polynomial over an exact coefficient ring.
///
/// coeffs()[i] is the coefficient of var^i. The zero polynomial is the empty
/// coefficient list; its degree is the sentinel -1 (standing in for -inf), so
/// deg(p*q) == deg p + deg q only holds for nonzero factors. The variable tag
/// is carried along and binary operations refuse to mix tags.
template <typename T>
class DensePoly {
   public:
    DensePoly() = default;
    explicit DensePoly(char var) : var_(var) {}
    DensePoly(std::vector<T> coeffs, char var = 'x') : coeffs_(std::move(coeffs)), var_(var) { prune(); }

    static DensePoly zero(char var = 'x') { return DensePoly(var); }
    static DensePoly constant(T c, char var = 'x') { return DensePoly(std::vector<T>{std::move(c)}, var); }
    static DensePoly monomial(int deg, T c, char var = 'x') {
        if (deg < 0) throw usage_error("monomial: negative degree");
        std::vector<T> v(deg + 1, T(0));
        v[deg] = std::move(c);
        return DensePoly(std::move(v), var);
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    char var() const { return var_; }
    const std::vector<T>& coeffs() const { return coeffs_; }

    T coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return T(0);
        return coeffs_[i];
    }

    const T& leading() const {
        if (is_zero()) throw usage_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    DensePoly with_var(char var) const {
        DensePoly r = *this;
        r.var_ = var;
        return r;
    }

    DensePoly& operator+=(const DensePoly& rhs) {
        check_var(rhs);
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        prune();
        return *this;
    }

    DensePoly& operator-=(const DensePoly& rhs) {
        check_var(rhs);
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        prune();
        return *this;
    }

    DensePoly& operator*=(const DensePoly& rhs) {
        check_var(rhs);
        if (is_zero() || rhs.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        std::vector<T> out(coeffs_.size() + rhs.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        coeffs_ = std::move(out);
        prune();
        return *this;
    }

    DensePoly& operator*=(const T& s) {
        for (auto& c : coeffs_) c *= s;
        prune();
        return *this;
    }

    DensePoly operator-() const {
        DensePoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend DensePoly operator+(DensePoly lhs, const DensePoly& rhs) { return lhs += rhs; }
    friend DensePoly operator-(DensePoly lhs, const DensePoly& rhs) { return lhs -= rhs; }
    friend DensePoly operator*(DensePoly lhs, const DensePoly& rhs) { return lhs *= rhs; }
    friend DensePoly operator*(DensePoly lhs, const T& s) { return lhs *= s; }
    friend DensePoly operator*(const T& s, DensePoly rhs) { return rhs *= s; }
    friend bool operator==(const DensePoly& a, const DensePoly& b) {
        return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }

    /// d/dvar: sum j*c_j var^(j-1).
    DensePoly derivative() const {
        if (coeffs_.size() <= 1) return DensePoly(var_);
        std::vector<T> out(coeffs_.size() - 1);
        for (std::size_t j = 1; j < coeffs_.size(); ++j) out[j - 1] = coeffs_[j] * T(static_cast<long>(j));
        return DensePoly(std::move(out), var_);
    }

    /// Horner evaluation in an arbitrary ring R with an R(T) conversion.
    template <typename R>
    R eval(const R& at) const {
        R acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + R(*it);
        return acc;
    }

   private:
    void prune() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    void check_var(const DensePoly& o) const {
        if (var_ != o.var_) throw usage_error(std::string("variable tag mismatch: '") + var_ + "' vs '" + o.var_ + "'");
    }

    std::vector<T> coeffs_;
    char var_ = 'x';
};

using ExactPolynomial = DensePoly<BigInt>;
using RatPolynomial = DensePoly<BigRat>;

/// Coefficient reversal p^(z) = z^n p(1/z) of a polynomial with deg p <= n.
inline ExactPolynomial conjugate(const ExactPolynomial& p, int n) {
    if (n < 0) throw usage_error("conjugate: negative n");
    if (p.degree() > n) throw usage_error("conjugate: deg p exceeds n");
    std::vector<BigInt> out(n + 1);
    for (int j = 0; j <= n; ++j) out[j] = p.coeff(n - j);
    return ExactPolynomial(std::move(out), p.var());
}

inline RatPolynomial to_rational(const ExactPolynomial& p) {
    std::vector<BigRat> out(p.coeffs().begin(), p.coeffs().end());
    return RatPolynomial(std::move(out), p.var());
}

/// Throws consistency_error if any coefficient has a denominator != 1.
inline ExactPolynomial to_integer(const RatPolynomial& p) {
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (boost::multiprecision::denominator(c) != 1)
            throw consistency_error("to_integer: non-integer coefficient " + to_string(c));
        out.push_back(boost::multiprecision::numerator(c));
    }
    return ExactPolynomial(std::move(out), p.var());
}

/// Exact evaluation at a rational point. Clears denominators once instead of
/// normalizing a rational accumulator at every Horner step:
/// p(a/b) = sum_j c_j a^j b^(K-j) / b^K.
inline BigRat eval_rational(const ExactPolynomial& p, const BigRat& at) {
    if (p.is_zero()) return BigRat(0);
    const BigInt a = boost::multiprecision::numerator(at);
    const BigInt b = boost::multiprecision::denominator(at);
    const int deg = p.degree();
    BigInt num = 0;
    BigInt bpow = 1;
    for (int j = deg; j >= 0; --j) {
        num = num * a + p.coeff(j) * bpow;
        if (j > 0) bpow *= b;
    }
    return BigRat(num, bpow);
}

template <typename T>
std::string to_string(const DensePoly<T>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = p.degree(); j >= 0; --j) {
        T c = p.coeff(j);
        if (c == T(0)) continue;
        const bool neg = c < T(0);
        if (!first) os << (neg ? " - " : " + ");
        if (first && neg) os << "-";
        if (neg) c = -c;
        using hmom::to_string;
        if (j == 0 || c != T(1)) os << to_string(c);
        if (j > 0) {
            os << p.var();
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    return os.str();
}

}  // namespace hmom

#endif  // HMOM_POLYNOMIAL_HPP
