#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hmom/polynomial.hpp"
#include "hmom/series.hpp"

using namespace hmom;

namespace {

ExactPolynomial poly(std::vector<long> coeffs, char var = 'x') {
    std::vector<BigInt> c(coeffs.begin(), coeffs.end());
    return ExactPolynomial(std::move(c), var);
}

TruncatedSeries series(std::vector<long> coeffs) {
    std::vector<BigRat> c(coeffs.begin(), coeffs.end());
    return TruncatedSeries(std::move(c));
}

ExactPolynomial random_poly(std::mt19937& gen, int max_deg, char var = 'x') {
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-9, 9);
    std::vector<BigInt> c(deg(gen) + 1);
    for (auto& v : c) v = coeff(gen);
    return ExactPolynomial(std::move(c), var);
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    const ExactPolynomial x = ExactPolynomial::monomial(1, BigInt(1));
    CHECK((poly({-1, 0, 1}) * x) == poly({0, -1, 0, 1}));                 // (x^2-1)x = x^3-x
    CHECK(poly({3, 0, -6, 0, 1}).derivative() == poly({0, -12, 0, 4}));  // power rule
    // eval(x^2-x, 4) = 12, the n=4 value of M_n(2) = n^2-n
    CHECK(eval_rational(poly({0, -1, 1}), BigRat(4)) == BigRat(12));
    CHECK(poly({1, 2}) + poly({-1, -2}) == ExactPolynomial::zero());
}

TEST_CASE("zero polynomial conventions") {
    const ExactPolynomial z = ExactPolynomial::zero();
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK_THROWS_AS(z.leading(), usage_error);
    CHECK((z * poly({1, 1})).is_zero());
    CHECK(eval_rational(z, BigRat(5)) == BigRat(0));
}

TEST_CASE("variable tags must match") {
    CHECK_THROWS_AS(poly({1, 1}, 'x') + poly({1, 1}, 'n'), usage_error);
    CHECK_THROWS_AS(poly({1, 1}, 'x') * poly({1, 1}, 'z'), usage_error);
    CHECK(poly({1, 1}, 'x').with_var('n') + poly({1, 1}, 'n') == poly({2, 2}, 'n'));
}

TEST_CASE("conjugate reversal") {
    CHECK(conjugate(poly({-1, 0, 1}), 2) == poly({1, 0, -1}));  // H_2 -> 1 - z^2
    CHECK(conjugate(poly({0, -3, 0, 1}), 3) == poly({1, 0, -3}));
    CHECK(conjugate(poly({0, 1}), 1) == poly({1}));  // Hhat_1 = 1
    CHECK_THROWS_AS(conjugate(poly({1, 1, 1}), 1), usage_error);
}

TEST_CASE("conjugate is an involution away from vanishing end coefficients") {
    std::mt19937 gen(7);
    int done = 0;
    while (done < 50) {
        ExactPolynomial p = random_poly(gen, 8);
        if (p.is_zero() || p.coeff(0) == 0) continue;
        ++done;
        CHECK(conjugate(conjugate(p, p.degree()), p.degree()) == p);
    }
}

TEST_CASE("ring properties on random polynomials") {
    std::mt19937 gen(11);
    for (int it = 0; it < 100; ++it) {
        const ExactPolynomial p = random_poly(gen, 6);
        const ExactPolynomial q = random_poly(gen, 6);
        const ExactPolynomial r = random_poly(gen, 6);
        CHECK((p + q) * r == p * r + q * r);
        if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("to_integer guards integrality") {
    RatPolynomial half = RatPolynomial({BigRat(1, 2)}, 'x');
    CHECK_THROWS_AS(to_integer(half), consistency_error);
    CHECK(to_integer(to_rational(poly({4, -2, 7}))) == poly({4, -2, 7}));
}

TEST_CASE("series division: geometric series") {
    TruncatedSeries one = TruncatedSeries::one(3);
    TruncatedSeries den = series({1, -1, 0, 0});
    CHECK(series_div(one, den) == series({1, 1, 1, 1}));
}

TEST_CASE("series division keeps the truncation order honest") {
    // (2z^2)/(1-z^2) to order 4 is 2z^2 + 2z^4
    TruncatedSeries num = series({0, 0, 2, 0, 0});
    TruncatedSeries den = series({1, 0, -1, 0, 0});
    CHECK(series_div(num, den) == series({0, 0, 2, 0, 2}));
    CHECK_THROWS_AS(series_div(num, TruncatedSeries::one(3)), usage_error);
}

TEST_CASE("series route to the n=2 moment generating function") {
    // -z d/dz(1-z^2)/(1-z^2) + 2 = 2 + 2z^2 + 2z^4: the roots of H_2 are +-1
    const ExactPolynomial h2hat = poly({1, 0, -1}, 'z');
    const ExactPolynomial z = ExactPolynomial::monomial(1, BigInt(1), 'z');
    TruncatedSeries num = TruncatedSeries::from_polynomial(-(z * h2hat.derivative()), 4);
    TruncatedSeries result = series_div(num, TruncatedSeries::from_polynomial(h2hat, 4));
    result.set_coeff(0, result.coeff(0) + 2);
    CHECK(result == series({2, 0, 2, 0, 2}));
}

TEST_CASE("series division errors on zero constant term") {
    TruncatedSeries num = TruncatedSeries::one(4);
    TruncatedSeries den(4);
    den.set_coeff(1, BigRat(1));
    CHECK_THROWS_AS(series_div(num, den), numeric_error);
}

TEST_CASE("series_div inverts multiplication") {
    std::mt19937 gen(23);
    std::uniform_int_distribution<int> coeff(-6, 6), nz(1, 6);
    for (int it = 0; it < 50; ++it) {
        const int K = 8;
        TruncatedSeries s(K), b(K);
        for (int j = 0; j <= K; ++j) {
            s.set_coeff(j, BigRat(coeff(gen), nz(gen)));
            b.set_coeff(j, BigRat(coeff(gen), nz(gen)));
        }
        b.set_coeff(0, BigRat(nz(gen)));  // unit constant term
        CHECK(series_div(s * b, b) == s);
    }
}

TEST_CASE("rationals stay normalized") {
    CHECK(rat(BigInt(6), BigInt(-4)) == BigRat(-3, 2));
    CHECK(boost::multiprecision::denominator(rat(BigInt(6), BigInt(-4))) == 2);
    CHECK_THROWS_AS(rat(BigInt(1), BigInt(0)), usage_error);
    CHECK(to_string(BigRat(-3, 2)) == "-3/2");
    CHECK(to_string(BigRat(8, 4)) == "2");
}
