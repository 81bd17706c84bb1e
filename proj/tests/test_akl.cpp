#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hmom/akl.hpp"

using namespace hmom;

namespace {

ExactPolynomial xpoly(std::vector<long> coeffs) {
    std::vector<BigInt> c(coeffs.begin(), coeffs.end());
    return ExactPolynomial(std::move(c), 'x');
}

}  // namespace

TEST_CASE("falling factorials") {
    CHECK(falling_factorial(0) == xpoly({1}));
    CHECK(falling_factorial(2) == xpoly({0, -1, 1}));
    CHECK(falling_factorial(3) == xpoly({0, 2, -3, 1}));
    CHECK(falling_factorial_from(1, 1) == xpoly({-1, 1}));  // x - 1
    CHECK_THROWS_AS(falling_factorial(-1), usage_error);
}

TEST_CASE("A(k,l) base cases") {
    CHECK(akl_poly(0, 1) == xpoly({0, 1}));
    CHECK(akl_poly(0, 2).is_zero());
    CHECK(akl_poly(1, 1) == falling_factorial(2));
    for (int l = 1; l <= 8; ++l) CHECK(akl_poly(1, l) == falling_factorial(l + 1));
    CHECK_THROWS_AS(akl_poly(1, 0), usage_error);
    CHECK_THROWS_AS(akl_poly(-1, 1), usage_error);
}

TEST_CASE("A(2,1) matches the n=4 moment polynomial") { CHECK(akl_poly(2, 1) == xpoly({0, 3, -5, 2})); }

TEST_CASE("A(2,l) closed form") {
    CHECK(akl_a2l_closed(1) == xpoly({0, 3, -5, 2}));
    // (x(x-1)(x-2)/2)(6x-12) = 3x(x-1)(x-2)^2 = 3x^4 - 15x^3 + 24x^2 - 12x
    CHECK(akl_a2l_closed(2) == xpoly({0, -12, 24, -15, 3}));
    for (int l = 1; l <= 8; ++l) CHECK(akl_a2l_closed(l) == akl_poly(2, l));
    CHECK_THROWS_AS(akl_a2l_closed(0), usage_error);
}

TEST_CASE("A(2,l) alternative sum") {
    for (int l = 1; l <= 8; ++l) {
        ExactPolynomial sum('x');
        for (int i = 1; i <= l + 1; ++i) sum += falling_factorial(i + 1) * falling_factorial_from(i, l - i + 1);
        CHECK(sum == akl_poly(2, l));
    }
}

TEST_CASE("degree law and positive leading coefficients") {
    for (int k = 1; k <= 8; ++k)
        for (int l = 1; l <= 8; ++l) {
            const ExactPolynomial a = akl_poly(k, l);
            CHECK(a.degree() == k + l);
            CHECK(a.leading() > 0);
        }
}
