#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "hmom/hermite.hpp"

using namespace hmom;

namespace {

ExactPolynomial poly(std::vector<long> coeffs, char var = 'x') {
    std::vector<BigInt> c(coeffs.begin(), coeffs.end());
    return ExactPolynomial(std::move(c), var);
}

/// Brute-force oracle: number of matchings with exactly k edges on the
/// vertex set `mask` of a complete graph, by recursive pairing of the
/// lowest vertex.
long count_matchings(unsigned mask, int k) {
    if (k == 0) return 1;
    if (mask == 0) return 0;
    const int v = std::countr_zero(mask);
    const unsigned rest = mask & ~(1u << v);
    long total = count_matchings(rest, k);  // v stays unmatched
    for (unsigned m = rest; m != 0; m &= m - 1) {
        const int u = std::countr_zero(m);
        total += count_matchings(rest & ~(1u << u), k - 1);
    }
    return total;
}

}  // namespace

TEST_CASE("small Hermite polynomials") {
    CHECK(hermite_monic(0).h == poly({1}));
    CHECK(hermite_monic(1).h == poly({0, 1}));
    CHECK(hermite_monic(2).h == poly({-1, 0, 1}));
    CHECK(hermite_monic(3).h == poly({0, -3, 0, 1}));      // x(x^2-1) - 2x
    CHECK(hermite_monic(4).h == poly({3, 0, -6, 0, 1}));   // x(x^3-3x) - 3(x^2-1)
    CHECK(hermite_monic(1).h_hat == poly({1}, 'z'));
    CHECK(hermite_monic(2).h_hat == poly({1, 0, -1}, 'z'));
    CHECK_THROWS_AS(hermite_monic(-1), usage_error);
}

TEST_CASE("closed-form coefficients") {
    CHECK(hermite_coeff_closed(4, 2) == -6);
    CHECK(hermite_coeff_closed(5, 3) == 0);
    CHECK(hermite_coeff_closed(2, 2) == -1);
    CHECK(hermite_coeff_closed(0, 0) == 1);
    CHECK_THROWS_AS(hermite_coeff_closed(3, 4), usage_error);
}

TEST_CASE("recursion and closed form agree up to n = 40") {
    const auto seq = hermite_sequence(40);
    for (int n = 0; n <= 40; ++n)
        for (int k = 0; k <= n; ++k) CHECK(seq[n].h.coeff(n - k) == hermite_coeff_closed(n, k));
}

TEST_CASE("conjugate structure of Hhat_n") {
    const auto seq = hermite_sequence(40);
    for (int n = 0; n <= 40; ++n) {
        const ExactPolynomial& hat = seq[n].h_hat;
        CHECK(hat.coeff(0) == 1);
        for (int j = 1; j <= hat.degree(); j += 2) CHECK(hat.coeff(j) == 0);
        for (int j = 0; j <= n; ++j) CHECK(hat.coeff(j) == seq[n].h.coeff(n - j));
        CHECK(seq[n].h.leading() == 1);
        CHECK(seq[n].h.degree() == n);
    }
}

TEST_CASE("conjugate recursions hold as polynomial identities") {
    CHECK(conjugate_recursion_check(1));
    CHECK(conjugate_recursion_check(3));
    CHECK(conjugate_recursion_check(10));
    for (int n = 1; n <= 20; ++n) CHECK(conjugate_recursion_check(n));
    CHECK_THROWS_AS(conjugate_recursion_check(0), usage_error);
}

TEST_CASE("matching counts of the complete graph") {
    CHECK(matching_count_complete(4, 1) == 6);   // edges of K_4
    CHECK(matching_count_complete(4, 2) == 3);   // perfect matchings of K_4
    CHECK(matching_count_complete(6, 3) == 15);  // checked against the enumeration below
    CHECK(matching_count_complete(5, 0) == 1);
    CHECK_THROWS_AS(matching_count_complete(4, 3), usage_error);
}

TEST_CASE("matching counts vs brute-force enumeration") {
    for (int n = 1; n <= 9; ++n)
        for (int k = 0; 2 * k <= n; ++k)
            CHECK(matching_count_complete(n, k) == BigInt(count_matchings((1u << n) - 1, k)));
}

TEST_CASE("Hermite coefficients are signed matching counts") {
    for (int n = 1; n <= 20; ++n)
        for (int k = 0; 2 * k <= n; ++k) {
            const BigInt a = hermite_coeff_closed(n, 2 * k);
            const BigInt m = matching_count_complete(n, k);
            CHECK((k % 2 == 0 ? a : -a) == m);
        }
}
