#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hmom/moments.hpp"
#include "hmom/spectra.hpp"

using namespace hmom;

TEST_CASE("small root sets") {
    const RootSet r2 = hermite_roots(2);
    CHECK(r2.roots[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(r2.roots[1] == doctest::Approx(1.0).epsilon(1e-12));

    const RootSet r3 = hermite_roots(3);
    CHECK(r3.roots[0] == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-12));
    CHECK(r3.roots[1] == 0.0);  // snapped exactly
    CHECK(r3.roots[2] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

    const RootSet r4 = hermite_roots(4);
    const double inner = std::sqrt(3.0 - std::sqrt(6.0));
    const double outer = std::sqrt(3.0 + std::sqrt(6.0));
    CHECK(r4.roots[0] == doctest::Approx(-outer).epsilon(1e-12));
    CHECK(r4.roots[1] == doctest::Approx(-inner).epsilon(1e-12));
    CHECK(r4.roots[2] == doctest::Approx(inner).epsilon(1e-12));
    CHECK(r4.roots[3] == doctest::Approx(outer).epsilon(1e-12));

    CHECK_THROWS_AS(hermite_roots(0), usage_error);
}

TEST_CASE("root sets are sorted, symmetric and scaled") {
    for (int n : {1, 2, 5, 17, 50}) {
        const RootSet rs = hermite_roots(n);
        REQUIRE(static_cast<int>(rs.roots.size()) == n);
        const double tol = 1e-10 * 2 * std::sqrt(n + 0.5);
        for (int j = 0; j + 1 < n; ++j) CHECK(rs.roots[j] < rs.roots[j + 1]);
        for (int j = 0; j < n; ++j) {
            CHECK(std::fabs(rs.roots[j] + rs.roots[n - 1 - j]) <= tol);
            CHECK(rs.scaled[j] == rs.roots[j] / (2 * std::sqrt(static_cast<double>(n))));
        }
        if (n % 2 == 1) CHECK(std::fabs(rs.roots[n / 2]) <= tol);
    }
}

TEST_CASE("root bound holds for every n up to 500") {
    for (int n = 1; n <= 500; ++n) {
        const RootSet rs = hermite_roots(n);
        const double bound = 2 * std::sqrt(n + 0.5) + 1e-10;
        CHECK(std::fabs(rs.roots.front()) <= bound);
        CHECK(std::fabs(rs.roots.back()) <= bound);
    }
}

TEST_CASE("numerical power sums tie to the exact oracle") {
    for (int n : {10, 33, 60}) {
        const RootSet rs = hermite_roots(n);
        const auto ps = power_sums_exact(n, n);
        for (int k = 2; k <= n; k += 2) {
            double sum = 0.0;
            for (double r : rs.roots) sum += std::pow(r, k);
            const double exact = to_double(ps[k - 1]);
            CHECK(std::fabs(sum - exact) <= 1e-8 * std::fabs(exact));
        }
    }
}

TEST_CASE("empirical moments") {
    const RootSet r2 = hermite_roots(2);
    CHECK(empirical_moment(r2, 2) == doctest::Approx(0.125).epsilon(1e-14));
    for (int n : {7, 20, 121}) CHECK(std::fabs(empirical_moment(hermite_roots(n), 1)) <= 1e-12);
    // (n^2 - n)/(4 n^2) at n = 400
    CHECK(empirical_moment(hermite_roots(400), 2) == doctest::Approx(0.249375).epsilon(1e-12));
    CHECK(empirical_moment(r2, 0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(empirical_moment(r2, -1), usage_error);
}

TEST_CASE("semicircle moments") {
    CHECK(semicircle_moment(0) == 1);
    CHECK(semicircle_moment(2) == BigRat(1, 4));
    CHECK(semicircle_moment(4) == BigRat(1, 8));
    CHECK(semicircle_moment(5) == 0);
    CHECK(semicircle_moment(6) == BigRat(5, 64));
}

TEST_CASE("semicircle density and cdf") {
    CHECK(semicircle_density(0.0) == doctest::Approx(2.0 / M_PI));
    CHECK(semicircle_density(1.0) == 0.0);
    CHECK(semicircle_density(-2.0) == 0.0);
    CHECK(semicircle_cdf(-1.0) == 0.0);
    CHECK(semicircle_cdf(1.0) == 1.0);
    CHECK(semicircle_cdf(0.0) == doctest::Approx(0.5));
    // midpoint quadrature of the density
    const int bins = 200000;
    double mass = 0.0;
    for (int b = 0; b < bins; ++b) {
        const double x = -1.0 + (b + 0.5) * 2.0 / bins;
        mass += semicircle_density(x) * 2.0 / bins;
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
    // odd moments vanish by symmetry of the density
    double m1 = 0.0;
    for (int b = 0; b < bins; ++b) {
        const double x = -1.0 + (b + 0.5) * 2.0 / bins;
        m1 += x * semicircle_density(x) * 2.0 / bins;
    }
    CHECK(std::fabs(m1) <= 1e-12);
}

TEST_CASE("dense eigensolver agrees with the tridiagonal route") {
    CHECK(symmetric_eigenvalues({{1, 1}, {1, 1}})[0] == doctest::Approx(0.0));
    CHECK(symmetric_eigenvalues({{1, 1}, {1, 1}})[1] == doctest::Approx(2.0));

    const int n = 20;
    std::vector<double> diag(n, 0.0), off(n - 1);
    for (int i = 0; i < n - 1; ++i) off[i] = std::sqrt(i + 1.0);
    std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n - 1; ++i) dense[i][i + 1] = dense[i + 1][i] = off[i];
    const auto a = tridiagonal_eigenvalues(diag, off);
    const auto b = symmetric_eigenvalues(dense);
    for (int i = 0; i < n; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-10));

    CHECK_THROWS_AS(tridiagonal_eigenvalues({1.0, 2.0}, {1.0, 1.0}), usage_error);
    CHECK_THROWS_AS(symmetric_eigenvalues({{1.0, 2.0}}), usage_error);
}
