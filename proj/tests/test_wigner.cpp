#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hmom/hermite.hpp"
#include "hmom/spectra.hpp"
#include "hmom/wigner.hpp"

using namespace hmom;

namespace {

EnsembleConfig config(int n, EntryLaw law, double c, long samples, std::uint64_t seed) {
    EnsembleConfig cfg;
    cfg.n = n;
    cfg.dist = law;
    cfg.c = c;
    cfg.samples = samples;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("sampling is symmetric, deterministic and law-abiding") {
    const auto cfg = config(6, EntryLaw::rademacher, 1.0, 1, 42);
    const DenseMatrix a = sample_matrix(cfg, 0);
    const DenseMatrix b = sample_matrix(cfg, 0);
    const DenseMatrix c = sample_matrix(cfg, 1);
    CHECK(a == b);
    CHECK(a != c);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            CHECK(a[i][j] == a[j][i]);
            CHECK(std::fabs(a[i][j]) == 1.0);
        }
}

TEST_CASE("gaussian entries have the configured variance") {
    const auto cfg = config(2, EntryLaw::gaussian, 2.0, 1, 99);
    double sum = 0.0, sum2 = 0.0;
    const long draws = 100000;
    for (long s = 0; s < draws; ++s) {
        const double v = sample_matrix(cfg, static_cast<std::uint64_t>(s))[0][1];
        sum += v;
        sum2 += v * v;
    }
    const double mean = sum / draws;
    const double var = sum2 / draws - mean * mean;
    CHECK(var >= 3.9);
    CHECK(var <= 4.1);
    CHECK(std::fabs(mean) <= 0.05);
}

TEST_CASE("characteristic polynomial basics") {
    const auto swap2 = char_poly({{0, 1}, {1, 0}});
    CHECK(swap2 == std::vector<double>{-1, 0, 1});
    const auto ones = char_poly({{1, 1}, {1, 1}});
    CHECK(ones == std::vector<double>{0, -2, 1});
    const auto zero3 = char_poly({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    CHECK(zero3 == std::vector<double>{0, 0, 0, 1});
    CHECK_THROWS_AS(char_poly({{1, 2, 3}}), usage_error);
}

TEST_CASE("exact characteristic polynomial vs eigenvalue expansion") {
    std::mt19937 gen(5);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int n : {2, 5, 12, 20}) {
        std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
        std::vector<std::vector<double>> ad(n, std::vector<double>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const int v = entry(gen);
                a[i][j] = a[j][i] = v;
                ad[i][j] = ad[j][i] = v;
            }
        const auto exact = char_poly_exact(a);
        CHECK(exact[n] == 1);

        // expand prod (x - eig) from the numerical eigensolver
        const auto eig = symmetric_eigenvalues(ad);
        std::vector<double> prod{1.0};
        for (double lam : eig) {
            std::vector<double> next(prod.size() + 1, 0.0);
            for (std::size_t i = 0; i < prod.size(); ++i) {
                next[i + 1] += prod[i];
                next[i] -= lam * prod[i];
            }
            prod = std::move(next);
        }
        for (int k = 0; k <= n; ++k) {
            const double want = to_double(exact[k]);
            CHECK(std::fabs(prod[k] - want) <= 1e-8 * std::max(1.0, std::fabs(want)));
        }
    }
}

TEST_CASE("float and exact characteristic polynomials agree on integer input") {
    std::mt19937 gen(17);
    std::uniform_int_distribution<int> entry(-2, 2);
    const int n = 6;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    DenseMatrix ad(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const int v = entry(gen);
            a[i][j] = a[j][i] = v;
            ad[i][j] = ad[j][i] = v;
        }
    const auto exact = char_poly_exact(a);
    const auto fl = char_poly(ad);
    for (int k = 0; k <= n; ++k) CHECK(fl[k] == doctest::Approx(to_double(exact[k])).epsilon(1e-10));
}

TEST_CASE("enumerated expectation equals the Hermite polynomial") {
    for (int n = 1; n <= 4; ++n) {
        const auto avg = exact_expected_charpoly(n);
        const ExactPolynomial h = hermite_monic(n).h;
        for (int k = 0; k <= n; ++k) CHECK(avg[k] == h.coeff(k));
    }
    CHECK_THROWS_AS(exact_expected_charpoly(0), usage_error);
    CHECK_THROWS_AS(exact_expected_charpoly(6), usage_error);
}

TEST_CASE("Monte Carlo targets scale as c^(n-k) a_k") {
    const ExactPolynomial h = hermite_monic(3).h;
    for (double c : {0.5, 2.0}) {
        const auto stats = mc_expected_charpoly(config(3, EntryLaw::gaussian, c, 1, 1));
        for (int k = 0; k <= 3; ++k)
            CHECK(stats.coeffs[k].target == doctest::Approx(to_double(h.coeff(k)) * std::pow(c, 3 - k)));
    }
}

TEST_CASE("Monte Carlo means land near the targets") {
    const auto stats = mc_expected_charpoly(config(3, EntryLaw::rademacher, 1.0, 5000, 11), 2);
    CHECK(stats.samples == 5000);
    for (const auto& cs : stats.coeffs) {
        if (cs.stderr_of_mean == 0.0) {
            CHECK(cs.mean == cs.target);  // monic coefficient
            continue;
        }
        CHECK(std::fabs(cs.mean - cs.target) <= 5.0 * cs.stderr_of_mean);
    }
}

TEST_CASE("worker partitioning only reorders the merge") {
    const auto cfg = config(3, EntryLaw::gaussian, 1.0, 20000, 3);
    const auto one = mc_expected_charpoly(cfg, 1);
    const auto four = mc_expected_charpoly(cfg, 4);
    for (int k = 0; k <= 3; ++k) {
        CHECK(std::fabs(one.coeffs[k].mean - four.coeffs[k].mean) <= 1e-10);
        CHECK(std::fabs(one.coeffs[k].stderr_of_mean - four.coeffs[k].stderr_of_mean) <= 1e-10);
    }
}

TEST_CASE("spectral histogram masses and reference") {
    const auto h = spectrum_histogram(config(60, EntryLaw::gaussian, 1.0, 40, 31), 24, 2);
    REQUIRE(h.masses.size() == 24);
    REQUIRE(h.edges.size() == 25);
    double mass = 0.0, ref = 0.0;
    for (int b = 0; b < 24; ++b) {
        mass += h.masses[b];
        ref += h.reference[b];
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ref == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(h.tv_distance >= 0.0);
    CHECK(h.tv_distance <= 0.2);  // loose: small n, few samples
    CHECK(h.total_eigenvalues == 60l * 40);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(sample_matrix(config(0, EntryLaw::gaussian, 1.0, 1, 1), 0), usage_error);
    CHECK_THROWS_AS(sample_matrix(config(3, EntryLaw::gaussian, 0.0, 1, 1), 0), usage_error);
    CHECK_THROWS_AS(mc_expected_charpoly(config(3, EntryLaw::gaussian, 1.0, 0, 1)), usage_error);
    CHECK_THROWS_AS(entry_law_from_string("cauchy"), usage_error);
    CHECK(entry_law_from_string("rademacher") == EntryLaw::rademacher);
    CHECK(to_string(EntryLaw::gaussian) == "gaussian");
}
