#include "hmom/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "hmom/akl.hpp"
#include "hmom/hermite.hpp"
#include "hmom/lattice.hpp"
#include "hmom/moments.hpp"
#include "hmom/series_analysis.hpp"
#include "hmom/spectra.hpp"
#include "hmom/wigner.hpp"

namespace hmom {

namespace {

struct Check {
    int id;
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&, int)> run;  // (detail out, threads) -> pass
};

std::string golden_coeffs(const ExactPolynomial& p) {
    std::string s;
    for (int j = p.degree(); j >= 0; --j) {
        if (!s.empty()) s += ",";
        s += p.coeff(j).str();
    }
    return s;
}

bool check_golden(std::string& detail, int) {
    const std::vector<std::vector<BigInt>> expected = {
        {1, -1, 0},            // n^2 - n
        {2, -5, 3, 0},         // 2n^3 - 5n^2 + 3n
        {5, -22, 32, -15, 0},  // 5n^4 - 22n^3 + 32n^2 - 15n
    };
    for (int k = 1; k <= 3; ++k) {
        ExactPolynomial want('n');
        for (int j = 0; j <= k + 1; ++j) want += ExactPolynomial::monomial(k + 1 - j, expected[k - 1][j], 'n');
        const ExactPolynomial interp = moment_polynomial(k).poly;
        const ExactPolynomial det = moment_determinant(k);
        const ExactPolynomial akl = akl_poly(k, 1).with_var('n');
        const ExactPolynomial paths = reconstruct_A(k).with_var('n');
        if (interp != want || det != want || akl != want || paths != want) {
            detail = "k=" + std::to_string(k) + ": got interp=" + golden_coeffs(interp) + " det=" + golden_coeffs(det) +
                     " akl=" + golden_coeffs(akl) + " paths=" + golden_coeffs(paths);
            return false;
        }
    }
    detail = "interp/det/A(k,1)/paths all equal the three reference polynomials";
    return true;
}

bool check_three_routes(std::string& detail, int) {
    for (int k = 1; k <= 8; ++k) {
        const ExactPolynomial interp = moment_polynomial(k).poly;
        if (moment_determinant(k) != interp || akl_poly(k, 1).with_var('n') != interp ||
            reconstruct_A(k).with_var('n') != interp) {
            detail = "route mismatch at k=" + std::to_string(k);
            return false;
        }
    }
    detail = "interpolation = determinant = A(k,1) = path sum for k <= 8";
    return true;
}

bool check_top_coefficients(std::string& detail, int) {
    for (int k = 1; k <= 20; ++k) {
        const MomentPolynomial mp = moment_polynomial(k);
        const auto [catalan_k, s_k] = coefficient_targets(k);
        if (mp.leading != catalan_k || mp.second != s_k) {
            detail = "k=" + std::to_string(k) + ": leading=" + mp.leading.str() + " (want " + catalan_k.str() +
                     "), second=" + mp.second.str() + " (want " + s_k.str() + ")";
            return false;
        }
    }
    detail = "leading = C_k and second = -(2^(2k-1) - binom(2k-1,k)) for k <= 20";
    return true;
}

bool check_lattice(std::string& detail, int) {
    for (int k = 1; k <= 12; ++k)
        if (count_paths(k) != catalan(k)) {
            detail = "path count mismatch at k=" + std::to_string(k);
            return false;
        }
    const auto s = second_coeff_recursion(30);
    for (int k = 1; k <= 30; ++k)
        if (s[k] != coefficient_targets(k).second) {
            detail = "s_k recursion mismatch at k=" + std::to_string(k);
            return false;
        }
    for (int k = 1; k <= 10; ++k)
        if (!walk_identity_check(k)) {
            detail = "walk identity failed at k=" + std::to_string(k);
            return false;
        }
    detail = "C_k counts (k<=12), s_k recursion (k<=30), walk identity (k<=10)";
    return true;
}

bool check_exact_analysis(std::string& detail, int threads) {
    const std::vector<BigRat> grid = {BigRat(1, 20), BigRat(1, 10), BigRat(3, 20),
                                      BigRat(1, 5),  BigRat(1, 4),  BigRat(1, 3)};
    const auto points = gf_grid(500, grid, threads);
    long bound_fail = 0, residual_fail = 0;
    for (const auto& p : points) {
        if (!p.bound_ok) ++bound_fail;
        if (!p.residual_zero) ++residual_fail;
    }
    if (bound_fail || residual_fail) {
        detail = std::to_string(bound_fail) + " bound failures, " + std::to_string(residual_fail) +
                 " nonzero residuals over " + std::to_string(points.size()) + " grid points";
        return false;
    }
    detail = "residual = 0 and f_n <= min(1/z^2, c(z^2)) at all " + std::to_string(points.size()) + " points";
    return true;
}

bool check_triangle(std::string& detail, int) {
    for (int n = 1; n <= 60; ++n) {
        const auto ps = power_sums_exact(n, n);
        const auto ms = moment_series(n, n);
        const RootSet rs = hermite_roots(n);
        for (int k = 2; k <= n; k += 2) {
            if (ms.coeff(k) != BigRat(ps[k - 1])) {
                detail = "series/Newton mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k);
                return false;
            }
            double num = 0.0;
            for (double r : rs.roots) num += std::pow(r, k);
            const double exact = to_double(ps[k - 1]);
            if (std::fabs(num - exact) > 1e-8 * std::fabs(exact)) {
                detail = "root-sum mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                         ": " + std::to_string(num) + " vs " + std::to_string(exact);
                return false;
            }
        }
    }
    detail = "Newton = series = root sums for n <= 60, even k <= n";
    return true;
}

bool check_semicircle_rate(std::string& detail, int) {
    std::ostringstream os;
    bool ok = true;
    for (int k : {2, 4, 6}) {
        const double semi = to_double(semicircle_moment(k));
        const double limit = -to_double(coefficient_targets(k / 2).second) / std::pow(2.0, k);
        double rate400 = 0.0;
        for (int n : {100, 200, 400}) {
            const RootSet rs = hermite_roots(n);
            const double rate = n * (semi - empirical_moment(rs, k));
            if (n == 400) rate400 = rate;
        }
        const double rel = std::fabs(rate400 - limit) / std::fabs(limit);
        os << "k=" << k << ": n(semi-emp)=" << rate400 << " vs -s/2^k=" << limit << " (rel " << rel << ") ";
        if (rel > 0.15) ok = false;
    }
    detail = os.str();
    return ok;
}

bool check_wigner_exact(std::string& detail, int) {
    for (int n = 1; n <= 5; ++n) {
        const auto avg = exact_expected_charpoly(n);
        const ExactPolynomial h = hermite_monic(n).h;
        for (int k = 0; k <= n; ++k)
            if (avg[k] != h.coeff(k)) {
                detail = "coefficient mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k);
                return false;
            }
    }
    detail = "enumerated E det(xI-A) = H_n for n <= 5";
    return true;
}

bool check_wigner_mc(std::string& detail, int threads) {
    std::ostringstream os;
    for (const EntryLaw law : {EntryLaw::rademacher, EntryLaw::gaussian}) {
        EnsembleConfig cfg;
        cfg.n = 4;
        cfg.dist = law;
        cfg.c = law == EntryLaw::rademacher ? 1.0 : 2.0;
        cfg.samples = 100000;
        cfg.seed = kMcRegressionSeed;
        const CharPolyStats stats = mc_expected_charpoly(cfg, threads);
        double worst = 0.0;
        for (const auto& cs : stats.coeffs) {
            const double diff = std::fabs(cs.mean - cs.target);
            if (cs.stderr_of_mean == 0.0) {
                if (diff != 0.0) {
                    detail = to_string(law) + ": deterministic coefficient k=" + std::to_string(cs.k) + " off target";
                    return false;
                }
                continue;
            }
            worst = std::max(worst, diff / cs.stderr_of_mean);
        }
        os << to_string(law) << ": max |mean-target|/stderr = " << worst << "  ";
        if (worst > 4.0) {
            detail = os.str();
            return false;
        }
    }
    detail = os.str();
    return true;
}

bool check_histogram(std::string& detail, int threads) {
    EnsembleConfig cfg;
    cfg.n = 200;
    cfg.dist = EntryLaw::gaussian;
    cfg.c = 1.0;
    cfg.samples = 200;
    cfg.seed = kHistogramRegressionSeed;
    const SpectrumHistogram h = spectrum_histogram(cfg, 24, threads);
    double edge_mass = 0.0;
    for (std::size_t b = 0; b < h.masses.size(); ++b)
        if (h.edges[b] >= 1.0 - 1e-12) edge_mass += h.masses[b];
    std::ostringstream os;
    os << "tv=" << h.tv_distance << " (<= " << kHistogramTvThreshold << "), mass above 1.0: " << edge_mass << " (<= "
       << kHistogramEdgeMassThreshold << "), out of range: " << h.out_of_range;
    detail = os.str();
    return h.tv_distance <= kHistogramTvThreshold && edge_mass <= kHistogramEdgeMassThreshold;
}

}  // namespace

std::vector<CheckResult> run_verification(int threads) {
    const std::vector<Check> checks = {
        {1, "golden moment polynomials, four routes", 1.0, check_golden},
        {2, "route equivalence interp/det/A(k,1)/paths, k <= 8", 30.0, check_three_routes},
        {3, "leading/second coefficients vs C_k and s_k, k <= 20", 60.0, check_top_coefficients},
        {4, "lattice counts, s_k recursion, walk identity", 60.0, check_lattice},
        {5, "fixed-point residual and c(z^2) bound, n <= 500", 120.0, check_exact_analysis},
        {6, "Newton/series/numerical-roots triangle, n <= 60", 60.0, check_triangle},
        {7, "semicircle moment convergence rate at n = 400", 30.0, check_semicircle_rate},
        {8, "Wigner exact expected charpoly, n <= 5", 60.0, check_wigner_exact},
        {9, "Wigner Monte Carlo regression (fixed seed)", 120.0, check_wigner_mc},
        {10, "spectral histogram vs semicircle (fixed seed)", 300.0, check_histogram},
    };
    std::vector<CheckResult> results;
    results.reserve(checks.size());
    for (const auto& c : checks) {
        CheckResult r;
        r.id = c.id;
        r.name = c.name;
        r.budget_seconds = c.budget_seconds;
        const auto start = std::chrono::steady_clock::now();
        try {
            r.pass = c.run(r.detail, threads);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.pass && r.seconds > r.budget_seconds) {
            r.pass = false;
            r.detail += " [exceeded time budget]";
        }
        results.push_back(std::move(r));
    }
    return results;
}

int print_verification(const std::vector<CheckResult>& results, std::ostream& os) {
    int failures = 0;
    for (const auto& r : results) {
        os << (r.pass ? "[PASS]" : "[FAIL]") << " " << r.id << ". " << r.name << " (" << r.seconds << "s, budget "
           << r.budget_seconds << "s)";
        if (!r.detail.empty()) os << "\n       " << r.detail;
        os << "\n";
        if (!r.pass) ++failures;
    }
    os << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << "\n";
    return failures;
}

}  // namespace hmom
