#ifndef HMOM_WIGNER_HPP
#define HMOM_WIGNER_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hmom/polynomial.hpp"

namespace hmom {

enum class EntryLaw { rademacher, gaussian };

EntryLaw entry_law_from_string(const std::string& s);
std::string to_string(EntryLaw law);

/// One Wigner-ensemble run: symmetric n x n matrices whose free entries are
/// iid zero-mean draws from `dist`, scaled so the off-diagonal variance is
/// c^2 (the diagonal uses the same law). Sampling is deterministic given
/// (seed, sample index), independent of threading.
struct EnsembleConfig {
    int n = 0;
    EntryLaw dist = EntryLaw::rademacher;
    double c = 1.0;
    long samples = 0;
    std::uint64_t seed = 0;
};

using DenseMatrix = std::vector<std::vector<double>>;

/// Engine for one sample substream, derived from (seed, stream) by a
/// splitmix64 mix so distinct streams decorrelate.
std::mt19937_64 substream_engine(std::uint64_t seed, std::uint64_t stream);

/// Standard normal via Box-Muller on raw 53-bit uniforms (the distribution
/// classes in <random> are not reproducible across standard libraries).
double standard_normal(std::mt19937_64& gen);

DenseMatrix sample_matrix(const EnsembleConfig& cfg, std::uint64_t stream);

/// Monic characteristic polynomial det(xI - A), coefficients lowest-first,
/// by the Faddeev-LeVerrier recurrence in doubles.
std::vector<double> char_poly(const DenseMatrix& a);

/// Exact Faddeev-LeVerrier for integer matrices; every trace division is
/// checked to be exact.
std::vector<BigInt> char_poly_exact(const std::vector<std::vector<BigInt>>& a);

/// E det(xI - A) for the Rademacher law with c = 1, by full enumeration of
/// all 2^(n(n+1)/2) sign assignments (n <= 5). Equals the coefficients of
/// H_n exactly.
std::vector<BigInt> exact_expected_charpoly(int n);

struct CoeffStat {
    int k = 0;  // power of x
    double mean = 0.0;
    double stderr_of_mean = 0.0;
    double target = 0.0;  // coefficient of x^k in c^n H_n(x/c)
};

struct CharPolyStats {
    int n = 0;
    long samples = 0;
    std::vector<CoeffStat> coeffs;
};

/// Per-coefficient running mean and standard error of char_poly over
/// cfg.samples draws; deterministic for a fixed thread count, and stable to
/// ~1e-10 across thread counts (merge reordering only).
CharPolyStats mc_expected_charpoly(const EnsembleConfig& cfg, int threads = 1);

struct SpectrumHistogram {
    std::vector<double> edges;      // bins+1 edges over [-1.2, 1.2]
    std::vector<double> masses;     // empirical bin masses, sum 1
    std::vector<double> reference;  // semicircle bin masses
    double tv_distance = 0.0;       // (1/2) sum |masses - reference|
    long total_eigenvalues = 0;
    long out_of_range = 0;
};

/// Histogram of scaled eigenvalues lambda = eig / (2 c sqrt n) over
/// cfg.samples matrices, against the semicircle bin masses.
SpectrumHistogram spectrum_histogram(const EnsembleConfig& cfg, int bins, int threads = 1);

}  // namespace hmom

#endif  // HMOM_WIGNER_HPP
