#include "hmom/wigner.hpp"

#include <cmath>
#include <thread>

#include "hmom/hermite.hpp"
#include "hmom/spectra.hpp"

namespace hmom {

EntryLaw entry_law_from_string(const std::string& s) {
    if (s == "rademacher") return EntryLaw::rademacher;
    if (s == "gaussian") return EntryLaw::gaussian;
    throw usage_error("unknown entry law '" + s + "' (expected rademacher|gaussian)");
}

std::string to_string(EntryLaw law) { return law == EntryLaw::rademacher ? "rademacher" : "gaussian"; }

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;  // [0, 1)
}

void check_config(const EnsembleConfig& cfg) {
    if (cfg.n < 1) throw usage_error("ensemble: need n >= 1");
    if (!(cfg.c > 0.0)) throw usage_error("ensemble: need c > 0");
    if (cfg.samples < 1) throw usage_error("ensemble: need samples >= 1");
}

}  // namespace

std::mt19937_64 substream_engine(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ stream));
}

double standard_normal(std::mt19937_64& gen) {
    double u1 = uniform01(gen);
    while (u1 == 0.0) u1 = uniform01(gen);
    const double u2 = uniform01(gen);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

DenseMatrix sample_matrix(const EnsembleConfig& cfg, std::uint64_t stream) {
    check_config(cfg);
    std::mt19937_64 gen = substream_engine(cfg.seed, stream);
    DenseMatrix a(cfg.n, std::vector<double>(cfg.n, 0.0));
    for (int i = 0; i < cfg.n; ++i)
        for (int j = i; j < cfg.n; ++j) {
            double v = 0.0;
            switch (cfg.dist) {
                case EntryLaw::rademacher:
                    v = (gen() & 1) ? cfg.c : -cfg.c;
                    break;
                case EntryLaw::gaussian:
                    v = cfg.c * standard_normal(gen);
                    break;
            }
            a[i][j] = a[j][i] = v;
        }
    return a;
}

std::vector<double> char_poly(const DenseMatrix& a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw usage_error("char_poly: matrix not square");
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
    // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    std::vector<double> c(n + 1, 0.0);
    c[n] = 1.0;
    if (n == 0) return c;
    DenseMatrix m = a;
    double tr = 0.0;
    for (int i = 0; i < n; ++i) tr += m[i][i];
    c[n - 1] = -tr;
    DenseMatrix next(n, std::vector<double>(n, 0.0));
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int l = 0; l < n; ++l) s += a[i][l] * m[l][j];
                next[i][j] = s;
            }
        std::swap(m, next);
        tr = 0.0;
        for (int i = 0; i < n; ++i) tr += m[i][i];
        c[n - k] = -tr / k;
    }
    return c;
}

std::vector<BigInt> char_poly_exact(const std::vector<std::vector<BigInt>>& a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw usage_error("char_poly_exact: matrix not square");
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    if (n == 0) return c;
    std::vector<std::vector<BigInt>> m = a;
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += m[i][i];
    c[n - 1] = -tr;
    std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n));
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                BigInt s = 0;
                for (int l = 0; l < n; ++l) s += a[i][l] * m[l][j];
                next[i][j] = std::move(s);
            }
        std::swap(m, next);
        tr = 0;
        for (int i = 0; i < n; ++i) tr += m[i][i];
        if (tr % k != 0) throw consistency_error("char_poly_exact: trace not divisible in LeVerrier step");
        c[n - k] = -tr / k;
    }
    return c;
}

std::vector<BigInt> exact_expected_charpoly(int n) {
    if (n < 1 || n > 5) throw usage_error("exact_expected_charpoly: enumeration supported for 1 <= n <= 5");
    const int free_entries = n * (n + 1) / 2;
    std::vector<BigInt> sum(n + 1, BigInt(0));
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << free_entries); ++bits) {
        int b = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const BigInt v = (bits >> b++) & 1 ? 1 : -1;
                a[i][j] = v;
                a[j][i] = v;
            }
        const auto pc = char_poly_exact(a);
        for (int k = 0; k <= n; ++k) sum[k] += pc[k];
    }
    const BigInt total = BigInt(1) << free_entries;
    for (auto& v : sum) {
        if (v % total != 0) throw consistency_error("exact_expected_charpoly: average is not an integer");
        v /= total;
    }
    return sum;
}

namespace {

/// Single-pass mean/M2 accumulator per coefficient, merged pairwise with
/// Chan's update so worker partitions combine associatively.
struct Welford {
    long count = 0;
    std::vector<double> mean;
    std::vector<double> m2;

    explicit Welford(int dims) : mean(dims, 0.0), m2(dims, 0.0) {}

    void add(const std::vector<double>& x) {
        ++count;
        for (std::size_t i = 0; i < mean.size(); ++i) {
            const double delta = x[i] - mean[i];
            mean[i] += delta / count;
            m2[i] += delta * (x[i] - mean[i]);
        }
    }

    void merge(const Welford& o) {
        if (o.count == 0) return;
        if (count == 0) {
            *this = o;
            return;
        }
        const long total = count + o.count;
        for (std::size_t i = 0; i < mean.size(); ++i) {
            const double delta = o.mean[i] - mean[i];
            mean[i] += delta * o.count / total;
            m2[i] += o.m2[i] + delta * delta * (static_cast<double>(count) * o.count / total);
        }
        count = total;
    }
};

template <typename PerSample>
void run_samples(long samples, int threads, int dims, Welford& acc, PerSample&& per_sample) {
    const int workers = static_cast<int>(std::max<long>(1, std::min<long>(threads, samples)));
    if (workers == 1) {
        for (long s = 0; s < samples; ++s) per_sample(s, acc);
        return;
    }
    std::vector<Welford> partial(workers, Welford(dims));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const long chunk = (samples + workers - 1) / workers;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            const long lo = w * chunk;
            const long hi = std::min(samples, lo + chunk);
            for (long s = lo; s < hi; ++s) per_sample(s, partial[w]);
        });
    for (auto& th : pool) th.join();
    for (const auto& p : partial) acc.merge(p);  // fixed worker order
}

}  // namespace

CharPolyStats mc_expected_charpoly(const EnsembleConfig& cfg, int threads) {
    check_config(cfg);
    const int dims = cfg.n + 1;
    Welford acc(dims);
    run_samples(cfg.samples, threads, dims, acc, [&](long s, Welford& w) {
        w.add(char_poly(sample_matrix(cfg, static_cast<std::uint64_t>(s))));
    });

    const ExactPolynomial h = hermite_monic(cfg.n).h;
    CharPolyStats stats;
    stats.n = cfg.n;
    stats.samples = cfg.samples;
    stats.coeffs.resize(dims);
    for (int k = 0; k <= cfg.n; ++k) {
        CoeffStat& cs = stats.coeffs[k];
        cs.k = k;
        cs.mean = acc.mean[k];
        const double var = acc.count > 1 ? acc.m2[k] / (acc.count - 1) : 0.0;
        cs.stderr_of_mean = std::sqrt(var / acc.count);
        // coefficient of x^k in c^n H_n(x/c) is a_k c^(n-k)
        cs.target = to_double(h.coeff(k)) * std::pow(cfg.c, cfg.n - k);
    }
    return stats;
}

SpectrumHistogram spectrum_histogram(const EnsembleConfig& cfg, int bins, int threads) {
    check_config(cfg);
    if (bins < 1) throw usage_error("spectrum_histogram: need bins >= 1");
    constexpr double kLo = -1.2, kHi = 1.2;
    const double width = (kHi - kLo) / bins;
    const double scale = 2.0 * cfg.c * std::sqrt(static_cast<double>(cfg.n));

    const int workers = static_cast<int>(std::max<long>(1, std::min<long>(threads, cfg.samples)));
    std::vector<std::vector<long>> counts(workers, std::vector<long>(bins, 0));
    std::vector<long> outside(workers, 0);
    const auto worker_fn = [&](int w, long lo, long hi) {
        for (long s = lo; s < hi; ++s) {
            const auto eig = symmetric_eigenvalues(sample_matrix(cfg, static_cast<std::uint64_t>(s)));
            for (double x : eig) {
                const double lam = x / scale;
                const int b = static_cast<int>(std::floor((lam - kLo) / width));
                if (b < 0 || b >= bins)
                    ++outside[w];
                else
                    ++counts[w][b];
            }
        }
    };
    if (workers == 1) {
        worker_fn(0, 0, cfg.samples);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const long chunk = (cfg.samples + workers - 1) / workers;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker_fn, w, w * chunk, std::min(cfg.samples, (w + 1) * chunk));
        for (auto& th : pool) th.join();
    }

    SpectrumHistogram h;
    h.edges.resize(bins + 1);
    for (int b = 0; b <= bins; ++b) h.edges[b] = kLo + b * width;
    std::vector<long> total(bins, 0);
    long in_range = 0;
    for (int w = 0; w < workers; ++w) {
        h.out_of_range += outside[w];
        for (int b = 0; b < bins; ++b) total[b] += counts[w][b];
    }
    for (long c : total) in_range += c;
    h.total_eigenvalues = in_range + h.out_of_range;
    if (in_range == 0) throw numeric_error("spectrum_histogram: no eigenvalues landed in [-1.2, 1.2]");
    h.masses.resize(bins);
    h.reference.resize(bins);
    double tv = 0.0;
    for (int b = 0; b < bins; ++b) {
        h.masses[b] = static_cast<double>(total[b]) / in_range;
        h.reference[b] = semicircle_cdf(h.edges[b + 1]) - semicircle_cdf(h.edges[b]);
        tv += std::fabs(h.masses[b] - h.reference[b]);
    }
    h.tv_distance = 0.5 * tv;
    return h;
}

}  // namespace hmom
