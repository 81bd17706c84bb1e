#include "hmom/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hmom {

namespace {

constexpr int kMaxQlIterations = 50;

}  // namespace

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return {};
    if (static_cast<int>(e.size()) != n - 1) throw usage_error("tridiagonal_eigenvalues: off-diagonal size must be n-1");
    e.push_back(0.0);

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == kMaxQlIterations)
                    throw numeric_error("tridiagonal_eigenvalues: QL failed to converge at row " + std::to_string(l));
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw usage_error("symmetric_eigenvalues: matrix not square");
    if (n == 0) return {};
    if (n == 1) return {a[0][0]};

    // Householder reduction to tridiagonal form (no eigenvectors kept).
    std::vector<double> d(n), e(n, 0.0);
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::fabs(a[i][k]);
            if (scale == 0.0) {
                e[i] = a[i][l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                double f = a[i][l];
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a[j][k] * a[i][k];
                    for (int k = j + 1; k <= l; ++k) g += a[k][j] * a[i][k];
                    e[j] = g / h;
                    f += e[j] * a[i][j];
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a[i][j];
                    const double ge = e[j] - hh * f;
                    e[j] = ge;
                    for (int k = 0; k <= j; ++k) a[j][k] -= f * e[k] + ge * a[i][k];
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    for (int i = 0; i < n; ++i) d[i] = a[i][i];
    e.erase(e.begin());
    return tridiagonal_eigenvalues(std::move(d), std::move(e));
}

RootSet hermite_roots(int n) {
    if (n < 1) throw usage_error("hermite_roots: need n >= 1");
    std::vector<double> diag(n, 0.0), off(n - 1);
    for (int i = 0; i < n - 1; ++i) off[i] = std::sqrt(static_cast<double>(i + 1));
    RootSet rs;
    rs.n = n;
    rs.roots = tridiagonal_eigenvalues(std::move(diag), std::move(off));
    // Restore the exact zero root of odd-degree polynomials.
    if (n % 2 == 1) {
        auto& mid = rs.roots[n / 2];
        if (std::fabs(mid) < 1e-13) mid = 0.0;
    }
    rs.scaled.resize(n);
    const double scale = 2.0 * std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j) rs.scaled[j] = rs.roots[j] / scale;
    return rs;
}

double empirical_moment(const RootSet& rs, int k) {
    if (k < 0) throw usage_error("empirical_moment: negative k");
    double acc = 0.0;
    for (double lam : rs.scaled) acc += std::pow(lam, k);
    return acc / rs.n;
}

BigRat semicircle_moment(int k) {
    if (k < 0) throw usage_error("semicircle_moment: negative k");
    if (k % 2 != 0) return BigRat(0);
    return BigRat(catalan(k / 2), pow2(k));
}

double semicircle_density(double x) {
    if (x <= -1.0 || x >= 1.0) return 0.0;
    return 2.0 / M_PI * std::sqrt(1.0 - x * x);
}

double semicircle_cdf(double x) {
    if (x <= -1.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return 0.5 + (x * std::sqrt(1.0 - x * x) + std::asin(x)) / M_PI;
}

}  // namespace hmom
