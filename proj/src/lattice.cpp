#include "hmom/lattice.hpp"

#include <cstdint>

#include "hmom/akl.hpp"

namespace hmom {

namespace {

/// DFS over the admissible successors of (i,j), ascending in the height
/// change h (so j' = j-1, j, j+1, ...). The prune j' <= k-i' keeps only
/// nodes that can still descend to the axis in time.
template <typename Visit>
void dfs_paths(int k, std::vector<std::pair<int, int>>& stack, Visit&& visit) {
    const auto [i, j] = stack.back();
    if (i == k) {
        if (j == 0) visit(stack);
        return;
    }
    const int lo = j > 0 ? j - 1 : 0;
    const int hi = k - (i + 1);
    for (int jp = lo; jp <= hi; ++jp) {
        stack.emplace_back(i + 1, jp);
        dfs_paths(k, stack, visit);
        stack.pop_back();
    }
}

}  // namespace

std::vector<LatticePath> enumerate_paths(int k, bool with_weights) {
    if (k < 1) throw usage_error("enumerate_paths: need k >= 1");
    // C_12 = 208012 paths is the ceiling for full storage; count beyond that.
    if (k > 12) throw usage_error("enumerate_paths: too many paths to store for k > 12; use count_paths");
    std::vector<LatticePath> out;
    std::vector<std::pair<int, int>> stack{{0, 0}};
    dfs_paths(k, stack, [&](const std::vector<std::pair<int, int>>& nodes) {
        LatticePath p{nodes, ExactPolynomial('x')};
        if (with_weights) p.weight = path_weight(p);
        out.push_back(std::move(p));
    });
    return out;
}

BigInt count_paths(int k) {
    if (k < 1) throw usage_error("count_paths: need k >= 1");
    BigInt count = 0;
    std::vector<std::pair<int, int>> stack{{0, 0}};
    dfs_paths(k, stack, [&](const std::vector<std::pair<int, int>>&) { ++count; });
    return count;
}

BigInt count_paths_first_touch_at(int k) {
    if (k < 1) throw usage_error("count_paths_first_touch_at: need k >= 1");
    BigInt count = 0;
    std::vector<std::pair<int, int>> stack{{0, 0}};
    dfs_paths(k, stack, [&](const std::vector<std::pair<int, int>>& nodes) {
        for (int i = 1; i < k; ++i)
            if (nodes[i].second == 0) return;
        ++count;
    });
    return count;
}

ExactPolynomial path_weight(const LatticePath& path) {
    const auto& nodes = path.nodes;
    if (nodes.empty() || nodes.front() != std::make_pair(0, 0))
        throw usage_error("path_weight: path must start at the origin");
    ExactPolynomial w = ExactPolynomial::constant(BigInt(1), 'x');
    for (std::size_t e = 1; e < nodes.size(); ++e) {
        const auto [i1, j1] = nodes[e - 1];
        const auto [i2, j2] = nodes[e];
        if (i2 != i1 + 1 || j2 < j1 - 1 || j2 < 0) throw usage_error("path_weight: invalid edge");
        if (j2 == j1 - 1) continue;  // down step, weight 1
        for (int j = j1 + 1; j <= j2 + 1; ++j) w *= ExactPolynomial({BigInt(-j), BigInt(1)}, 'x');
    }
    return w;
}

ExactPolynomial reconstruct_A(int k) {
    if (k < 1) throw usage_error("reconstruct_A: need k >= 1");
    ExactPolynomial acc('x');
    std::vector<std::pair<int, int>> stack{{0, 0}};
    dfs_paths(k, stack, [&](const std::vector<std::pair<int, int>>& nodes) {
        acc += path_weight(LatticePath{nodes, ExactPolynomial('x')});
    });
    return ExactPolynomial::monomial(1, BigInt(1), 'x') * acc;
}

std::vector<BigInt> second_coeff_recursion(int kmax) {
    if (kmax < 1) throw usage_error("second_coeff_recursion: need kmax >= 1");
    std::vector<BigInt> c(kmax + 1), s(kmax + 1);
    for (int j = 0; j <= kmax; ++j) c[j] = catalan(j);
    s[0] = 0;
    for (int k = 1; k <= kmax; ++k) {
        BigInt acc = 0;
        for (int j = 1; j <= k; ++j) acc += s[k - j] * c[j - 1] + c[k - j] * (s[j - 1] - j * c[j - 1]);
        s[k] = std::move(acc);
    }
    return s;
}

bool catalan_recursion_check(int kmax) {
    if (kmax < 1) throw usage_error("catalan_recursion_check: need kmax >= 1");
    std::vector<BigInt> d(kmax + 1);
    d[0] = 1;
    for (int k = 1; k <= kmax; ++k) d[k] = count_paths(k);
    for (int k = 1; k <= kmax; ++k) {
        BigInt conv = 0;
        for (int i = 0; i < k; ++i) conv += d[i] * d[k - 1 - i];
        if (d[k] != conv) return false;
        if (d[k] != catalan(k)) return false;
    }
    return true;
}

bool walk_identity_check(int k) {
    if (k < 1) throw usage_error("walk_identity_check: need k >= 1");
    if (k > 12) throw usage_error("walk_identity_check: 2^(2k-1) enumeration too large for k > 12");
    const int steps = 2 * k - 1;

    BigInt lhs = 0;
    for (int j = 0; j <= k - 1; ++j) lhs += catalan(j) * pow2(2 * (k - j - 1));
    if (lhs + binomial(2 * k - 1, k) != pow2(2 * k - 1)) return false;

    // Brute force: classify every +-1 walk by the step of its first visit
    // to -1 (always odd), or as never-negative.
    std::vector<std::uint64_t> first_neg(k, 0);
    std::uint64_t nonneg = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << steps); ++bits) {
        int sum = 0;
        int hit = -1;
        for (int t = 0; t < steps; ++t) {
            sum += (bits >> t) & 1 ? 1 : -1;
            if (sum < 0) {
                hit = t + 1;  // 1-based step index
                break;
            }
        }
        if (hit < 0)
            ++nonneg;
        else
            ++first_neg[(hit - 1) / 2];
    }
    for (int j = 0; j <= k - 1; ++j)
        if (BigInt(first_neg[j]) != catalan(j) * pow2(2 * (k - j - 1))) return false;
    return BigInt(nonneg) == binomial(2 * k - 1, k);
}

}  // namespace hmom
