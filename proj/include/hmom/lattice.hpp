#ifndef HMOM_LATTICE_HPP
#define HMOM_LATTICE_HPP

#include <utility>
#include <vector>

#include "hmom/polynomial.hpp"

namespace hmom {

/// A directed path in the graph G = ((Z>=0)^2, E) where (i,j) -> (i+1, j')
/// requires j' >= j-1. Paths of interest start at the origin and end on the
/// axis. The weight is the product of the edge polynomials (the origin
/// factor x is NOT included; reconstruct_A applies it).
struct LatticePath {
    std::vector<std::pair<int, int>> nodes;
    ExactPolynomial weight;  // filled when requested
};

/// All paths from (0,0) to (k,0), in deterministic DFS order (ascending
/// height change at each step). |result| = C_k. With with_weights the weight
/// member of each path is populated.
std::vector<LatticePath> enumerate_paths(int k, bool with_weights = false);

/// Path count by the same DFS without storing paths.
BigInt count_paths(int k);

/// Paths from (0,0) to (k,0) whose first return to the axis is at step k.
BigInt count_paths_first_touch_at(int k);

/// Edge-product weight of a path: a down step weighs 1, any other step
/// (a -> b with b.second >= a.second) weighs prod_{j=a.second+1}^{b.second+1} (x-j).
ExactPolynomial path_weight(const LatticePath& path);

/// x * sum of path weights over all paths to (k,0); equals A(k,1).
ExactPolynomial reconstruct_A(int k);

/// s_0..s_kmax from the recursion
///   s_k = sum_{j=1..k} ( s_{k-j} C_{j-1} + C_{k-j} (s_{j-1} - j C_{j-1}) ),  s_0 = 0.
std::vector<BigInt> second_coeff_recursion(int kmax);

/// True iff the DFS path counts d_k satisfy the Catalan convolution
/// d_{k+1} = sum d_i d_{k-i} and d_k = binom(2k,k)/(k+1) for all k <= kmax.
bool catalan_recursion_check(int kmax);

/// True iff sum_{j=0..k-1} C_j 2^(2(k-j-1)) + binom(2k-1,k) = 2^(2k-1), both
/// by formula and by brute-force classification of all 2^(2k-1) walks of
/// +-1 steps by their first entry into the negative region.
bool walk_identity_check(int k);

}  // namespace hmom

#endif  // HMOM_LATTICE_HPP
