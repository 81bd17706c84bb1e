#include "hmom/akl.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace hmom {

ExactPolynomial falling_factorial_from(int offset, int len) {
    if (len < 0) throw usage_error("falling_factorial_from: negative length");
    ExactPolynomial p = ExactPolynomial::constant(BigInt(1), 'x');
    for (int j = 0; j < len; ++j) p *= ExactPolynomial({BigInt(-(offset + j)), BigInt(1)}, 'x');
    return p;
}

ExactPolynomial falling_factorial(int l) {
    if (l < 0) throw usage_error("falling_factorial: negative l");
    return falling_factorial_from(0, l);
}

namespace {

std::mutex g_akl_mutex;
std::map<std::pair<int, int>, ExactPolynomial> g_akl_memo;

ExactPolynomial akl_compute(int k, int l);

ExactPolynomial akl_cached(int k, int l) {
    const auto key = std::make_pair(k, l);
    {
        std::lock_guard<std::mutex> lock(g_akl_mutex);
        if (auto it = g_akl_memo.find(key); it != g_akl_memo.end()) return it->second;
    }
    ExactPolynomial value = akl_compute(k, l);
    std::lock_guard<std::mutex> lock(g_akl_mutex);
    return g_akl_memo.emplace(key, std::move(value)).first->second;
}

ExactPolynomial akl_compute(int k, int l) {
    if (k == 0) {
        if (l == 1) return ExactPolynomial::monomial(1, BigInt(1), 'x');
        return ExactPolynomial::zero('x');
    }
    ExactPolynomial acc('x');
    for (int i = 1; i <= l + 1; ++i) acc += akl_cached(k - 1, i) * falling_factorial_from(i, l - i + 1);
    return acc;
}

}  // namespace

ExactPolynomial akl_poly(int k, int l) {
    if (k < 0 || l < 1) throw usage_error("akl_poly: need k >= 0 and l >= 1");
    return akl_cached(k, l);
}

ExactPolynomial akl_a2l_closed(int l) {
    if (l < 1) throw usage_error("akl_a2l_closed: need l >= 1");
    RatPolynomial p = to_rational(falling_factorial(l + 1));
    p *= RatPolynomial({BigRat(-(l + 1) * (l + 2)), BigRat(2 * l + 2)}, 'x');
    p *= BigRat(BigInt(1), BigInt(2));
    return to_integer(p);
}

}  // namespace hmom
