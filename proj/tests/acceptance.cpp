// Acceptance suite: runs every verification check at its pinned tolerance
// and prints one pass/fail line per criterion. Exit code is the number of
// failed criteria.

#include <cstdlib>
#include <iostream>
#include <thread>

#include "hmom/verify.hpp"

int main() {
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (const char* env = std::getenv("HMOM_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) threads = v;
    }
    const auto results = hmom::run_verification(threads);
    return hmom::print_verification(results, std::cout);
}
