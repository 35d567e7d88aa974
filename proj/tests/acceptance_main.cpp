// Acceptance gate: runs all nine criteria and prints one pass/fail line each.
#include "nsplab/acceptance.hpp"

#include <cstdlib>
#include <iostream>

int main() {
    unsigned threads = 1;
    if (const char* env = std::getenv("NSP_WAVELAB_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 1) threads = static_cast<unsigned>(n);
    }
    const auto results = nsplab::acceptance::run({}, 12345u, threads);
    bool all = true;
    for (const auto& r : results) {
        std::cout << nsplab::acceptance::format_line(r) << std::endl;
        all = all && r.passed;
    }
    std::cout << (all ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << std::endl;
    return all ? 0 : 1;
}
