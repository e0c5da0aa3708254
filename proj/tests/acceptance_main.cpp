#include <cstdio>

#include "sbrace/acceptance.hpp"

int main() {
    sbrace::acceptance::Options opt;
    opt.seed = sbrace::acceptance::seed_from_env();
    std::printf("seed %llu\n", static_cast<unsigned long long>(opt.seed));
    int failed = 0;
    for (const auto& r : sbrace::acceptance::run_all(opt)) {
        std::printf("criterion %d: %s %s (%s, %.2fs)\n", r.id, r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        failed += !r.passed;
    }
    return failed == 0 ? 0 : 1;
}
