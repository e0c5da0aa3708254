#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sbrace::acceptance {

struct Options {
    std::uint64_t seed = 1;
    int threads = 1;
    int sampled_cocycles = 20;
};

// ACCEPT_SEED if set and numeric, otherwise 1.
std::uint64_t seed_from_env();

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

// Counts from tests/oracle/c2_class_counts.py: {Z, B, H}.
struct OracleCounts {
    std::uint64_t cocycles, coboundaries, classes;
};
inline constexpr OracleCounts kOracleSb{4, 1, 4};
inline constexpr OracleCounts kOracleRb{4, 1, 4};
inline constexpr OracleCounts kOracleRrb{8, 2, 4};

constexpr int kCriteria = 10;
const char* criterion_name(int id);
CriterionResult run_criterion(int id, const Options& opt);
std::vector<CriterionResult> run_all(const Options& opt);

}  // namespace sbrace::acceptance
