#pragma once

#include <string>
#include <vector>

#include "rejsched/exact.hpp"
#include "rejsched/generator.hpp"

namespace rejsched {

struct BenchConfig {
    int count = 100;
    uint64_t base_seed = 1;
    int n = 8;
    int m = 2;
    Rational eps = Rational(1, 2);
    long p_lo = 1, p_hi = 20;
    long e_lo = 0, e_hi = 20;
    // Budget factors cycled across instances: U = alpha * sum(p).
    std::vector<Rational> alphas = {Rational(1, 2), Rational(1), Rational(2)};
    exact::OracleLimits oracle;
    bool with_times = false;  // runtimes make the CSV non-reproducible
    std::string dump_dir;     // when set, write instance/solution files per row
};

struct BenchResult {
    std::string csv;
    Rational worst_ratio1;  // max approx1/opt over rows with an oracle value
    Rational worst_ratio2;  // max eptas/opt
    bool any_cap_exceeded = false;
    bool any_error = false;
};

// Runs exact (when within oracle limits), the 2-approximation and the
// EPTAS on each generated instance; one CSV row per instance plus a
// summary row carrying the worst ratios.
BenchResult bench(const BenchConfig& config);

}  // namespace rejsched
