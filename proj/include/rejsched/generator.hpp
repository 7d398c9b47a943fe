#pragma once

#include <cstdint>

#include "rejsched/instance.hpp"

namespace rejsched {

struct GeneratorConfig {
    int n = 0;
    int m = 1;
    uint64_t seed = 0;
    long p_lo = 1, p_hi = 20;
    long e_lo = 0, e_hi = 20;
    // tight: budget = alpha * sum(p); absolute: budget as given.
    bool tight_budget = true;
    Rational alpha = Rational(1);
    Rational absolute_budget;
};

// Deterministic from the seed: integer p, e drawn uniformly from the
// configured ranges.
Instance generate(const GeneratorConfig& config);

}  // namespace rejsched
