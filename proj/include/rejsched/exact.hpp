#pragma once

#include <utility>
#include <vector>

#include "rejsched/instance.hpp"

namespace rejsched {
namespace exact {

struct OracleLimits {
    int max_jobs = 12;
    int max_machines = 3;
};

struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact optimal makespan of scheduling the given jobs on m machines,
// with an assignment achieving it (machine per job, in input order).
std::pair<Rational, std::vector<int>> min_makespan(const std::vector<Job>& jobs, int m,
                                                   const OracleLimits& limits = {});

// Global optimum by enumerating all accept subsets and solving each
// makespan subproblem exactly. Ties go to the lexicographically
// smallest decision vector.
std::pair<Solution, CostReport> solve_exact(const Instance& inst,
                                            const OracleLimits& limits = {});

}  // namespace exact
}  // namespace rejsched
