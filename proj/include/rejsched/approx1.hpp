#pragma once

#include <vector>

#include "rejsched/instance.hpp"
#include "rejsched/lp.hpp"

namespace rejsched {
namespace approx1 {

// Candidate (p*_max, e*_max) pair; 0 sentinels cover the empty
// accepted / rejected sets of the optimum.
struct Guess {
    Rational p_threshold;
    Rational e_threshold;
};

struct GuessPartition {
    std::vector<int> a1;  // forced accepts: e_j > e_threshold
    std::vector<int> r1;  // forced rejects: p_j > p_threshold or p_j > m e_j
    std::vector<int> x;   // the rest, decided by the rejection LP
};

struct RejectionLpResult {
    std::vector<int> x1;  // accepted (y_j = 1)
    std::vector<int> x2;  // rejected (x_j = 1)
    std::vector<int> x3;  // fractional, |x3| <= 1
    Rational objective;
};

std::vector<Guess> enumerate_guesses(const Instance& inst);
GuessPartition partition_by_guess(const Instance& inst, const Guess& g);

// A guess is usable when its forced accepts fit in the budget.
bool is_valid(const Instance& inst, const GuessPartition& part);

// Optimal basic solution of the rejection LP via exact fractional
// knapsack: every x-job has e_j >= p_j/m, so acceptance gains
// e_j - p_j/m per job; fill the residual budget greedily by gain
// density. At most one job ends up fractional.
RejectionLpResult solve_rejection_lp(const Instance& inst, const GuessPartition& part);

// The same LP in generic form, for cross-checking against the simplex.
LinearProgram rejection_lp(const Instance& inst, const GuessPartition& part);

// Full algorithm: try every valid guess plus the all-reject fallback,
// list-schedule the accepts of each, return the cheapest.
std::pair<Solution, CostReport> run(const Instance& inst);

}  // namespace approx1
}  // namespace rejsched
