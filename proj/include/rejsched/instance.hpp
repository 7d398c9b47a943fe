#pragma once

#include <string>
#include <vector>

#include "rejsched/rational.hpp"

namespace rejsched {

struct Job {
    int id = 0;
    Rational p;  // processing time, >= 0
    Rational e;  // rejection penalty, >= 0
};

struct Instance {
    std::vector<Job> jobs;
    int m = 1;        // machine count
    Rational budget;  // bound U on total accepted processing time

    int n() const { return static_cast<int>(jobs.size()); }
    Rational total_p() const;
};

// Per-job decision: kRejected, or a machine index in [0, m).
struct Solution {
    static constexpr int kRejected = -1;
    std::vector<int> decision;

    static Solution all_reject(int n) { return Solution{std::vector<int>(n, kRejected)}; }
};

struct CostReport {
    std::vector<Rational> loads;  // t_i per machine
    Rational makespan;
    Rational penalty_total;
    Rational objective;  // makespan + penalty_total
    bool budget_ok = false;
};

// Exact cost of a solution: loads, makespan, total penalty, objective,
// and whether sum of loads stays within the budget.
CostReport evaluate(const Instance& inst, const Solution& sol);

// Divides every p_j, e_j and the budget by `scale`. Objectives scale by
// 1/scale; the budget-feasible set of solutions is unchanged.
Instance normalize(const Instance& inst, const Rational& scale);

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

Solution parse_solution(const std::string& text);
std::string serialize_solution(const Solution& sol);

}  // namespace rejsched
