#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rejsched/instance.hpp"
#include "rejsched/lp.hpp"

namespace rejsched {
namespace eptas {

struct EptasParams {
    Rational epsilon;     // 1/epsilon integral
    int m = 1;
    Rational delta_big;   // threshold for risky / large jobs
    Rational delta_small; // penalty rounding grid
};

// Largest 1/k <= eps_raw with integral k.
Rational sanitize_epsilon(const Rational& eps_raw);
EptasParams make_params(const Rational& eps, int m);

struct ZeroCost : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scales the instance by the 2-approximation's cost Z, so the optimum
// of the result lies in [1/2, 1]. Throws ZeroCost when Z = 0 (the
// 2-approximation already found an optimum).
std::pair<Instance, Rational> normalize_by_approx1(const Instance& inst);

struct PenaltyGroup {
    Rational rounded_e;     // common rounded penalty, a multiple of delta_small
    std::vector<int> jobs;  // sorted by non-increasing p, ties by id
};

struct RestrictedInstance {
    Instance base;                   // the normalized instance
    std::vector<Rational> rounded_e; // e'_j per job
    std::vector<int> risky;          // e_j >= delta_big
    std::vector<int> safe;
    std::vector<PenaltyGroup> groups;  // nonempty groups, ascending rounded_e
};

RestrictedInstance build_restricted(const Instance& normalized, const EptasParams& params);

// k[i] = number of jobs rejected from groups[i]; sum bounded by 1/delta_big.
struct RejectionType {
    std::vector<int> k;
};

// Yields rejection types first-group-fastest; returns false when more
// than `cap` tuples would be produced.
bool enumerate_rejection_types(const RestrictedInstance& restricted, const EptasParams& params,
                               long cap, const std::function<void(const RejectionType&)>& fn);

struct RiskyDecisions {
    std::vector<int> accepted;  // A1'
    std::vector<int> rejected;  // R1'
    std::vector<int> large;     // accepted with p >= delta_big
    std::vector<int> tiny;      // accepted with p < delta_big
};

// Rejects the k[i] largest jobs of each group. Returns nullopt when the
// branch cannot belong to a near-optimal schedule (too many large jobs,
// or forced accepts already over budget).
std::optional<RiskyDecisions> apply_rejection_type(const RestrictedInstance& restricted,
                                                   const EptasParams& params,
                                                   const RejectionType& type);

bool enumerate_large_assignments(int num_large, int m, long cap,
                                 const std::function<void(const std::vector<int>&)>& fn);

// LP over C_max, machine choices for tiny/safe jobs, and rejection
// variables for safe jobs, with large jobs fixed by `assignment`.
struct AssignLp {
    LinearProgram lp;
    std::vector<int> tiny;  // id order
    std::vector<int> safe;  // id order
    int m = 0;

    int cmax_var() const { return 0; }
    int tiny_y(int t, int machine) const { return 1 + t * m + machine; }
    int safe_y(int s, int machine) const {
        return 1 + static_cast<int>(tiny.size()) * m + s * (m + 1) + machine;
    }
    int safe_x(int s) const { return safe_y(s, m); }
};

AssignLp build_assign_lp(const RestrictedInstance& restricted, const RiskyDecisions& decisions,
                         const std::vector<int>& assignment);

struct AssignLpRounding {
    std::vector<std::pair<int, int>> placed;  // (job id, machine) from integral y
    std::vector<int> t2;                      // tiny jobs without an integral y
    std::vector<int> s2;                      // safe jobs with x = 1
    std::vector<int> s3;                      // remaining safe jobs, rejected
    Rational lp_makespan;
};

AssignLpRounding round_assign_lp(const VertexSolution& vertex, const AssignLp& layout);

struct Caps {
    long max_rejection_types = 1'000'000;
    long max_assignments = 1'000'000;
    long max_lp_solves = 10'000'000;
};

struct Diagnostics {
    long rejection_types = 0;
    long candidates = 0;
    long lp_solves = 0;
    long pruned = 0;
    bool cap_exceeded = false;
    Rational scale;  // the cost used for normalization
};

struct Result {
    Solution solution;
    CostReport report;
    Diagnostics diag;
};

// Full pipeline: normalize by the 2-approximation's cost, build the
// restricted instance, enumerate (rejection type x large assignment)
// branches, solve and round the assignment LP of each, and return the
// cheapest candidate measured on the original instance. The
// 2-approximation's own solution and all-reject are always candidates.
Result run(const Instance& inst, const Rational& eps_raw, const Caps& caps = {});

}  // namespace eptas
}  // namespace rejsched
