#include "rejsched/exact.hpp"

#include <algorithm>

namespace rejsched {
namespace exact {

namespace {

// First feasible assignment found with machines tried in ascending
// order per job is the lexicographically smallest one with makespan
// <= target. Machines with equal loads are interchangeable, so only
// the first of each load value is tried.
bool lex_assign(const std::vector<Rational>& p, size_t j, int m, const Rational& target,
                std::vector<Rational>& loads, std::vector<int>& out) {
    if (j == p.size()) return true;
    for (int i = 0; i < m; ++i) {
        bool dup = false;
        for (int k = 0; k < i; ++k)
            if (loads[k] == loads[i]) { dup = true; break; }
        if (dup) continue;
        if (loads[i] + p[j] > target) continue;
        loads[i] += p[j];
        out[j] = i;
        if (lex_assign(p, j + 1, m, target, loads, out)) return true;
        loads[i] -= p[j];
    }
    return false;
}

struct MakespanTable {
    int n = 0;
    std::vector<Rational> sum_p;              // per accept mask
    std::vector<std::vector<Rational>> best;  // best[k][mask]: k+1 machines

    MakespanTable(const std::vector<Rational>& p, int m) : n(static_cast<int>(p.size())) {
        const size_t full = size_t{1} << n;
        sum_p.assign(full, Rational());
        for (size_t mask = 1; mask < full; ++mask) {
            int low = __builtin_ctzll(mask);
            sum_p[mask] = sum_p[mask & (mask - 1)] + p[low];
        }
        best.assign(m, std::vector<Rational>(full, Rational()));
        best[0] = sum_p;
        for (int k = 1; k < m; ++k) {
            for (size_t mask = 1; mask < full; ++mask) {
                // One machine takes submask `a`, the remaining k machines
                // handle the rest.
                Rational b = best[k - 1][mask];
                for (size_t a = mask; a != 0; a = (a - 1) & mask) {
                    Rational cand = max(sum_p[a], best[k - 1][mask & ~a]);
                    if (cand < b) b = cand;
                }
                best[k][mask] = b;
            }
        }
    }
};

// Decision-vector order: rejected (-1) sorts before accepted, so for
// distinct accept masks the tie-break depends only on the first
// differing accept bit.
bool mask_lex_less(size_t a, size_t b, int n) {
    for (int j = 0; j < n; ++j) {
        bool aj = (a >> j) & 1, bj = (b >> j) & 1;
        if (aj != bj) return !aj;
    }
    return false;
}

}  // namespace

std::pair<Rational, std::vector<int>> min_makespan(const std::vector<Job>& jobs, int m,
                                                   const OracleLimits& limits) {
    if (static_cast<int>(jobs.size()) > limits.max_jobs)
        throw TooLarge("min_makespan: more than " + std::to_string(limits.max_jobs) + " jobs");
    if (m < 1) throw std::invalid_argument("min_makespan: m must be >= 1");

    std::vector<Rational> p;
    for (const auto& j : jobs) p.push_back(j.p);

    MakespanTable table(p, m);
    const size_t full = (size_t{1} << p.size()) - 1;
    Rational opt = p.empty() ? Rational() : table.best[m - 1][full];

    std::vector<int> assign(p.size(), 0);
    std::vector<Rational> loads(m, Rational());
    if (!p.empty() && !lex_assign(p, 0, m, opt, loads, assign))
        throw std::logic_error("min_makespan: reconstruction failed");
    return {opt, assign};
}

std::pair<Solution, CostReport> solve_exact(const Instance& inst, const OracleLimits& limits) {
    if (inst.n() > limits.max_jobs)
        throw TooLarge("solve_exact: more than " + std::to_string(limits.max_jobs) + " jobs");
    if (inst.m > limits.max_machines)
        throw TooLarge("solve_exact: more than " + std::to_string(limits.max_machines) +
                       " machines");

    const int n = inst.n();
    std::vector<Rational> p, e;
    Rational total_e;
    for (const auto& j : inst.jobs) {
        p.push_back(j.p);
        e.push_back(j.e);
        total_e += j.e;
    }

    MakespanTable table(p, inst.m);
    std::vector<Rational> sum_e(size_t{1} << n, Rational());
    for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
        int low = __builtin_ctzll(mask);
        sum_e[mask] = sum_e[mask & (mask - 1)] + e[low];
    }

    bool have = false;
    Rational best_obj;
    size_t best_mask = 0;
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        if (table.sum_p[mask] > inst.budget) continue;
        Rational obj = table.best[inst.m - 1][mask] + (total_e - sum_e[mask]);
        if (!have || obj < best_obj ||
            (obj == best_obj && mask_lex_less(mask, best_mask, n))) {
            have = true;
            best_obj = obj;
            best_mask = mask;
        }
    }

    std::vector<Job> accepted;
    for (int j = 0; j < n; ++j)
        if ((best_mask >> j) & 1) accepted.push_back(inst.jobs[j]);
    auto [mk, assign] = min_makespan(accepted, inst.m, limits);

    Solution sol = Solution::all_reject(n);
    size_t t = 0;
    for (int j = 0; j < n; ++j)
        if ((best_mask >> j) & 1) sol.decision[j] = assign[t++];
    return {sol, evaluate(inst, sol)};
}

}  // namespace exact
}  // namespace rejsched
