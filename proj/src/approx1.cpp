#include "rejsched/approx1.hpp"

#include <algorithm>
#include <set>

#include "rejsched/list_schedule.hpp"

namespace rejsched {
namespace approx1 {

std::vector<Guess> enumerate_guesses(const Instance& inst) {
    std::set<Rational> ps{Rational(0)}, es{Rational(0)};
    for (const auto& j : inst.jobs) {
        ps.insert(j.p);
        es.insert(j.e);
    }
    std::vector<Guess> out;
    out.reserve(ps.size() * es.size());
    for (const auto& p : ps)
        for (const auto& e : es) out.push_back({p, e});
    return out;
}

GuessPartition partition_by_guess(const Instance& inst, const Guess& g) {
    GuessPartition part;
    Rational m(static_cast<long>(inst.m));
    for (const auto& j : inst.jobs) {
        if (j.e > g.e_threshold)
            part.a1.push_back(j.id);
        else if (j.p > g.p_threshold || j.p > m * j.e)
            part.r1.push_back(j.id);
        else
            part.x.push_back(j.id);
    }
    return part;
}

bool is_valid(const Instance& inst, const GuessPartition& part) {
    Rational total;
    for (int id : part.a1) total += inst.jobs[id].p;
    return total <= inst.budget;
}

RejectionLpResult solve_rejection_lp(const Instance& inst, const GuessPartition& part) {
    if (!is_valid(inst, part))
        throw std::invalid_argument("InvalidGuess: forced accepts exceed the budget");

    Rational cap = inst.budget;
    for (int id : part.a1) cap -= inst.jobs[id].p;

    Rational m(static_cast<long>(inst.m));
    RejectionLpResult res;
    for (int id : part.x) res.objective += inst.jobs[id].e;

    // Zero-length jobs cost no capacity and their gain e_j - p_j/m = e_j
    // is nonnegative: accept unconditionally.
    std::vector<int> order;
    for (int id : part.x) {
        if (inst.jobs[id].p.is_zero()) {
            res.x1.push_back(id);
            res.objective -= inst.jobs[id].e;
        } else {
            order.push_back(id);
        }
    }

    auto gain = [&](int id) { return inst.jobs[id].e - inst.jobs[id].p / m; };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        Rational da = gain(a) / inst.jobs[a].p;
        Rational db = gain(b) / inst.jobs[b].p;
        if (da != db) return db < da;
        return a < b;
    });

    for (int id : order) {
        const Rational& p = inst.jobs[id].p;
        if (p <= cap) {
            res.x1.push_back(id);
            res.objective -= gain(id);
            cap -= p;
        } else if (cap.sign() > 0) {
            Rational y = cap / p;
            res.x3.push_back(id);
            res.objective -= y * gain(id);
            cap = Rational(0);
        } else {
            res.x2.push_back(id);
        }
    }
    std::sort(res.x1.begin(), res.x1.end());
    std::sort(res.x2.begin(), res.x2.end());
    if (res.x3.size() > 1)
        throw std::logic_error("rejection LP: basic solution with more than one fractional job");
    return res;
}

LinearProgram rejection_lp(const Instance& inst, const GuessPartition& part) {
    // Variables: y_j then x_j for each job of X, in id order.
    const int k = static_cast<int>(part.x.size());
    Rational m(static_cast<long>(inst.m));
    LinearProgram lp;
    lp.num_vars = 2 * k;
    lp.objective.assign(2 * k, Rational());
    for (int t = 0; t < k; ++t) {
        lp.objective[t] = inst.jobs[part.x[t]].p / m;
        lp.objective[k + t] = inst.jobs[part.x[t]].e;
    }
    Rational cap = inst.budget;
    for (int id : part.a1) cap -= inst.jobs[id].p;
    auto& budget_row = lp.add_row(Relation::Le, cap);
    for (int t = 0; t < k; ++t) budget_row.coeff[t] = inst.jobs[part.x[t]].p;
    for (int t = 0; t < k; ++t) {
        auto& row = lp.add_row(Relation::Eq, Rational(1));
        row.coeff[t] = Rational(1);
        row.coeff[k + t] = Rational(1);
    }
    return lp;
}

std::pair<Solution, CostReport> run(const Instance& inst) {
    Solution best = Solution::all_reject(inst.n());
    CostReport best_report = evaluate(inst, best);

    for (const Guess& g : enumerate_guesses(inst)) {
        GuessPartition part = partition_by_guess(inst, g);
        if (!is_valid(inst, part)) continue;
        RejectionLpResult lp = solve_rejection_lp(inst, part);

        std::vector<int> accepted = part.a1;
        accepted.insert(accepted.end(), lp.x1.begin(), lp.x1.end());
        std::sort(accepted.begin(), accepted.end());

        std::vector<Job> sched_jobs;
        sched_jobs.reserve(accepted.size());
        for (int id : accepted) sched_jobs.push_back(inst.jobs[id]);
        Assignment asg = list_schedule(sched_jobs, inst.m);

        Solution sol = Solution::all_reject(inst.n());
        for (size_t t = 0; t < accepted.size(); ++t)
            sol.decision[accepted[t]] = asg.machine_of[t];

        CostReport rep = evaluate(inst, sol);
        if (rep.objective < best_report.objective) {
            best = std::move(sol);
            best_report = std::move(rep);
        }
    }
    return {best, best_report};
}

}  // namespace approx1
}  // namespace rejsched
