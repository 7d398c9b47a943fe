#include "rejsched/eptas.hpp"

#include <algorithm>
#include <map>

#include "rejsched/approx1.hpp"

namespace rejsched {
namespace eptas {

Rational sanitize_epsilon(const Rational& eps_raw) {
    if (eps_raw.sign() <= 0 || eps_raw >= Rational(1))
        throw std::invalid_argument("EpsilonOutOfRange: need 0 < eps < 1");
    mpz_class k = (Rational(1) / eps_raw).ceil();
    return Rational(mpz_class(1), k);
}

EptasParams make_params(const Rational& eps, int m) {
    EptasParams params;
    params.epsilon = eps;
    params.m = m;
    params.delta_big = eps / Rational(4L * m + 12);
    params.delta_small = eps * params.delta_big / Rational(2);
    return params;
}

std::pair<Instance, Rational> normalize_by_approx1(const Instance& inst) {
    Rational z = approx1::run(inst).second.objective;
    if (z.is_zero()) throw ZeroCost("normalize_by_approx1: approximation cost is 0");
    return {normalize(inst, z), z};
}

RestrictedInstance build_restricted(const Instance& normalized, const EptasParams& params) {
    RestrictedInstance r;
    r.base = normalized;
    r.rounded_e.reserve(normalized.n());
    std::map<Rational, std::vector<int>> by_penalty;
    for (const auto& job : normalized.jobs) {
        if (job.e >= params.delta_big) {
            Rational rounded =
                Rational((job.e / params.delta_small).ceil(), mpz_class(1)) * params.delta_small;
            r.rounded_e.push_back(rounded);
            r.risky.push_back(job.id);
            by_penalty[rounded].push_back(job.id);
        } else {
            r.rounded_e.push_back(job.e);
            r.safe.push_back(job.id);
        }
    }
    for (auto& [penalty, ids] : by_penalty) {
        std::sort(ids.begin(), ids.end(), [&](int a, int b) {
            if (normalized.jobs[a].p != normalized.jobs[b].p)
                return normalized.jobs[b].p < normalized.jobs[a].p;
            return a < b;
        });
        r.groups.push_back({penalty, std::move(ids)});
    }
    return r;
}

namespace {

long rejection_budget(const EptasParams& params) {
    // 1/delta_big = (4m+12)/eps, an integer by construction.
    return static_cast<long>((Rational(1) / params.delta_big).ceil().get_si());
}

bool rec_types(const RestrictedInstance& restricted, int g, long remaining, RejectionType& type,
               long cap, long& emitted, const std::function<void(const RejectionType&)>& fn) {
    if (g < 0) {
        if (emitted >= cap) return false;
        ++emitted;
        fn(type);
        return true;
    }
    int limit = std::min<long>(remaining, restricted.groups[g].jobs.size());
    for (int k = 0; k <= limit; ++k) {
        type.k[g] = k;
        if (!rec_types(restricted, g - 1, remaining - k, type, cap, emitted, fn)) return false;
    }
    type.k[g] = 0;
    return true;
}

}  // namespace

bool enumerate_rejection_types(const RestrictedInstance& restricted, const EptasParams& params,
                               long cap, const std::function<void(const RejectionType&)>& fn) {
    RejectionType type;
    type.k.assign(restricted.groups.size(), 0);
    long emitted = 0;
    return rec_types(restricted, static_cast<int>(restricted.groups.size()) - 1,
                     rejection_budget(params), type, cap, emitted, fn);
}

std::optional<RiskyDecisions> apply_rejection_type(const RestrictedInstance& restricted,
                                                   const EptasParams& params,
                                                   const RejectionType& type) {
    RiskyDecisions d;
    for (size_t g = 0; g < restricted.groups.size(); ++g) {
        const auto& ids = restricted.groups[g].jobs;
        for (size_t t = 0; t < ids.size(); ++t) {
            if (t < static_cast<size_t>(type.k[g]))
                d.rejected.push_back(ids[t]);
            else
                d.accepted.push_back(ids[t]);
        }
    }
    std::sort(d.accepted.begin(), d.accepted.end());
    std::sort(d.rejected.begin(), d.rejected.end());

    Rational accepted_p;
    for (int id : d.accepted) {
        const Rational& p = restricted.base.jobs[id].p;
        accepted_p += p;
        if (p >= params.delta_big)
            d.large.push_back(id);
        else
            d.tiny.push_back(id);
    }
    if (accepted_p > restricted.base.budget) return std::nullopt;

    // A near-optimal schedule fits at most (1 + eps/2) m / delta_big
    // large jobs.
    Rational large_bound = (Rational(1) + params.epsilon / Rational(2)) *
                           Rational(static_cast<long>(params.m)) / params.delta_big;
    if (Rational(static_cast<long>(d.large.size())) > large_bound) return std::nullopt;
    return d;
}

bool enumerate_large_assignments(int num_large, int m, long cap,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> assign(num_large, 0);
    long emitted = 0;
    while (true) {
        if (emitted >= cap) return false;
        ++emitted;
        fn(assign);
        int pos = num_large - 1;
        while (pos >= 0 && assign[pos] == m - 1) assign[pos--] = 0;
        if (pos < 0) return true;
        ++assign[pos];
    }
}

AssignLp build_assign_lp(const RestrictedInstance& restricted, const RiskyDecisions& decisions,
                         const std::vector<int>& assignment) {
    const Instance& inst = restricted.base;
    AssignLp out;
    out.tiny = decisions.tiny;
    out.safe = restricted.safe;
    out.m = inst.m;
    const int nt = static_cast<int>(out.tiny.size());
    const int ns = static_cast<int>(out.safe.size());
    const int m = inst.m;

    Rational accepted_p;
    for (int id : decisions.accepted) accepted_p += inst.jobs[id].p;
    Rational residual = inst.budget - accepted_p;
    if (residual.sign() < 0)
        throw std::invalid_argument("InfeasibleBudget: forced accepts exceed the budget");

    std::vector<Rational> fixed_load(m, Rational());
    for (size_t i = 0; i < decisions.large.size(); ++i)
        fixed_load[assignment[i]] += inst.jobs[decisions.large[i]].p;

    LinearProgram& lp = out.lp;
    lp.num_vars = 1 + m * nt + (m + 1) * ns;
    lp.objective.assign(lp.num_vars, Rational());
    lp.objective[out.cmax_var()] = Rational(1);
    for (int s = 0; s < ns; ++s) lp.objective[out.safe_x(s)] = restricted.rounded_e[out.safe[s]];

    for (int t = 0; t < nt; ++t) {
        auto& row = lp.add_row(Relation::Eq, Rational(1));
        for (int i = 0; i < m; ++i) row.coeff[out.tiny_y(t, i)] = Rational(1);
    }
    for (int s = 0; s < ns; ++s) {
        auto& row = lp.add_row(Relation::Eq, Rational(1));
        row.coeff[out.safe_x(s)] = Rational(1);
        for (int i = 0; i < m; ++i) row.coeff[out.safe_y(s, i)] = Rational(1);
    }
    for (int i = 0; i < m; ++i) {
        auto& row = lp.add_row(Relation::Le, -fixed_load[i]);
        row.coeff[out.cmax_var()] = Rational(-1);
        for (int t = 0; t < nt; ++t) row.coeff[out.tiny_y(t, i)] = inst.jobs[out.tiny[t]].p;
        for (int s = 0; s < ns; ++s) row.coeff[out.safe_y(s, i)] = inst.jobs[out.safe[s]].p;
    }
    // sum_S (1 - x_j) p_j <= residual, written over the x variables.
    Rational safe_p;
    for (int s = 0; s < ns; ++s) safe_p += inst.jobs[out.safe[s]].p;
    auto& budget_row = lp.add_row(Relation::Le, residual - safe_p);
    for (int s = 0; s < ns; ++s) budget_row.coeff[out.safe_x(s)] = -inst.jobs[out.safe[s]].p;

    return out;
}

AssignLpRounding round_assign_lp(const VertexSolution& vertex, const AssignLp& layout) {
    AssignLpRounding r;
    r.lp_makespan = vertex.x[layout.cmax_var()];
    const Rational one(1);
    for (size_t t = 0; t < layout.tiny.size(); ++t) {
        int machine = -1;
        for (int i = 0; i < layout.m; ++i)
            if (vertex.x[layout.tiny_y(static_cast<int>(t), i)] == one) { machine = i; break; }
        if (machine >= 0)
            r.placed.emplace_back(layout.tiny[t], machine);
        else
            r.t2.push_back(layout.tiny[t]);
    }
    for (size_t s = 0; s < layout.safe.size(); ++s) {
        int machine = -1;
        for (int i = 0; i < layout.m; ++i)
            if (vertex.x[layout.safe_y(static_cast<int>(s), i)] == one) { machine = i; break; }
        if (machine >= 0) {
            r.placed.emplace_back(layout.safe[s], machine);
        } else if (vertex.x[layout.safe_x(static_cast<int>(s))] == one) {
            r.s2.push_back(layout.safe[s]);
        } else {
            r.s3.push_back(layout.safe[s]);
        }
    }
    if (static_cast<int>(r.t2.size() + r.s3.size()) > layout.m + 1)
        throw std::logic_error("rounding: basic solution left too many fractional jobs");
    if (static_cast<int>(r.t2.size()) > 2 * layout.m)
        throw std::logic_error("RoundingOverflow: more than 2m leftover tiny jobs");
    return r;
}

Result run(const Instance& inst, const Rational& eps_raw, const Caps& caps) {
    Result res;
    auto [base_sol, base_rep] = approx1::run(inst);
    res.diag.scale = base_rep.objective;

    res.solution = std::move(base_sol);
    res.report = std::move(base_rep);
    // Cost 0 means the 2-approximation already found an optimum.
    if (res.report.objective.is_zero()) return res;

    {
        Solution rej = Solution::all_reject(inst.n());
        CostReport rep = evaluate(inst, rej);
        if (rep.objective < res.report.objective) {
            res.solution = std::move(rej);
            res.report = std::move(rep);
        }
    }

    Rational eps = sanitize_epsilon(eps_raw);
    EptasParams params = make_params(eps, inst.m);
    Instance normalized = normalize(inst, res.diag.scale);
    RestrictedInstance restricted = build_restricted(normalized, params);

    Diagnostics& diag = res.diag;
    bool types_ok = enumerate_rejection_types(
        restricted, params, caps.max_rejection_types, [&](const RejectionType& type) {
            ++diag.rejection_types;
            auto decisions = apply_rejection_type(restricted, params, type);
            if (!decisions) {
                ++diag.pruned;
                return;
            }
            bool assigns_ok = enumerate_large_assignments(
                static_cast<int>(decisions->large.size()), inst.m, caps.max_assignments,
                [&](const std::vector<int>& assignment) {
                    if (diag.lp_solves >= caps.max_lp_solves) {
                        diag.cap_exceeded = true;
                        return;
                    }
                    AssignLp layout = build_assign_lp(restricted, *decisions, assignment);
                    ++diag.lp_solves;
                    VertexSolution vertex = solve(layout.lp);
                    if (vertex.status != LpStatus::Optimal)
                        throw std::logic_error("assignment LP must be feasible and bounded");
                    AssignLpRounding rounding = round_assign_lp(vertex, layout);

                    Solution sol = Solution::all_reject(inst.n());
                    for (size_t i = 0; i < decisions->large.size(); ++i)
                        sol.decision[decisions->large[i]] = assignment[i];
                    for (const auto& [id, machine] : rounding.placed) sol.decision[id] = machine;
                    for (size_t t = 0; t < rounding.t2.size(); ++t)
                        sol.decision[rounding.t2[t]] = static_cast<int>(t) % inst.m;

                    ++diag.candidates;
                    CostReport rep = evaluate(inst, sol);
                    if (rep.objective < res.report.objective) {
                        res.solution = std::move(sol);
                        res.report = std::move(rep);
                    }
                });
            if (!assigns_ok) diag.cap_exceeded = true;
        });
    if (!types_ok) diag.cap_exceeded = true;
    return res;
}

}  // namespace eptas
}  // namespace rejsched
