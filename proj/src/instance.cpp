#include "rejsched/instance.hpp"

#include <json.hpp>

namespace rejsched {

using nlohmann::json;

Rational Instance::total_p() const {
    Rational s;
    for (const auto& j : jobs) s += j.p;
    return s;
}

CostReport evaluate(const Instance& inst, const Solution& sol) {
    if (static_cast<int>(sol.decision.size()) != inst.n())
        throw std::invalid_argument("MismatchedLength: solution has " +
                                    std::to_string(sol.decision.size()) + " decisions, instance has " +
                                    std::to_string(inst.n()) + " jobs");
    CostReport r;
    r.loads.assign(inst.m, Rational());
    for (int j = 0; j < inst.n(); ++j) {
        int d = sol.decision[j];
        if (d == Solution::kRejected) {
            r.penalty_total += inst.jobs[j].e;
        } else if (d < 0 || d >= inst.m) {
            throw std::invalid_argument("BadMachineIndex: job " + std::to_string(j) +
                                        " assigned to machine " + std::to_string(d));
        } else {
            r.loads[d] += inst.jobs[j].p;
        }
    }
    Rational total;
    for (const auto& t : r.loads) {
        r.makespan = max(r.makespan, t);
        total += t;
    }
    r.objective = r.makespan + r.penalty_total;
    r.budget_ok = total <= inst.budget;
    return r;
}

Instance normalize(const Instance& inst, const Rational& scale) {
    if (scale.sign() <= 0) throw std::invalid_argument("NonPositiveScale");
    Instance out = inst;
    for (auto& j : out.jobs) {
        j.p /= scale;
        j.e /= scale;
    }
    out.budget /= scale;
    return out;
}

namespace {

Rational rational_field(const json& v, const std::string& what) {
    Rational r;
    if (v.is_number_integer()) {
        r = Rational(static_cast<long>(v.get<int64_t>()));
    } else if (v.is_string()) {
        r = Rational::parse(v.get<std::string>());
    } else {
        throw ParseError(what + ": expected integer or rational string");
    }
    if (r.sign() < 0) throw ParseError("NegativeValue: " + what + " = " + r.str());
    return r;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw ParseError(std::string("ParseError: ") + ex.what());
    }
    if (!doc.is_object()) throw ParseError("instance: expected a JSON object");
    if (!doc.contains("m") || !doc["m"].is_number_integer() || doc["m"].get<int64_t>() < 1)
        throw ParseError("MissingMachines: field 'm' must be an integer >= 1");
    if (!doc.contains("budget")) throw ParseError("MissingField: budget");
    if (!doc.contains("jobs") || !doc["jobs"].is_array())
        throw ParseError("MissingField: jobs (array)");

    Instance inst;
    inst.m = static_cast<int>(doc["m"].get<int64_t>());
    inst.budget = rational_field(doc["budget"], "budget");
    int id = 0;
    for (const auto& jj : doc["jobs"]) {
        if (!jj.is_object() || !jj.contains("p") || !jj.contains("e"))
            throw ParseError("MissingField: job " + std::to_string(id) + " needs 'p' and 'e'");
        Job job;
        job.id = id;
        job.p = rational_field(jj["p"], "jobs[" + std::to_string(id) + "].p");
        job.e = rational_field(jj["e"], "jobs[" + std::to_string(id) + "].e");
        inst.jobs.push_back(std::move(job));
        ++id;
    }
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    json doc;
    doc["m"] = inst.m;
    doc["budget"] = inst.budget.str();
    doc["jobs"] = json::array();
    for (const auto& j : inst.jobs)
        doc["jobs"].push_back({{"p", j.p.str()}, {"e", j.e.str()}});
    return doc.dump(2) + "\n";
}

Solution parse_solution(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw ParseError(std::string("ParseError: ") + ex.what());
    }
    if (!doc.is_object() || !doc.contains("decisions") || !doc["decisions"].is_array())
        throw ParseError("MissingField: decisions (array)");
    Solution sol;
    for (const auto& d : doc["decisions"]) {
        if (!d.is_number_integer()) throw ParseError("decisions: expected integers");
        sol.decision.push_back(static_cast<int>(d.get<int64_t>()));
    }
    return sol;
}

std::string serialize_solution(const Solution& sol) {
    json doc;
    doc["decisions"] = sol.decision;
    return doc.dump() + "\n";
}

}  // namespace rejsched
