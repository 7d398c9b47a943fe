#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rejsched/approx1.hpp"
#include "rejsched/bench.hpp"
#include "rejsched/eptas.hpp"
#include "rejsched/exact.hpp"
#include "rejsched/generator.hpp"
#include "rejsched/instance.hpp"
#include "rejsched/lp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitParseError = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << content;
}

void print_report(const rejsched::Instance& inst, const rejsched::CostReport& rep) {
    std::cout << "makespan   " << rep.makespan.str() << "\n"
              << "penalty    " << rep.penalty_total.str() << "\n"
              << "objective  " << rep.objective.str() << " (" << rep.objective.decimal(6) << ")\n"
              << "budget_ok  " << (rep.budget_ok ? "yes" : "no") << " (U = " << inst.budget.str()
              << ")\n";
    for (size_t i = 0; i < rep.loads.size(); ++i)
        std::cout << "load[" << i << "]    " << rep.loads[i].str() << "\n";
}

// Plain-text LP: line 1 num_vars, line 2 objective, then one row per
// line as "c1 ... cn REL rhs" with REL in {<=, =, >=}.
rejsched::LinearProgram parse_lp_text(const std::string& text) {
    std::istringstream in(text);
    rejsched::LinearProgram lp;
    in >> lp.num_vars;
    if (!in || lp.num_vars <= 0) throw rejsched::ParseError("lp: bad variable count");
    std::string tok;
    for (int j = 0; j < lp.num_vars; ++j) {
        in >> tok;
        if (!in) throw rejsched::ParseError("lp: short objective row");
        lp.objective.push_back(rejsched::Rational::parse(tok));
    }
    while (true) {
        std::vector<rejsched::Rational> coeff;
        for (int j = 0; j < lp.num_vars; ++j) {
            in >> tok;
            if (!in) {
                if (j == 0) return lp;
                throw rejsched::ParseError("lp: short constraint row");
            }
            coeff.push_back(rejsched::Rational::parse(tok));
        }
        std::string rel;
        in >> rel >> tok;
        if (!in) throw rejsched::ParseError("lp: missing relation or rhs");
        rejsched::Relation r;
        if (rel == "<=") r = rejsched::Relation::Le;
        else if (rel == "=") r = rejsched::Relation::Eq;
        else if (rel == ">=") r = rejsched::Relation::Ge;
        else throw rejsched::ParseError("lp: bad relation '" + rel + "'");
        auto& row = lp.add_row(r, rejsched::Rational::parse(tok));
        row.coeff = std::move(coeff);
    }
}

}  // namespace

int main(int argc, char** argv) {
    using rejsched::Rational;

    CLI::App app{"Scheduling with rejection under a machine cost budget"};
    app.require_subcommand(1);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    rejsched::GeneratorConfig gen_cfg;
    std::string gen_out, gen_alpha = "1", gen_budget;
    gen_cmd->add_option("--n", gen_cfg.n, "Number of jobs")->required();
    gen_cmd->add_option("--m", gen_cfg.m, "Number of machines")->required();
    gen_cmd->add_option("--seed", gen_cfg.seed, "RNG seed");
    gen_cmd->add_option("--p-lo", gen_cfg.p_lo, "Min processing time");
    gen_cmd->add_option("--p-hi", gen_cfg.p_hi, "Max processing time");
    gen_cmd->add_option("--e-lo", gen_cfg.e_lo, "Min rejection penalty");
    gen_cmd->add_option("--e-hi", gen_cfg.e_hi, "Max rejection penalty");
    gen_cmd->add_option("--alpha", gen_alpha, "Budget = alpha * sum(p)");
    gen_cmd->add_option("--budget", gen_budget, "Absolute budget (overrides --alpha)");
    gen_cmd->add_option("--out", gen_out, "Output file, '-' for stdout");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
    std::string algo, solve_in, solve_out, eps_str = "1/2", diag_out;
    long max_candidates = 0;
    solve_cmd->add_option("--algo", algo, "approx1 | eptas | exact")->required();
    solve_cmd->add_option("--instance", solve_in, "Instance JSON file")->required();
    solve_cmd->add_option("--out", solve_out, "Solution JSON output");
    solve_cmd->add_option("--eps", eps_str, "Accuracy parameter for eptas");
    solve_cmd->add_option("--max-candidates", max_candidates, "LP-solve cap for eptas");
    solve_cmd->add_option("--diag", diag_out, "Diagnostics JSON output (eptas)");

    // check
    auto* check_cmd = app.add_subcommand("check", "Validate a solution file");
    std::string check_inst, check_sol;
    check_cmd->add_option("--instance", check_inst)->required();
    check_cmd->add_option("--solution", check_sol)->required();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Ratio benchmark, CSV on stdout");
    rejsched::BenchConfig bench_cfg;
    std::string bench_eps = "1/2", bench_alphas = "1/2,1,2", bench_out;
    bench_cmd->add_option("--count", bench_cfg.count, "Number of instances");
    bench_cmd->add_option("--seed", bench_cfg.base_seed, "Base seed");
    bench_cmd->add_option("--n", bench_cfg.n, "Jobs per instance");
    bench_cmd->add_option("--m", bench_cfg.m, "Machines");
    bench_cmd->add_option("--eps", bench_eps, "EPTAS accuracy");
    bench_cmd->add_option("--p-lo", bench_cfg.p_lo);
    bench_cmd->add_option("--p-hi", bench_cfg.p_hi);
    bench_cmd->add_option("--e-lo", bench_cfg.e_lo);
    bench_cmd->add_option("--e-hi", bench_cfg.e_hi);
    bench_cmd->add_option("--alphas", bench_alphas, "Comma-separated budget factors");
    bench_cmd->add_option("--out", bench_out, "CSV file, '-' for stdout");
    bench_cmd->add_flag("--times", bench_cfg.with_times, "Include runtimes (non-reproducible)");
    bench_cmd->add_option("--dump-solutions", bench_cfg.dump_dir,
                          "Directory for per-row instance/solution files");

    // lp solve (debug)
    auto* lp_cmd = app.add_subcommand("lp", "Linear program utilities");
    auto* lp_solve_cmd = lp_cmd->add_subcommand("solve", "Solve a plain-text LP");
    std::string lp_in;
    lp_solve_cmd->add_option("--file", lp_in, "Plain-text LP file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen_cmd) {
            if (!gen_budget.empty()) {
                gen_cfg.tight_budget = false;
                gen_cfg.absolute_budget = Rational::parse(gen_budget);
            } else {
                gen_cfg.alpha = Rational::parse(gen_alpha);
            }
            write_file(gen_out, rejsched::serialize_instance(rejsched::generate(gen_cfg)));
            return kExitOk;
        }

        if (*solve_cmd) {
            rejsched::Instance inst = rejsched::parse_instance(read_file(solve_in));
            rejsched::Solution sol;
            rejsched::CostReport rep;
            int exit_code = kExitOk;
            if (algo == "approx1") {
                std::tie(sol, rep) = rejsched::approx1::run(inst);
            } else if (algo == "exact") {
                std::tie(sol, rep) = rejsched::exact::solve_exact(inst);
            } else if (algo == "eptas") {
                rejsched::eptas::Caps caps;
                if (max_candidates > 0) caps.max_lp_solves = max_candidates;
                rejsched::eptas::Result r =
                    rejsched::eptas::run(inst, Rational::parse(eps_str), caps);
                sol = r.solution;
                rep = r.report;
                if (!diag_out.empty()) {
                    nlohmann::json d{{"rejection_types", r.diag.rejection_types},
                                     {"candidates", r.diag.candidates},
                                     {"lp_solves", r.diag.lp_solves},
                                     {"pruned", r.diag.pruned},
                                     {"cap_exceeded", r.diag.cap_exceeded},
                                     {"scale", r.diag.scale.str()}};
                    write_file(diag_out, d.dump(2) + "\n");
                }
                if (r.diag.cap_exceeded) {
                    std::cerr << "warning: candidate cap exceeded; result carries no "
                                 "approximation guarantee\n";
                    exit_code = kExitCapExceeded;
                }
            } else {
                std::cerr << "unknown --algo: " << algo << "\n";
                return 1;
            }
            if (!solve_out.empty()) write_file(solve_out, rejsched::serialize_solution(sol));
            print_report(inst, rep);
            return exit_code;
        }

        if (*check_cmd) {
            rejsched::Instance inst = rejsched::parse_instance(read_file(check_inst));
            rejsched::Solution sol = rejsched::parse_solution(read_file(check_sol));
            std::vector<std::string> violations;
            if (static_cast<int>(sol.decision.size()) != inst.n())
                violations.push_back("decision count " + std::to_string(sol.decision.size()) +
                                     " != job count " + std::to_string(inst.n()));
            for (size_t j = 0; j < sol.decision.size() && violations.empty(); ++j) {
                int d = sol.decision[j];
                if (d != rejsched::Solution::kRejected && (d < 0 || d >= inst.m))
                    violations.push_back("job " + std::to_string(j) + ": bad machine index " +
                                         std::to_string(d));
            }
            if (violations.empty()) {
                rejsched::CostReport rep = rejsched::evaluate(inst, sol);
                print_report(inst, rep);
                if (!rep.budget_ok) {
                    Rational total;
                    for (const auto& t : rep.loads) total += t;
                    std::cerr << "violation: accepted load " << total.str() << " exceeds budget "
                              << inst.budget.str() << " by " << (total - inst.budget).str()
                              << "\n";
                    return kExitInfeasible;
                }
                return kExitOk;
            }
            for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
            return kExitInfeasible;
        }

        if (*bench_cmd) {
            bench_cfg.eps = Rational::parse(bench_eps);
            bench_cfg.alphas.clear();
            std::stringstream ss(bench_alphas);
            std::string tok;
            while (std::getline(ss, tok, ',')) bench_cfg.alphas.push_back(Rational::parse(tok));
            if (bench_cfg.alphas.empty()) throw std::runtime_error("bench: empty --alphas");
            rejsched::BenchResult res = rejsched::bench(bench_cfg);
            write_file(bench_out, res.csv);
            if (res.any_cap_exceeded) return kExitCapExceeded;
            return res.any_error ? 1 : kExitOk;
        }

        if (*lp_solve_cmd) {
            rejsched::VertexSolution v = rejsched::solve(parse_lp_text(read_file(lp_in)));
            switch (v.status) {
                case rejsched::LpStatus::Infeasible: std::cout << "infeasible\n"; break;
                case rejsched::LpStatus::Unbounded: std::cout << "unbounded\n"; break;
                case rejsched::LpStatus::Optimal:
                    std::cout << "optimal " << v.objective_value.str() << "\n";
                    for (size_t j = 0; j < v.x.size(); ++j)
                        std::cout << "x" << j << " = " << v.x[j].str() << "\n";
                    break;
            }
            return kExitOk;
        }
    } catch (const rejsched::ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
