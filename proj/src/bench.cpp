#include "rejsched/bench.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "rejsched/approx1.hpp"
#include "rejsched/eptas.hpp"

namespace rejsched {

namespace {

std::string ratio_cell(const Rational& obj, const Rational& opt) {
    if (opt.is_zero()) return obj.is_zero() ? "1(1.000000)" : "inf";
    Rational r = obj / opt;
    return r.str() + "(" + r.decimal(6) + ")";
}

long elapsed_ms(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                from)
        .count();
}

void dump(const std::string& dir, const std::string& name, const std::string& content) {
    std::ofstream out(dir + "/" + name);
    out << content;
}

}  // namespace

BenchResult bench(const BenchConfig& config) {
    BenchResult result;
    result.worst_ratio1 = Rational(0);
    result.worst_ratio2 = Rational(0);

    std::ostringstream csv;
    csv << "id,n,m,seed,eps,opt,approx1,eptas,ratio1,ratio2,"
           "ms_exact,ms_approx1,ms_eptas,candidates,status\n";

    for (int id = 0; id < config.count; ++id) {
        GeneratorConfig gen;
        gen.n = config.n;
        gen.m = config.m;
        gen.seed = config.base_seed + static_cast<uint64_t>(id);
        gen.p_lo = config.p_lo;
        gen.p_hi = config.p_hi;
        gen.e_lo = config.e_lo;
        gen.e_hi = config.e_hi;
        gen.alpha = config.alphas[id % config.alphas.size()];
        Instance inst = generate(gen);

        csv << id << "," << inst.n() << "," << inst.m << "," << gen.seed << ","
            << config.eps.str() << ",";

        std::string status = "ok";
        try {
            bool with_opt =
                inst.n() <= config.oracle.max_jobs && inst.m <= config.oracle.max_machines;
            Rational opt;
            long ms_exact = 0, ms_approx1 = 0, ms_eptas = 0;
            if (with_opt) {
                auto t0 = std::chrono::steady_clock::now();
                opt = exact::solve_exact(inst, config.oracle).second.objective;
                ms_exact = elapsed_ms(t0);
            }
            auto t1 = std::chrono::steady_clock::now();
            auto [sol1, rep1] = approx1::run(inst);
            ms_approx1 = elapsed_ms(t1);
            auto t2 = std::chrono::steady_clock::now();
            eptas::Result r2 = eptas::run(inst, config.eps);
            ms_eptas = elapsed_ms(t2);
            if (r2.diag.cap_exceeded) {
                result.any_cap_exceeded = true;
                status = "cap_exceeded";
            }

            csv << (with_opt ? opt.str() : "") << "," << rep1.objective.str() << ","
                << r2.report.objective.str() << ",";
            if (with_opt) {
                Rational r1(1), r2r(1);
                if (!opt.is_zero()) {
                    r1 = rep1.objective / opt;
                    r2r = r2.report.objective / opt;
                }
                result.worst_ratio1 = max(result.worst_ratio1, r1);
                result.worst_ratio2 = max(result.worst_ratio2, r2r);
                csv << ratio_cell(rep1.objective, opt) << "," << ratio_cell(r2.report.objective, opt);
            } else {
                csv << ",";
            }
            csv << ",";
            if (config.with_times)
                csv << ms_exact << "," << ms_approx1 << "," << ms_eptas;
            else
                csv << ",,";
            csv << "," << r2.diag.candidates << "," << status << "\n";

            if (!config.dump_dir.empty()) {
                dump(config.dump_dir, "instance_" + std::to_string(id) + ".json",
                     serialize_instance(inst));
                dump(config.dump_dir, "solution_approx1_" + std::to_string(id) + ".json",
                     serialize_solution(sol1));
                dump(config.dump_dir, "solution_eptas_" + std::to_string(id) + ".json",
                     serialize_solution(r2.solution));
            }
        } catch (const std::exception& ex) {
            result.any_error = true;
            csv << ",,,,,,,," << "error: " << ex.what() << "\n";
        }
    }

    csv << "summary,,,,,,,," << result.worst_ratio1.str() << "("
        << result.worst_ratio1.decimal(6) << ")," << result.worst_ratio2.str() << "("
        << result.worst_ratio2.decimal(6) << "),,,,,summary\n";
    result.csv = csv.str();
    return result;
}

}  // namespace rejsched
