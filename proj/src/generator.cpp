#include "rejsched/generator.hpp"

#include <random>
#include <stdexcept>

namespace rejsched {

Instance generate(const GeneratorConfig& config) {
    if (config.n < 0 || config.m < 1 || config.p_lo > config.p_hi || config.e_lo > config.e_hi ||
        config.p_lo < 0 || config.e_lo < 0 || config.alpha.sign() < 0)
        throw std::invalid_argument("BadConfig");

    std::mt19937_64 rng(config.seed);
    auto draw = [&rng](long lo, long hi) {
        // Modulo mapping keeps the stream independent of the standard
        // library's distribution implementation.
        return lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1));
    };

    Instance inst;
    inst.m = config.m;
    for (int j = 0; j < config.n; ++j) {
        Job job;
        job.id = j;
        job.p = Rational(draw(config.p_lo, config.p_hi));
        job.e = Rational(draw(config.e_lo, config.e_hi));
        inst.jobs.push_back(std::move(job));
    }
    inst.budget = config.tight_budget ? config.alpha * inst.total_p() : config.absolute_budget;
    return inst;
}

}  // namespace rejsched
