#include "rejsched/list_schedule.hpp"

#include <stdexcept>

namespace rejsched {

Assignment list_schedule(const std::vector<Job>& jobs, int m) {
    if (m < 1) throw std::invalid_argument("list_schedule: m must be >= 1");
    Assignment a;
    a.loads.assign(m, Rational());
    a.machine_of.reserve(jobs.size());
    for (const auto& job : jobs) {
        int best = 0;
        for (int i = 1; i < m; ++i)
            if (a.loads[i] < a.loads[best]) best = i;
        a.loads[best] += job.p;
        a.machine_of.push_back(best);
    }
    return a;
}

}  // namespace rejsched
