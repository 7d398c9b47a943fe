#pragma once

#include <vector>

#include "rejsched/instance.hpp"

namespace rejsched {

struct Assignment {
    std::vector<int> machine_of;     // parallel to the input job list
    std::vector<Rational> loads;     // per machine
};

// Graham's list scheduling: place each job, in the given order, on a
// currently least-loaded machine. Ties go to the lowest machine index.
Assignment list_schedule(const std::vector<Job>& jobs, int m);

}  // namespace rejsched
