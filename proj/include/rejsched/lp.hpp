#pragma once

#include <optional>
#include <vector>

#include "rejsched/rational.hpp"

namespace rejsched {

enum class Relation { Le, Eq, Ge };

struct LpRow {
    std::vector<Rational> coeff;  // length num_vars
    Relation rel = Relation::Le;
    Rational rhs;
};

// min c.x subject to the rows, x >= 0, optional per-variable upper bounds.
struct LinearProgram {
    int num_vars = 0;
    std::vector<Rational> objective;
    std::vector<LpRow> rows;
    std::vector<std::optional<Rational>> upper;  // empty or length num_vars

    LpRow& add_row(Relation rel, Rational rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct VertexSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> x;
    Rational objective_value;
};

// Two-phase primal simplex on an exact rational tableau, Bland's rule
// throughout. Optimal results are basic: the number of strictly positive
// structural variables never exceeds the number of constraint rows
// (upper bounds count as rows); this is checked on every solve.
VertexSolution solve(const LinearProgram& lp);

}  // namespace rejsched
