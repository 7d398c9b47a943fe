#include "rejsched/lp.hpp"

#include <stdexcept>

namespace rejsched {

LpRow& LinearProgram::add_row(Relation rel, Rational rhs) {
    LpRow row;
    row.coeff.assign(num_vars, Rational());
    row.rel = rel;
    row.rhs = std::move(rhs);
    rows.push_back(std::move(row));
    return rows.back();
}

namespace {

// Dense tableau over all columns (structural + slack + artificial).
struct Tableau {
    int cols = 0;
    std::vector<std::vector<Rational>> a;  // rows x cols
    std::vector<Rational> b;               // rhs per row, kept >= 0
    std::vector<int> basis;                // basic column per row

    int rows() const { return static_cast<int>(a.size()); }

    void pivot(int r, int c) {
        Rational piv = a[r][c];
        for (int j = 0; j < cols; ++j) a[r][j] /= piv;
        b[r] /= piv;
        for (int i = 0; i < rows(); ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        basis[r] = c;
    }

    // Bland: entering column = lowest index with negative reduced cost,
    // leaving row = min ratio with ties broken by lowest basic column.
    // Returns false when no entering column exists (optimal), throws
    // Unbounded via the bool* flag.
    bool step(const std::vector<Rational>& cost, bool* unbounded) {
        std::vector<Rational> rc = cost;
        for (int i = 0; i < rows(); ++i) {
            const Rational& cb = cost[basis[i]];
            if (cb.is_zero()) continue;
            for (int j = 0; j < cols; ++j)
                if (!a[i][j].is_zero()) rc[j] -= cb * a[i][j];
        }
        int enter = -1;
        for (int j = 0; j < cols; ++j)
            if (rc[j].sign() < 0) { enter = j; break; }
        if (enter < 0) return false;

        int leave = -1;
        Rational best;
        for (int i = 0; i < rows(); ++i) {
            if (a[i][enter].sign() <= 0) continue;
            Rational ratio = b[i] / a[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) {
            *unbounded = true;
            return false;
        }
        pivot(leave, enter);
        return true;
    }
};

}  // namespace

VertexSolution solve(const LinearProgram& lp) {
    for (const auto& row : lp.rows)
        if (static_cast<int>(row.coeff.size()) != lp.num_vars)
            throw std::invalid_argument("lp: row length != num_vars");

    // Fold optional upper bounds into plain <= rows.
    std::vector<LpRow> rows = lp.rows;
    if (!lp.upper.empty()) {
        for (int v = 0; v < lp.num_vars; ++v) {
            if (!lp.upper[v]) continue;
            LpRow r;
            r.coeff.assign(lp.num_vars, Rational());
            r.coeff[v] = Rational(1);
            r.rel = Relation::Le;
            r.rhs = *lp.upper[v];
            rows.push_back(std::move(r));
        }
    }
    const int nrows = static_cast<int>(rows.size());
    const int n = lp.num_vars;

    // Count auxiliary columns after normalizing rhs signs.
    int nslack = 0, nart = 0;
    for (auto& row : rows) {
        if (row.rhs.sign() < 0) {
            for (auto& c : row.coeff) c = -c;
            row.rhs = -row.rhs;
            if (row.rel == Relation::Le) row.rel = Relation::Ge;
            else if (row.rel == Relation::Ge) row.rel = Relation::Le;
        }
        if (row.rel != Relation::Eq) ++nslack;
        if (row.rel != Relation::Le) ++nart;
    }

    Tableau t;
    t.cols = n + nslack + nart;
    t.a.assign(nrows, std::vector<Rational>(t.cols, Rational()));
    t.b.assign(nrows, Rational());
    t.basis.assign(nrows, -1);

    int slack_at = n, art_at = n + nslack;
    for (int i = 0; i < nrows; ++i) {
        for (int j = 0; j < n; ++j) t.a[i][j] = rows[i].coeff[j];
        t.b[i] = rows[i].rhs;
        switch (rows[i].rel) {
            case Relation::Le:
                t.a[i][slack_at] = Rational(1);
                t.basis[i] = slack_at++;
                break;
            case Relation::Ge:
                t.a[i][slack_at++] = Rational(-1);
                t.a[i][art_at] = Rational(1);
                t.basis[i] = art_at++;
                break;
            case Relation::Eq:
                t.a[i][art_at] = Rational(1);
                t.basis[i] = art_at++;
                break;
        }
    }

    VertexSolution out;

    if (nart > 0) {
        std::vector<Rational> phase1(t.cols, Rational());
        for (int j = n + nslack; j < t.cols; ++j) phase1[j] = Rational(1);
        bool unbounded = false;
        while (t.step(phase1, &unbounded)) {}
        if (unbounded) throw std::logic_error("lp: phase 1 unbounded");

        Rational art_sum;
        for (int i = 0; i < nrows; ++i)
            if (t.basis[i] >= n + nslack) art_sum += t.b[i];
        if (!art_sum.is_zero()) {
            out.status = LpStatus::Infeasible;
            return out;
        }
        // Pivot remaining (degenerate) artificials out of the basis.
        for (int i = 0; i < nrows; ++i) {
            if (t.basis[i] < n + nslack) continue;
            int c = -1;
            for (int j = 0; j < n + nslack; ++j)
                if (!t.a[i][j].is_zero()) { c = j; break; }
            if (c >= 0) t.pivot(i, c);
        }
        // Forbid artificials from re-entering.
        for (int i = 0; i < nrows; ++i)
            for (int j = n + nslack; j < t.cols; ++j) t.a[i][j] = Rational();
    }

    std::vector<Rational> cost(t.cols, Rational());
    for (int j = 0; j < n; ++j) cost[j] = lp.objective[j];
    // Artificial columns were zeroed but keep a positive cost so they
    // can never price in.
    for (int j = n + nslack; j < t.cols; ++j) cost[j] = Rational(1);

    bool unbounded = false;
    while (t.step(cost, &unbounded)) {}
    if (unbounded) {
        out.status = LpStatus::Unbounded;
        return out;
    }

    out.status = LpStatus::Optimal;
    out.x.assign(n, Rational());
    for (int i = 0; i < nrows; ++i) {
        int c = t.basis[i];
        if (c >= n + nslack && !t.b[i].is_zero())
            throw std::logic_error("lp: artificial left positive at optimum");
        if (c < n) out.x[c] = t.b[i];
    }
    for (int j = 0; j < n; ++j) out.objective_value += lp.objective[j] * out.x[j];

    int positive = 0;
    for (const auto& v : out.x)
        if (v.sign() > 0) ++positive;
    if (positive > nrows)
        throw std::logic_error("lp: solution is not basic");

    return out;
}

}  // namespace rejsched
