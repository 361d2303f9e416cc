#include "polycert/exact_lp.hpp"

#include "polycert/errors.hpp"

namespace polycert::lp {

namespace {

class Tableau {
public:
    // rows x (cols + 1); the last column is the right-hand side.
    Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * (cols + 1)) {}

    Rational& at(std::size_t r, std::size_t c) { return a_[r * (cols_ + 1) + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * (cols_ + 1) + c]; }
    Rational& rhs(std::size_t r) { return at(r, cols_); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void pivot(std::size_t pr, std::size_t pc, std::vector<Rational>& cost, Rational& cost_value) {
        const Rational inv = 1 / at(pr, pc);
        for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) *= inv;
        Rational factor;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr) continue;
            factor = at(r, pc);
            if (factor == 0) continue;
            for (std::size_t c = 0; c <= cols_; ++c) {
                if (at(pr, c) != 0) at(r, c) -= factor * at(pr, c);
            }
        }
        factor = cost[pc];
        if (factor != 0) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if (at(pr, c) != 0) cost[c] -= factor * at(pr, c);
            }
            cost_value -= factor * at(pr, cols_);
        }
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> a_;
};

// Runs the simplex on reduced costs `cost` (maximize; a column may enter
// while its reduced cost is negative). Columns with allowed[c] == false never
// enter. Returns false if unbounded.
bool run_simplex(Tableau& t, std::vector<std::size_t>& basis, std::vector<Rational>& cost, Rational& value,
                 const std::vector<bool>& allowed, std::size_t& pivots) {
    for (;;) {
        std::size_t enter = t.cols();
        for (std::size_t c = 0; c < t.cols(); ++c) {
            if (allowed[c] && cost[c] < 0) {
                enter = c;
                break;
            }
        }
        if (enter == t.cols()) return true;

        std::size_t leave = t.rows();
        Rational best_ratio;
        for (std::size_t r = 0; r < t.rows(); ++r) {
            if (t.at(r, enter) <= 0) continue;
            Rational ratio = t.rhs(r) / t.at(r, enter);
            if (leave == t.rows() || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = std::move(ratio);
            }
        }
        if (leave == t.rows()) return false;
        t.pivot(leave, enter, cost, value);
        basis[leave] = enter;
        ++pivots;
    }
}

}  // namespace

Solution solve(const LinearProgram& program) {
    const std::size_t n = program.num_vars;
    for (const auto& row : program.rows) {
        if (row.coeffs.size() != n) throw PreconditionError("LP row has wrong width");
    }
    if (!program.objective.empty() && program.objective.size() != n) {
        throw PreconditionError("LP objective has wrong width");
    }
    auto is_free = [&](std::size_t j) { return !program.free_var.empty() && program.free_var[j]; };

    // Column layout: structural (free variables split into +/-), slacks,
    // artificials.
    std::vector<std::size_t> plus_col(n), minus_col(n, SIZE_MAX);
    std::size_t cols = 0;
    for (std::size_t j = 0; j < n; ++j) {
        plus_col[j] = cols++;
        if (is_free(j)) minus_col[j] = cols++;
    }
    const std::size_t m = program.rows.size();
    std::vector<std::size_t> slack_col(m, SIZE_MAX);
    for (std::size_t i = 0; i < m; ++i) {
        if (program.rows[i].relation != Relation::equal) slack_col[i] = cols++;
    }
    const std::size_t first_artificial = cols;
    cols += m;

    Tableau t(m, cols);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = program.rows[i];
        const bool flip = row.rhs < 0;
        const int sign = flip ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (row.coeffs[j] == 0) continue;
            t.at(i, plus_col[j]) = sign * row.coeffs[j];
            if (minus_col[j] != SIZE_MAX) t.at(i, minus_col[j]) = -sign * row.coeffs[j];
        }
        if (slack_col[i] != SIZE_MAX) {
            t.at(i, slack_col[i]) = (row.relation == Relation::less_equal ? 1 : -1) * sign;
        }
        t.at(i, first_artificial + i) = 1;
        t.rhs(i) = flip ? Rational(-row.rhs) : row.rhs;
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = first_artificial + i;

    Solution sol;

    // Phase 1: maximize -sum(artificials). Reduced costs after pricing out
    // the artificial basis are -sum of each column over rows.
    std::vector<Rational> cost(cols);
    Rational value = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t c = 0; c < first_artificial; ++c) cost[c] -= t.at(i, c);
        value -= t.rhs(i);
    }
    std::vector<bool> allowed(cols, true);
    run_simplex(t, basis, cost, value, allowed, sol.pivots);
    if (value != 0) {
        sol.status = Status::infeasible;
        return sol;
    }

    // Drive remaining artificials out of the basis; a row with no usable
    // pivot is redundant and stays at zero.
    for (std::size_t r = 0; r < m; ++r) {
        if (basis[r] < first_artificial) continue;
        for (std::size_t c = 0; c < first_artificial; ++c) {
            if (t.at(r, c) != 0) {
                t.pivot(r, c, cost, value);
                basis[r] = c;
                ++sol.pivots;
                break;
            }
        }
    }
    for (std::size_t c = first_artificial; c < cols; ++c) allowed[c] = false;

    // Phase 2.
    std::fill(cost.begin(), cost.end(), Rational(0));
    value = 0;
    if (!program.objective.empty()) {
        for (std::size_t j = 0; j < n; ++j) {
            cost[plus_col[j]] = -program.objective[j];
            if (minus_col[j] != SIZE_MAX) cost[minus_col[j]] = program.objective[j];
        }
        for (std::size_t r = 0; r < m; ++r) {
            const Rational cb = cost[basis[r]];
            if (cb == 0) continue;
            for (std::size_t c = 0; c < cols; ++c) cost[c] -= cb * t.at(r, c);
            value -= cb * t.rhs(r);
        }
        if (!run_simplex(t, basis, cost, value, allowed, sol.pivots)) {
            sol.status = Status::unbounded;
            return sol;
        }
    }

    std::vector<Rational> column_value(cols);
    for (std::size_t r = 0; r < m; ++r) column_value[basis[r]] = t.rhs(r);
    sol.x.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        sol.x[j] = column_value[plus_col[j]];
        if (minus_col[j] != SIZE_MAX) sol.x[j] -= column_value[minus_col[j]];
    }
    sol.value = 0;
    if (!program.objective.empty()) {
        for (std::size_t j = 0; j < n; ++j) sol.value += program.objective[j] * sol.x[j];
    }
    sol.status = Status::optimal;
    return sol;
}

}  // namespace polycert::lp
