#pragma once

#include <cstddef>
#include <vector>

#include "polycert/rational.hpp"

namespace polycert::lp {

enum class Relation { less_equal, equal, greater_equal };

struct Constraint {
    std::vector<Rational> coeffs;
    Relation relation;
    Rational rhs;
};

/// maximize objective . x  subject to rows, with the listed variables free
/// and all others >= 0.
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<Constraint> rows;
    std::vector<Rational> objective;  // empty means feasibility only
    std::vector<bool> free_var;       // empty means all nonnegative
};

enum class Status { optimal, infeasible, unbounded };

struct Solution {
    Status status = Status::infeasible;
    std::vector<Rational> x;
    Rational value;
    std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex over the rationals. Bland's rule in both
/// phases, so it terminates without cycling.
Solution solve(const LinearProgram& program);

}  // namespace polycert::lp
