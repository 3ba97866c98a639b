#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace majority {

using Rational = boost::multiprecision::cpp_rational;

/// Exact value of a finite double.
Rational to_rational(double x);

struct LpOptions {
    double pivot_tolerance = 1e-9;
    long max_iterations = 1'000'000;
};

/// Optimum of  min c.w  s.t.  A w >= b, w >= 0  together with the packing
/// dual  max b.y  s.t.  A^T y <= c, y >= 0.
struct LpSolution {
    double value = 0.0;        // primal objective
    double dual_value = 0.0;   // b.y
    std::vector<double> primal;
    std::vector<double> dual;
    long iterations = 0;

    /// The final basis re-solved in rational arithmetic is primal and dual
    /// feasible, so `exact_value` is the true optimum.
    bool certified = false;
    std::string exact_value;
    std::vector<Rational> exact_primal;
    std::vector<Rational> exact_dual;
};

/// Dense dual simplex started from the all-slack basis (dual feasible since
/// c >= 0), smallest-index pivoting. `rows` is A given row by row.
/// Throws Error(param_out_of_range) on negative costs or ragged input and
/// Error(coverage_failure) when the covering system is infeasible.
LpSolution solve_covering_lp(const std::vector<std::vector<double>>& rows, const std::vector<double>& b,
                             const std::vector<double>& c, const LpOptions& options = {});

} // namespace majority
