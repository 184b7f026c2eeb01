#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace chowlab {

// Dense bounded-variable LP in equality form:
//     minimize c.x   subject to   A x = b,  lo <= x <= hi
// Columns are stored contiguously (column-major), upper bounds may be
// +infinity. Solved by a primal simplex with phase-1 artificials and Bland's
// pivoting rule, so every solve is deterministic and terminates.
struct LpProblem {
    std::size_t nrows = 0;
    std::size_t nvars = 0;
    std::vector<double> cost;  // nvars
    std::vector<double> lo;    // nvars
    std::vector<double> hi;    // nvars, may be +inf
    std::vector<double> cols;  // nvars * nrows, column j at cols[j*nrows]
    std::vector<double> b;     // nrows
    double feas_tol = 1e-7;
    // early exit once the phase-2 objective drops below this value
    std::optional<double> stop_below;

    double* col(std::size_t j) { return cols.data() + j * nrows; }
    const double* col(std::size_t j) const { return cols.data() + j * nrows; }
};

enum class LpStatus { optimal, infeasible, unbounded, cutoff };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    std::vector<double> x;   // structural variables
    std::vector<double> pi;  // simplex multipliers at termination
    double objective = std::numeric_limits<double>::quiet_NaN();
};

LpSolution solve_lp(const LpProblem& p);

}  // namespace chowlab
