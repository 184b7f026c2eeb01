#include "chowlab/exact_lp.hpp"

#include <cmath>
#include <string>

namespace chowlab {

namespace {

void check_lp_dim(int n) {
    if (n < 1) throw ParamError("dimension must be positive");
    if (n > lp_cap())
        throw CapError("n = " + std::to_string(n) + " exceeds the LP cap " +
                       std::to_string(lp_cap()));
}

}  // namespace

TruthTable solve_exact_chow(const ChowVector& alpha) {
    const int n = alpha.n();
    check_lp_dim(n);
    for (double a : alpha.values)
        if (!std::isfinite(a)) throw ParamError("alpha entries must be finite");

    const std::size_t size = std::size_t{1} << n;
    LpProblem p;
    p.nrows = n + 1;
    p.nvars = size;
    p.cost.assign(size, 0.0);
    p.lo.assign(size, -1.0);
    p.hi.assign(size, 1.0);
    p.cols.resize(size * p.nrows);
    p.b.resize(p.nrows);
    // sum_x g(x) x_i = 2^n alpha_i, with x_0 == 1
    for (std::size_t idx = 0; idx < size; ++idx) {
        double* col = p.col(idx);
        col[0] = 1.0;
        for (int i = 1; i <= n; ++i) col[i] = coord_from_index(idx, n, i);
    }
    for (int i = 0; i <= n; ++i) p.b[i] = std::ldexp(alpha.values[i], n);

    const LpSolution sol = solve_lp(p);
    if (sol.status == LpStatus::infeasible)
        throw InfeasibleError("alpha is not the Chow vector of any bounded function");
    if (sol.status != LpStatus::optimal) throw Error("unexpected LP status");

    double max_dev = 0.0;
    for (double g : sol.x) max_dev = std::max(max_dev, std::fabs(1.0 - std::fabs(g)));
    if (max_dev > kSnapTol)
        throw NonIntegralError(
            "feasible point is not a +-1 table (max deviation " + std::to_string(max_dev) +
                "); alpha is not an exact LTF Chow vector",
            max_dev);

    TruthTable t;
    t.n = n;
    t.values.resize(size);
    for (std::size_t idx = 0; idx < size; ++idx) t.values[idx] = sol.x[idx] >= 0.0 ? 1.0 : -1.0;
    return t;
}

Ltf recover_weights(const TruthTable& table) {
    const int n = table.n;
    check_lp_dim(n);
    if (table.values.size() != (std::size_t{1} << n))
        throw DimensionError("truth table must have exactly 2^n values");
    if (!table.is_boolean()) throw ParamError("recover_weights needs a Boolean table");

    // Separation is solved through the bounded dual of the soft-margin LP:
    //     maximize sum y_x   s.t.   sum_x y_x f(x) (x, -1) = 0,  0 <= y_x <= 1.
    // The optimum is 0 iff a margin-1 separator exists, in which case the
    // simplex multipliers pi satisfy f(x) ((-pi).(x,-1)) >= 1 for every x.
    // A positive objective is a Farkas certificate that the table is not an
    // LTF, so the solve can stop as soon as it crosses -1/2.
    const std::size_t size = std::size_t{1} << n;
    LpProblem p;
    p.nrows = n + 1;
    p.nvars = size;
    p.cost.assign(size, -1.0);
    p.lo.assign(size, 0.0);
    p.hi.assign(size, 1.0);
    p.cols.resize(size * p.nrows);
    p.b.assign(p.nrows, 0.0);
    p.stop_below = -0.5;
    for (std::size_t idx = 0; idx < size; ++idx) {
        double* col = p.col(idx);
        const double label = table.values[idx];
        for (int i = 1; i <= n; ++i) col[i - 1] = label * coord_from_index(idx, n, i);
        col[n] = -label;
    }

    const LpSolution sol = solve_lp(p);
    if (sol.status == LpStatus::cutoff || (sol.status == LpStatus::optimal && sol.objective < -0.5))
        throw InfeasibleError("table is not linearly separable");
    if (sol.status != LpStatus::optimal) throw Error("unexpected LP status");

    Ltf f;
    f.weights.resize(n);
    for (int i = 0; i < n; ++i) f.weights[i] = -sol.pi[i];
    f.theta = -sol.pi[n];

    // the margin-1 certificate must reproduce the table exactly
    for (std::size_t idx = 0; idx < size; ++idx) {
        double s = -f.theta;
        for (int i = 1; i <= n; ++i)
            s += coord_from_index(idx, n, i) * f.weights[i - 1];
        if (table.values[idx] * s < 0.5)
            throw Error("separator verification failed (margin too small)");
    }
    return f;
}

bool verify_chow_uniqueness(const Ltf& f) {
    check_lp_dim(f.n());
    const TruthTable expected = tabulate(f);
    const TruthTable recovered = solve_exact_chow(chow_exact(expected));
    return recovered.values == expected.values;
}

}  // namespace chowlab
