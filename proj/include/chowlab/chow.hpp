#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chowlab/func.hpp"

namespace chowlab {

// Degree-0/1 Fourier coefficients under the uniform distribution:
// values[0] = E[f], values[i] = E[f(x) x_i].
struct ChowVector {
    std::vector<double> values;  // n+1 entries

    int n() const { return static_cast<int>(values.size()) - 1; }
};

// Monte Carlo estimation config. One shared sample set estimates all n+1
// coefficients; the Hoeffding sample count below union-bounds the failure
// probability over them.
struct EstimatorConfig {
    double t = 0.1;        // per-coefficient accuracy
    double delta = 0.1;    // total failure probability
    std::uint64_t seed = 0;
    std::size_t batch = 8192;
    std::optional<std::size_t> samples;  // explicit override of the derived count
};

// m = ceil((2/t^2) ln(2(n+1)/delta)), Hoeffding for values in [-1,1]
std::size_t hoeffding_samples(double t, double delta, int n);

ChowVector chow_exact(const FunctionSource& f);
ChowVector chow_exact(const TruthTable& t);

// Empirical means of f(x) x_i over m shared uniform samples, evaluated in
// batches whose sub-seeds derive from (seed, batch index); results are
// bit-identical for a fixed (seed, m, batch size). Estimates are not clipped
// to [-1,1].
ChowVector chow_estimate(const FunctionSource& f, const EstimatorConfig& cfg);

double chow_distance(const ChowVector& a, const ChowVector& b);

// E[|f - g|]; equals 2 Pr[f != g] for Boolean tables
double dist_l1(const TruthTable& f, const TruthTable& g);

// Empirical mean of |f(x) - g(x)| over shared seeded samples. Both sources
// must be exact-mode (they are co-evaluated point by point).
double dist_estimate(const FunctionSource& f, const FunctionSource& g, const EstimatorConfig& cfg);

}  // namespace chowlab
