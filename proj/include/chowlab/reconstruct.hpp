#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chowlab/chow.hpp"
#include "chowlab/func.hpp"

namespace chowlab {

enum class ChowMode { exact, estimated };
enum class StopReason { rho, cap };

struct ReconstructParams {
    double eps = 0.1;
    double delta = 0.1;                 // failure budget, split delta/T per iteration
    ChowMode mode = ChowMode::exact;
    std::optional<long long> max_iters; // override of the ceil(1/(2 eps^2)) cap
    std::uint64_t seed = 0;
    std::size_t batch = 8192;
};

// One grid step: value = alpha_i - m * unit with integer m minimizing
// |beta_i - value|; exact-half ties round m up.
struct GridRound {
    std::int64_t m = 0;
    double value = 0.0;
};

GridRound round_to_grid(double alpha_i, double beta_i, double unit);

struct IterationRecord {
    long long t = 0;
    double rho = 0.0;
    ChowVector g_tilde;
    std::optional<double> potential;
};

struct ReconstructTrace {
    std::vector<IterationRecord> records;  // one per pass, t = 0..iterations
    double kappa = 0.0;
    std::vector<std::int64_t> v;
    long long iterations = 0;              // update steps performed
    StopReason stop_reason = StopReason::rho;
};

struct ReconstructResult {
    Lbf lbf;
    ReconstructTrace trace;

    bool converged() const { return trace.stop_reason == StopReason::rho; }
};

// Iteratively builds an LBF g with kappa = eps/(4 sqrt(n+1)) and integral v:
// start from g == 0; each pass measures the Chow vector of the current g
// (exact enumeration, or a fresh seeded estimate at per-coefficient accuracy
// kappa with failure budget delta/T), rounds it onto the alpha-anchored grid
// of unit 2*kappa, and stops once rho = ||alpha - rounded|| <= 4*eps, else
// adds half the residual to the weight vector (an exact integer update of v).
// On cap overrun the partial LBF and trace are returned with stop_reason::cap
// rather than discarded.
//
// potential_target, when given (exact mode, Boolean table of matching
// dimension), adds E(t) = E[(f-g_t)(f-2g'_t+g_t)] to each record.
ReconstructResult chow_reconstruct(const ChowVector& alpha, const ReconstructParams& params,
                                   const TruthTable* potential_target = nullptr);

// E[(f-g)(f-2g'+g)] by enumeration, where g' is the unclipped linear form
// kappa*(v0 + sum v_i x_i) of the LBF and g = P1(g'). Starts at 1 for g == 0
// and stays nonnegative.
double potential(const TruthTable& f, const Lbf& g);

// Iteration cap ceil(1/(2 eps^2))
long long reconstruct_iteration_cap(double eps);

}  // namespace chowlab
