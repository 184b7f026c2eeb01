#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "chowlab/chow.hpp"
#include "chowlab/func.hpp"

namespace chowlab {

// Weights sorted by decreasing magnitude with zeros removed and the suffix
// norms sigma_k = sqrt(sum_{i>=k} w_i^2) precomputed.
struct SortedWeights {
    std::vector<double> w;              // |w[0]| >= |w[1]| >= ... > 0
    std::vector<std::size_t> index;     // original 0-based positions
    std::vector<double> sigma;          // sigma[k] for 0-based k, sigma.size() == w.size()+1

    std::size_t size() const { return w.size(); }
};

// Sorting ties are broken by ascending original index; all-zero input throws.
SortedWeights sort_weights(std::span<const double> w);

// max_i |w_i| <= tau * ||w|| (boundary inclusive)
bool is_tau_regular(std::span<const double> w, double tau);

// Smallest 1-based index i (after magnitude sort, zeros removed) with
// |w_i| <= tau * sigma_i; nullopt when no index qualifies.
std::optional<std::size_t> critical_index(std::span<const double> w, double tau);

// sigma_a < (1-tau^2)^{(a-1)/2} sigma_1 for every 1 < a <= min(c(w,tau), k);
// a = 1 holds with equality and is excluded.
bool check_small_tail(std::span<const double> w, double tau);

struct AnticoncResult {
    double empirical = 0.0;
    double bound = 0.0;  // |b-a|/||w|| + 2 tau
    bool pass = false;   // empirical <= bound + Hoeffding slack for m samples
};

// Empirical mass of w.x in the half-open interval (a, b] over m seeded
// uniform points, against the Berry-Esseen anti-concentration bound.
AnticoncResult anticoncentration_check(std::span<const double> w, double tau, double a, double b,
                                       std::size_t m, std::uint64_t seed);

// Exact (dchow, dist) pair for scatter plots; nothing is asserted about the
// asymptotic relation between the two.
std::pair<double, double> dchow_vs_dist_probe(const Ltf& f, const TruthTable& g);

}  // namespace chowlab
