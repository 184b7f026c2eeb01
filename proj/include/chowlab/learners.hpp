#pragma once

#include <cstdint>
#include <utility>

#include "chowlab/chow.hpp"
#include "chowlab/func.hpp"
#include "chowlab/reconstruct.hpp"
#include "chowlab/rng.hpp"

namespace chowlab {

// Restricted-focus-of-attention access to a hidden Boolean target: each query
// names a coordinate index, a fresh uniform point is drawn, and only that
// coordinate plus the label are revealed. The counter tracks every example
// consumed.
class RfaOracle {
public:
    RfaOracle(const FunctionSource& target, std::uint64_t seed);

    int n() const { return n_; }
    std::uint64_t queries() const { return count_; }

    // (x_i, f(x)) for a fresh uniform x, 1-based i
    std::pair<int, int> query(int i) {
        if (i < 1 || i > n_) throw ParamError("RFA index out of range");
        const std::uint64_t idx = rng_.next() & mask_;
        ++count_;
        const int bit = static_cast<int>((idx >> (n_ - i)) & 1u);
        return {bit ? +1 : -1, labels_[idx]};
    }

private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
    std::vector<std::int8_t> labels_;
    Xoshiro rng_;
    std::uint64_t count_ = 0;
};

// Uniform examples (x, label) from a hidden Boolean target, with the label
// flipped independently with probability eta in [0, 1/2).
class ExampleOracle {
public:
    ExampleOracle(const FunctionSource& target, double eta, std::uint64_t seed);

    int n() const { return n_; }
    double eta() const { return eta_; }
    std::uint64_t drawn() const { return count_; }

    // packed point (bit n-i is coordinate i) plus its label
    std::pair<std::uint64_t, int> next() {
        const std::uint64_t idx = rng_.next() & mask_;
        ++count_;
        int label = labels_[idx];
        if (eta_ > 0.0 && rng_.uniform() < eta_) label = -label;
        return {idx, label};
    }

private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
    double eta_ = 0.0;
    std::vector<std::int8_t> labels_;
    Xoshiro rng_;
    std::uint64_t count_ = 0;
};

struct LearnResult {
    Ltf hypothesis;
    bool degenerate_hypothesis = false;
    double chow_accuracy_used = 0.0;
    std::uint64_t samples_consumed = 0;
    ChowVector alpha;        // the estimated Chow vector fed to reconstruction
    Lbf lbf;
    ReconstructTrace trace;
    // exact ||alpha - chow(lbf)|| when n <= cap, else NaN
    double dchow_alpha_lbf = 0.0;
};

// Per-index query count for accuracy and confidence (Hoeffding with the
// vector accuracy split evenly over the n+1 coefficients):
// ceil((2(n+1)/acc^2) ln(2(n+1)/delta))
std::size_t rfa_queries_per_index(double accuracy, double delta, int n);

// Estimates each f^(i) from queries at index i (f^(0) reuses the index-1
// labels), then reconstructs and converts to an LTF.
LearnResult learn_rfa(RfaOracle& oracle, double accuracy, double delta, std::uint64_t seed);

// Estimates all Chow coefficients from shared full examples, then
// reconstructs and converts. The guarantee checked downstream is against the
// estimated alpha actually fed in.
LearnResult learn_agnostic(ExampleOracle& oracle, double eps, double delta, double accuracy,
                           std::uint64_t seed);

}  // namespace chowlab
