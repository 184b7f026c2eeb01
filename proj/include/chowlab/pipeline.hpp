#pragma once

#include <cstdint>

#include "chowlab/chow.hpp"
#include "chowlab/func.hpp"
#include "chowlab/reconstruct.hpp"

namespace chowlab {

struct ApproxParams {
    double eps = 0.1;
    double delta = 0.1;
    ChowMode mode = ChowMode::exact;
    std::uint64_t seed = 0;
};

struct ApproxResult {
    Ltf fstar;
    bool degenerate = false;
    Lbf lbf;
    ReconstructTrace trace;
    ChowVector alpha;
    double dchow_final = 0.0;  // ||chow(f) - chow(g)|| exactly, when n <= cap
    double dist_final = 0.0;   // dist(f, f*) by enumeration, when n <= cap
    double v_norm_sq = 0.0;
};

// chow(f) -> chow_reconstruct -> integer-weight LTF. Exact mode feeds
// alpha = chow(f); estimated mode estimates it to vector accuracy eps
// (per-coefficient eps/sqrt(n+1)) before reconstructing.
ApproxResult approx_weights(const Ltf& f, const ApproxParams& params);

}  // namespace chowlab
