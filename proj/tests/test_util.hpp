#pragma once

#include <cstdint>
#include <vector>

#include "chowlab/func.hpp"
#include "chowlab/rng.hpp"

namespace chowlab::testutil {

// random point in {-1,+1}^n
inline std::vector<int> random_point(int n, Xoshiro& rng) {
    std::vector<int> x(n);
    for (int& xi : x) xi = (rng.next() & 1u) ? +1 : -1;
    return x;
}

// random Boolean table (fair coin per point)
inline TruthTable random_boolean_table(int n, std::uint64_t seed) {
    TruthTable t;
    t.n = n;
    t.values.resize(std::size_t{1} << n);
    Xoshiro rng(derive_seed(seed, 0));
    for (double& v : t.values) v = (rng.next() & 1u) ? 1.0 : -1.0;
    return t;
}

inline TruthTable negate(const TruthTable& t) {
    TruthTable out = t;
    for (double& v : out.values) v = -v;
    return out;
}

// random LBF with integer entries in [-range, range]
inline Lbf random_lbf(int n, std::uint64_t seed, double kappa, std::int64_t range) {
    Lbf g;
    g.kappa = kappa;
    g.v.resize(n + 1);
    Xoshiro rng(derive_seed(seed, 0));
    for (auto& vi : g.v)
        vi = static_cast<std::int64_t>(rng.below(2 * range + 1)) - range;
    return g;
}

// Weight vectors with varied decay profiles: flat with jitter, geometric
// decay (nontrivial critical index), and heavy-head mixtures.
inline std::vector<double> random_weight_profile(int n, std::uint64_t seed) {
    Xoshiro rng(derive_seed(seed, 0));
    std::vector<double> w(n);
    switch (rng.below(3)) {
    case 0:
        for (double& x : w) x = rng.normal();
        break;
    case 1: {
        const double ratio = 0.35 + 0.6 * rng.uniform();
        double cur = 1.0;
        for (double& x : w) {
            x = cur * (rng.next() & 1u ? 1.0 : -1.0);
            cur *= ratio;
        }
        break;
    }
    default: {
        const int head = 1 + static_cast<int>(rng.below(std::max(1, n / 3)));
        for (int i = 0; i < n; ++i)
            w[i] = i < head ? 16.0 * (1.0 + rng.uniform()) : rng.normal();
        break;
    }
    }
    // the structural definitions assume no zero entries after removal
    for (double& x : w)
        if (x == 0.0) x = 0.5;
    return w;
}

}  // namespace chowlab::testutil
