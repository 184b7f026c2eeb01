#include "chowlab/instances.hpp"

#include <cmath>
#include <numeric>

#include "chowlab/rng.hpp"

namespace chowlab {

Ltf random_ltf_gaussian(int n, std::uint64_t seed, double theta) {
    if (n < 1) throw ParamError("dimension must be positive");
    if (!std::isfinite(theta)) throw ParamError("theta must be finite");
    Xoshiro rng(derive_seed(seed, 0));
    Ltf f;
    f.weights.resize(n);
    for (double& w : f.weights) w = rng.normal();
    f.theta = theta;
    return f;
}

Ltf random_ltf_integer(int n, long long total_weight, std::uint64_t seed) {
    if (n < 1) throw ParamError("dimension must be positive");
    if (total_weight < n) throw ParamError("integer model needs total weight >= n");
    Xoshiro rng(derive_seed(seed, 0));
    Ltf f;
    f.weights.assign(n, 1.0);
    for (long long k = n; k < total_weight; ++k)
        f.weights[rng.below(static_cast<std::uint64_t>(n))] += 1.0;
    f.theta = 0.0;
    return f;
}

Ltf majority(int n) {
    if (n < 1 || n % 2 == 0) throw ParamError("majority needs odd positive n");
    Ltf f;
    f.weights.assign(n, 1.0);
    f.theta = 0.0;
    return f;
}

TruthTable flip_fraction(const TruthTable& t, double fraction, std::uint64_t seed) {
    if (!(fraction >= 0.0 && fraction <= 1.0)) throw ParamError("flip fraction must be in [0,1]");
    if (!t.is_boolean()) throw ParamError("flip_fraction needs a Boolean table");
    const std::size_t size = t.values.size();
    const std::size_t k = static_cast<std::size_t>(
        std::llround(fraction * static_cast<double>(size)));

    TruthTable out = t;
    if (k == 0) return out;
    // partial Fisher-Yates pick of k distinct positions
    std::vector<std::uint32_t> pos(size);
    std::iota(pos.begin(), pos.end(), 0u);
    Xoshiro rng(derive_seed(seed, 0));
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t r = j + static_cast<std::size_t>(rng.below(size - j));
        std::swap(pos[j], pos[r]);
        out.values[pos[j]] = -out.values[pos[j]];
    }
    return out;
}

}  // namespace chowlab
