#include "chowlab/structural.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chowlab/rng.hpp"

namespace chowlab {

namespace {

void check_weights(std::span<const double> w, double tau) {
    if (w.empty()) throw ParamError("weight vector is empty");
    for (double x : w)
        if (!std::isfinite(x)) throw ParamError("weights must be finite");
    if (!(tau > 0.0) || !std::isfinite(tau)) throw ParamError("tau must be positive");
}

double norm2(std::span<const double> w) {
    double s = 0.0;
    for (double x : w) s += x * x;
    return std::sqrt(s);
}

}  // namespace

SortedWeights sort_weights(std::span<const double> w) {
    SortedWeights out;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0.0) out.index.push_back(i);
    if (out.index.empty()) throw ParamError("weight vector is all zeros");
    std::stable_sort(out.index.begin(), out.index.end(), [&](std::size_t a, std::size_t b) {
        return std::fabs(w[a]) > std::fabs(w[b]);
    });
    out.w.reserve(out.index.size());
    for (std::size_t i : out.index) out.w.push_back(w[i]);
    out.sigma.assign(out.w.size() + 1, 0.0);
    for (std::size_t k = out.w.size(); k-- > 0;) {
        // suffix sums from the back keep sigma monotone by construction
        out.sigma[k] = std::sqrt(out.w[k] * out.w[k] +
                                 out.sigma[k + 1] * out.sigma[k + 1]);
    }
    return out;
}

bool is_tau_regular(std::span<const double> w, double tau) {
    check_weights(w, tau);
    double maxabs = 0.0;
    for (double x : w) maxabs = std::max(maxabs, std::fabs(x));
    if (maxabs == 0.0) throw ParamError("weight vector is all zeros");
    return maxabs <= tau * norm2(w);
}

std::optional<std::size_t> critical_index(std::span<const double> w, double tau) {
    check_weights(w, tau);
    const SortedWeights s = sort_weights(w);
    for (std::size_t k = 0; k < s.size(); ++k)
        if (std::fabs(s.w[k]) <= tau * s.sigma[k]) return k + 1;
    return std::nullopt;
}

bool check_small_tail(std::span<const double> w, double tau) {
    check_weights(w, tau);
    const SortedWeights s = sort_weights(w);
    const auto c = critical_index(w, tau);
    const std::size_t last = std::min(c.value_or(s.size()), s.size());
    for (std::size_t a = 2; a <= last; ++a) {
        const double rhs = std::pow(1.0 - tau * tau, (static_cast<double>(a) - 1.0) / 2.0) *
                           s.sigma[0];
        if (!(s.sigma[a - 1] < rhs)) return false;
    }
    return true;
}

AnticoncResult anticoncentration_check(std::span<const double> w, double tau, double a, double b,
                                       std::size_t m, std::uint64_t seed) {
    check_weights(w, tau);
    if (!std::isfinite(a) || !std::isfinite(b)) throw ParamError("interval must be finite");
    if (a > b) throw ParamError("interval must satisfy a <= b");
    if (m == 0) throw ParamError("sample count must be positive");
    if (!is_tau_regular(w, tau)) throw ParamError("weight vector is not tau-regular");

    const std::size_t n = w.size();
    const int nwords = static_cast<int>((n + 63) / 64);
    std::vector<std::uint64_t> words(nwords);
    std::size_t hits = 0;
    constexpr std::size_t kBatch = 8192;
    const std::size_t batches = (m + kBatch - 1) / kBatch;
    for (std::size_t bi = 0; bi < batches; ++bi) {
        Xoshiro rng(derive_seed(seed, bi));
        const std::size_t count = std::min(kBatch, m - bi * kBatch);
        for (std::size_t s = 0; s < count; ++s) {
            for (auto& word : words) word = rng.next();
            double sum = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                sum += ((words[i >> 6] >> (i & 63)) & 1u) ? w[i] : -w[i];
            if (sum > a && sum <= b) ++hits;
        }
    }

    AnticoncResult out;
    out.empirical = static_cast<double>(hits) / static_cast<double>(m);
    out.bound = (b - a) / norm2(w) + 2.0 * tau;
    const double slack = 3.0 * std::sqrt(std::log(2.0 / 0.01) / (2.0 * static_cast<double>(m)));
    out.pass = out.empirical <= out.bound + slack;
    return out;
}

std::pair<double, double> dchow_vs_dist_probe(const Ltf& f, const TruthTable& g) {
    if (f.n() != g.n) throw DimensionError("LTF and table dimensions differ");
    const TruthTable ft = tabulate(f);
    const double dchow = chow_distance(chow_exact(ft), chow_exact(g));
    return {dchow, dist_l1(ft, g)};
}

}  // namespace chowlab
