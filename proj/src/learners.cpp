#include "chowlab/learners.hpp"

#include <cmath>
#include <limits>

namespace chowlab {

namespace {

// Both oracles label examples through a dense table, so a single query is a
// word draw, a lookup and a bit extract.
std::vector<std::int8_t> label_table(const FunctionSource& target) {
    if (!target.exact()) throw ParamError("oracle target must be an exact source");
    if (target.n() > enumeration_cap() || target.n() > 63)
        throw CapError("oracle targets need n <= min(cap, 63)");
    const TruthTable t = tabulate(target);
    if (!t.is_boolean()) throw ParamError("oracle target must be Boolean");
    std::vector<std::int8_t> labels(t.values.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        labels[i] = t.values[i] > 0.0 ? 1 : -1;
    return labels;
}

ChowMode pick_mode(int n) {
    return n <= enumeration_cap() ? ChowMode::exact : ChowMode::estimated;
}

void finish_learn(LearnResult& out, const ChowVector& alpha, double accuracy,
                  std::uint64_t seed) {
    ReconstructParams rp;
    rp.eps = accuracy;
    rp.mode = pick_mode(alpha.n());
    rp.seed = derive_seed(seed, 0x7ec0);
    ReconstructResult rec = chow_reconstruct(alpha, rp);

    LtfFromLbf conv = lbf_to_ltf(rec.lbf);
    out.hypothesis = std::move(conv.ltf);
    out.degenerate_hypothesis = conv.degenerate;
    out.chow_accuracy_used = accuracy;
    out.alpha = alpha;
    out.dchow_alpha_lbf = alpha.n() <= enumeration_cap()
                              ? chow_distance(alpha, chow_exact(FunctionSource::lbf(rec.lbf)))
                              : std::numeric_limits<double>::quiet_NaN();
    out.lbf = std::move(rec.lbf);
    out.trace = std::move(rec.trace);
}

}  // namespace

RfaOracle::RfaOracle(const FunctionSource& target, std::uint64_t seed)
    : n_(target.n()), labels_(label_table(target)), rng_(derive_seed(seed, 0)) {
    mask_ = (std::uint64_t{1} << n_) - 1;
}

ExampleOracle::ExampleOracle(const FunctionSource& target, double eta, std::uint64_t seed)
    : n_(target.n()), eta_(eta), labels_(label_table(target)), rng_(derive_seed(seed, 0)) {
    if (!(eta >= 0.0 && eta < 0.5))
        throw ParamError("label-flip rate must lie in [0, 0.5); 0.5 carries no signal");
    mask_ = (std::uint64_t{1} << n_) - 1;
}

std::size_t rfa_queries_per_index(double accuracy, double delta, int n) {
    if (!(accuracy > 0.0) || !std::isfinite(accuracy))
        throw ParamError("accuracy must be positive and finite");
    if (!(delta > 0.0 && delta < 1.0)) throw ParamError("delta must lie in (0,1)");
    const double m = std::ceil((2.0 * (n + 1) / (accuracy * accuracy)) *
                               std::log(2.0 * (n + 1) / delta));
    if (!(m < 9e18)) throw ParamError("query count overflows");
    return static_cast<std::size_t>(m);
}

LearnResult learn_rfa(RfaOracle& oracle, double accuracy, double delta, std::uint64_t seed) {
    const int n = oracle.n();
    const std::size_t per_index = rfa_queries_per_index(accuracy, delta, n);

    LearnResult out;
    ChowVector alpha;
    alpha.values.assign(n + 1, 0.0);
    for (int i = 1; i <= n; ++i) {
        std::int64_t acc = 0;
        std::int64_t acc_label = 0;
        if (i == 1) {
            // f^(0) reuses the index-1 labels instead of a fresh budget
            for (std::size_t q = 0; q < per_index; ++q) {
                const auto [bit, label] = oracle.query(1);
                acc += bit > 0 ? label : -label;
                acc_label += label;
            }
            alpha.values[0] = static_cast<double>(acc_label) / static_cast<double>(per_index);
        } else {
            for (std::size_t q = 0; q < per_index; ++q) {
                const auto [bit, label] = oracle.query(i);
                acc += bit > 0 ? label : -label;
            }
        }
        alpha.values[i] = static_cast<double>(acc) / static_cast<double>(per_index);
    }
    out.samples_consumed = oracle.queries();

    finish_learn(out, alpha, accuracy, seed);
    return out;
}

LearnResult learn_agnostic(ExampleOracle& oracle, double eps, double delta, double accuracy,
                           std::uint64_t seed) {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw ParamError("eps must be positive");
    const int n = oracle.n();
    const std::size_t m = rfa_queries_per_index(accuracy, delta, n);

    LearnResult out;
    std::vector<std::int64_t> acc(n + 1, 0);
    for (std::size_t q = 0; q < m; ++q) {
        const auto [idx, label] = oracle.next();
        acc[0] += label;
        for (int i = 1; i <= n; ++i) acc[i] += ((idx >> (n - i)) & 1u) ? label : -label;
    }
    ChowVector alpha;
    alpha.values.resize(n + 1);
    for (int i = 0; i <= n; ++i)
        alpha.values[i] = static_cast<double>(acc[i]) / static_cast<double>(m);
    out.samples_consumed = oracle.drawn();

    finish_learn(out, alpha, accuracy, seed);
    return out;
}

}  // namespace chowlab
