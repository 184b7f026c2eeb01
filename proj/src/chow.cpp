#include "chowlab/chow.hpp"

#include <cmath>
#include <string>

#include "chowlab/rng.hpp"

namespace chowlab {

namespace {

void check_config(const EstimatorConfig& cfg) {
    if (!(cfg.t > 0.0) || !std::isfinite(cfg.t))
        throw ParamError("estimator accuracy t must be positive and finite");
    if (!(cfg.delta > 0.0 && cfg.delta < 1.0))
        throw ParamError("estimator delta must lie in (0,1)");
    if (cfg.batch == 0) throw ParamError("estimator batch size must be positive");
}

void check_enumerable(int n) {
    if (n > enumeration_cap())
        throw CapError("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                       std::to_string(enumeration_cap()));
}

// The label of an exact source is +-1 exactly when it is an LTF or a Boolean
// table; those get exact integer accumulation.
bool boolean_valued(const FunctionSource& f) {
    if (const auto* t = std::get_if<TruthTable>(&f.repr())) return t->is_boolean();
    return std::holds_alternative<Ltf>(f.repr());
}

template <class Acc, class Eval>
ChowVector exact_loop(int n, Eval&& eval) {
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<Acc> acc(n + 1, Acc(0));
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        const Acc val = eval(idx);
        acc[0] += val;
        for (int i = 1; i <= n; ++i) acc[i] += ((idx >> (n - i)) & 1u) ? val : -val;
    }
    ChowVector out;
    out.values.resize(n + 1);
    const double scale = 1.0 / static_cast<double>(size);
    for (int i = 0; i <= n; ++i) out.values[i] = static_cast<double>(acc[i]) * scale;
    return out;
}

template <class Acc, class Eval>
void estimate_batches(int n, std::uint64_t seed, std::size_t m, std::size_t batch_size,
                      Eval&& eval, std::vector<double>& total) {
    // n <= 64 draws one word per point; larger n draws ceil(n/64) words with
    // coordinate i at global bit (n - i). Batch partial sums are reduced in
    // batch order, which keeps the result independent of any batch-level
    // parallel schedule.
    const std::size_t batches = (m + batch_size - 1) / batch_size;
    total.assign(n + 1, 0.0);
    std::vector<Acc> acc(n + 1);
    if (n <= 64) {
        const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        for (std::size_t b = 0; b < batches; ++b) {
            Xoshiro rng(derive_seed(seed, b));
            const std::size_t count = std::min(batch_size, m - b * batch_size);
            acc.assign(n + 1, Acc(0));
            for (std::size_t s = 0; s < count; ++s) {
                const std::uint64_t idx = rng.next() & mask;
                const Acc val = eval(&idx);
                acc[0] += val;
                for (int i = 1; i <= n; ++i) acc[i] += ((idx >> (n - i)) & 1u) ? val : -val;
            }
            for (int i = 0; i <= n; ++i) total[i] += static_cast<double>(acc[i]);
        }
    } else {
        const int nwords = (n + 63) / 64;
        std::vector<std::uint64_t> words(nwords);
        for (std::size_t b = 0; b < batches; ++b) {
            Xoshiro rng(derive_seed(seed, b));
            const std::size_t count = std::min(batch_size, m - b * batch_size);
            acc.assign(n + 1, Acc(0));
            for (std::size_t s = 0; s < count; ++s) {
                for (auto& w : words) w = rng.next();
                const Acc val = eval(words.data());
                acc[0] += val;
                for (int i = 1; i <= n; ++i) {
                    const int bit = n - i;
                    acc[i] += ((words[bit >> 6] >> (bit & 63)) & 1u) ? val : -val;
                }
            }
            for (int i = 0; i <= n; ++i) total[i] += static_cast<double>(acc[i]);
        }
    }
}

double eval_words_ltf(const Ltf& f, const std::uint64_t* words, int n) {
    double s = 0.0;
    for (int i = 1; i <= n; ++i) {
        const int bit = n - i;
        s += ((words[bit >> 6] >> (bit & 63)) & 1u) ? f.weights[i - 1] : -f.weights[i - 1];
    }
    return s - f.theta >= 0.0 ? 1.0 : -1.0;
}

double eval_words_lbf(const Lbf& g, const std::uint64_t* words, int n) {
    std::int64_t s = g.v[0];
    for (int i = 1; i <= n; ++i) {
        const int bit = n - i;
        s += ((words[bit >> 6] >> (bit & 63)) & 1u) ? g.v[i] : -g.v[i];
    }
    return project_p1(g.kappa * static_cast<double>(s));
}

}  // namespace

std::size_t hoeffding_samples(double t, double delta, int n) {
    if (!(t > 0.0) || !(delta > 0.0 && delta < 1.0) || n < 1)
        throw ParamError("invalid Hoeffding parameters");
    const double m = std::ceil((2.0 / (t * t)) * std::log(2.0 * (n + 1) / delta));
    if (!(m < 9e18)) throw ParamError("derived sample count overflows");
    return static_cast<std::size_t>(m);
}

ChowVector chow_exact(const FunctionSource& f) {
    if (!f.exact()) throw ParamError("chow_exact requires an exact-mode source");
    const int n = f.n();
    check_enumerable(n);
    if (boolean_valued(f)) {
        return exact_loop<std::int64_t>(
            n, [&](std::uint64_t idx) { return f.eval_index(idx) > 0.0 ? 1 : -1; });
    }
    return exact_loop<double>(n, [&](std::uint64_t idx) { return f.eval_index(idx); });
}

ChowVector chow_exact(const TruthTable& t) { return chow_exact(FunctionSource::table(t)); }

ChowVector chow_estimate(const FunctionSource& f, const EstimatorConfig& cfg) {
    check_config(cfg);
    const int n = f.n();
    const std::size_t m = cfg.samples ? *cfg.samples : hoeffding_samples(cfg.t, cfg.delta, n);
    if (m == 0) throw ParamError("sample count must be positive");

    // The oracle owns its example stream; for evaluable sources the
    // estimator draws the points itself from cfg.seed.
    const FunctionSource* target = &f;
    std::uint64_t seed = cfg.seed;
    if (const auto* o = std::get_if<SamplingOracle>(&f.repr())) {
        target = o->target.get();
        seed = o->seed;
    }

    std::vector<double> total;
    std::visit(
        [&](const auto& fn) {
            using T = std::decay_t<decltype(fn)>;
            if constexpr (std::is_same_v<T, TruthTable>) {
                if (fn.is_boolean()) {
                    estimate_batches<std::int64_t>(n, seed, m, cfg.batch,
                        [&](const std::uint64_t* w) { return fn.values[*w] > 0.0 ? 1 : -1; },
                        total);
                } else {
                    estimate_batches<double>(n, seed, m, cfg.batch,
                        [&](const std::uint64_t* w) { return fn.values[*w]; }, total);
                }
            } else if constexpr (std::is_same_v<T, Ltf>) {
                estimate_batches<std::int64_t>(n, seed, m, cfg.batch,
                    [&](const std::uint64_t* w) {
                        return eval_words_ltf(fn, w, n) > 0.0 ? 1 : -1;
                    },
                    total);
            } else if constexpr (std::is_same_v<T, Lbf>) {
                estimate_batches<double>(n, seed, m, cfg.batch,
                    [&](const std::uint64_t* w) { return eval_words_lbf(fn, w, n); }, total);
            } else {
                throw ParamError("nested sampling oracles are not supported");
            }
        },
        target->repr());

    ChowVector out;
    out.values.resize(n + 1);
    for (int i = 0; i <= n; ++i) out.values[i] = total[i] / static_cast<double>(m);
    return out;
}

double chow_distance(const ChowVector& a, const ChowVector& b) {
    if (a.values.size() != b.values.size())
        throw DimensionError("Chow vectors have different dimensions");
    double s = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double d = a.values[i] - b.values[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double dist_l1(const TruthTable& f, const TruthTable& g) {
    if (f.n != g.n) throw DimensionError("truth tables have different dimensions");
    double s = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) s += std::fabs(f.values[i] - g.values[i]);
    return s / static_cast<double>(f.values.size());
}

double dist_estimate(const FunctionSource& f, const FunctionSource& g,
                     const EstimatorConfig& cfg) {
    check_config(cfg);
    if (!f.exact() || !g.exact())
        throw ParamError("dist_estimate requires exact-mode sources on both sides");
    if (f.n() != g.n()) throw DimensionError("sources have different dimensions");
    const int n = f.n();
    const std::size_t m = cfg.samples ? *cfg.samples : hoeffding_samples(cfg.t, cfg.delta, n);
    if (m == 0) throw ParamError("sample count must be positive");

    const std::size_t batches = (m + cfg.batch - 1) / cfg.batch;
    double total = 0.0;
    if (n <= 64) {
        const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        for (std::size_t b = 0; b < batches; ++b) {
            Xoshiro rng(derive_seed(cfg.seed, b));
            const std::size_t count = std::min(cfg.batch, m - b * cfg.batch);
            double acc = 0.0;
            for (std::size_t s = 0; s < count; ++s) {
                const std::uint64_t idx = rng.next() & mask;
                acc += std::fabs(f.eval_index(idx) - g.eval_index(idx));
            }
            total += acc;
        }
    } else {
        throw CapError("dist_estimate supports n <= 64");
    }
    return total / static_cast<double>(m);
}

}  // namespace chowlab
