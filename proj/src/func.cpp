#include "chowlab/func.hpp"

#include <cmath>
#include <string>

namespace chowlab {

namespace {

void check_point(std::span<const int> x, int n) {
    if (static_cast<int>(x.size()) != n)
        throw DimensionError("point has " + std::to_string(x.size()) +
                             " coordinates, function expects " + std::to_string(n));
    for (int xi : x)
        if (xi != 1 && xi != -1) throw ParamError("point coordinates must be +1 or -1");
}

void check_enumerable(int n) {
    if (n < 1) throw ParamError("dimension must be positive");
    if (n > enumeration_cap())
        throw CapError("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                       std::to_string(enumeration_cap()));
}

}  // namespace

int eval_ltf(const Ltf& f, std::span<const int> x) {
    check_point(x, f.n());
    double s = 0.0;
    for (int i = 0; i < f.n(); ++i) s += f.weights[i] * x[i];
    return s - f.theta >= 0.0 ? +1 : -1;
}

int eval_ltf_index(const Ltf& f, std::uint64_t idx) {
    const int n = f.n();
    double s = 0.0;
    for (int i = 1; i <= n; ++i)
        s += ((idx >> (n - i)) & 1u) ? f.weights[i - 1] : -f.weights[i - 1];
    return s - f.theta >= 0.0 ? +1 : -1;
}

std::int64_t lbf_linear_sum(const Lbf& g, std::uint64_t idx) {
    const int n = g.n();
    std::int64_t s = g.v[0];
    for (int i = 1; i <= n; ++i) s += ((idx >> (n - i)) & 1u) ? g.v[i] : -g.v[i];
    return s;
}

double eval_lbf(const Lbf& g, std::span<const int> x) {
    check_point(x, g.n());
    std::int64_t s = g.v[0];
    for (int i = 0; i < g.n(); ++i) s += g.v[i + 1] * x[i];
    return project_p1(g.kappa * static_cast<double>(s));
}

double eval_lbf_index(const Lbf& g, std::uint64_t idx) {
    return project_p1(g.kappa * static_cast<double>(lbf_linear_sum(g, idx)));
}

FunctionSource FunctionSource::table(TruthTable t) {
    if (t.n < 1) throw ParamError("truth table dimension must be positive");
    if (t.values.size() != (std::size_t{1} << t.n))
        throw DimensionError("truth table must have exactly 2^n values");
    for (double v : t.values)
        if (!(v >= -1.0 && v <= 1.0)) throw ParamError("truth table values must lie in [-1,1]");
    const int n = t.n;
    return FunctionSource(Repr(std::move(t)), n);
}

FunctionSource FunctionSource::ltf(Ltf f) {
    if (f.n() < 1) throw ParamError("LTF dimension must be positive");
    for (double w : f.weights)
        if (!std::isfinite(w)) throw ParamError("LTF weights must be finite");
    if (!std::isfinite(f.theta)) throw ParamError("LTF threshold must be finite");
    const int n = f.n();
    return FunctionSource(Repr(std::move(f)), n);
}

FunctionSource FunctionSource::lbf(Lbf g) {
    if (g.v.size() < 2) throw ParamError("LBF needs a constant term and at least one coordinate");
    if (!(g.kappa > 0.0) || !std::isfinite(g.kappa))
        throw ParamError("LBF scale kappa must be positive and finite");
    const int n = g.n();
    return FunctionSource(Repr(std::move(g)), n);
}

FunctionSource FunctionSource::oracle(FunctionSource exact_target, std::uint64_t seed) {
    if (!exact_target.exact()) throw ParamError("sampling oracle target must be an exact source");
    const int n = exact_target.n();
    SamplingOracle o{std::make_shared<const FunctionSource>(std::move(exact_target)), seed};
    return FunctionSource(Repr(std::move(o)), n);
}

double FunctionSource::eval(std::span<const int> x) const {
    return std::visit(
        [&](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, TruthTable>) {
                check_point(x, f.n);
                std::uint64_t idx = 0;
                for (int xi : x) idx = (idx << 1) | (xi > 0 ? 1u : 0u);
                return f.values[idx];
            } else if constexpr (std::is_same_v<T, Ltf>) {
                return eval_ltf(f, x);
            } else if constexpr (std::is_same_v<T, Lbf>) {
                return eval_lbf(f, x);
            } else {
                throw ParamError("sampling-oracle sources cannot be evaluated at chosen points");
            }
        },
        repr_);
}

double FunctionSource::eval_index(std::uint64_t idx) const {
    return std::visit(
        [&](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, TruthTable>) {
                return f.values[idx];
            } else if constexpr (std::is_same_v<T, Ltf>) {
                return eval_ltf_index(f, idx);
            } else if constexpr (std::is_same_v<T, Lbf>) {
                return eval_lbf_index(f, idx);
            } else {
                throw ParamError("sampling-oracle sources cannot be evaluated at chosen points");
            }
        },
        repr_);
}

TruthTable tabulate(const FunctionSource& f) {
    if (!f.exact()) throw ParamError("cannot tabulate a sampling-oracle source");
    const int n = f.n();
    check_enumerable(n);
    TruthTable t;
    t.n = n;
    t.values.resize(std::size_t{1} << n);
    for (std::uint64_t idx = 0; idx < t.values.size(); ++idx)
        t.values[idx] = f.eval_index(idx);
    return t;
}

TruthTable tabulate(const Ltf& f) { return tabulate(FunctionSource::ltf(f)); }
TruthTable tabulate(const Lbf& g) { return tabulate(FunctionSource::lbf(g)); }

LtfFromLbf lbf_to_ltf(const Lbf& g) {
    const int n = g.n();
    bool all_zero = true;
    for (std::int64_t vi : g.v)
        if (vi != 0) all_zero = false;

    LtfFromLbf out;
    out.ltf.weights.assign(n, 0.0);
    if (all_zero) {
        // g == 0 everywhere; sign(0) = +1 makes the constant +1 LTF the
        // canonical conversion.
        out.ltf.theta = 0.0;
        out.degenerate = true;
        return out;
    }
    for (int i = 1; i <= n; ++i) out.ltf.weights[i - 1] = g.kappa * static_cast<double>(g.v[i]);
    out.ltf.theta = -g.kappa * static_cast<double>(g.v[0]);
    return out;
}

}  // namespace chowlab
