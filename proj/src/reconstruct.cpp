#include "chowlab/reconstruct.hpp"

#include <cmath>
#include <string>

#include "chowlab/rng.hpp"

namespace chowlab {

GridRound round_to_grid(double alpha_i, double beta_i, double unit) {
    if (!(unit > 0.0) || !std::isfinite(unit)) throw ParamError("grid unit must be positive");
    const double q = (alpha_i - beta_i) / unit;
    // round half up
    const double rounded = std::floor(q + 0.5);
    if (!(std::fabs(rounded) < 9.0e18)) throw Error("grid index overflow");
    GridRound out;
    out.m = static_cast<std::int64_t>(rounded);
    out.value = alpha_i - static_cast<double>(out.m) * unit;
    return out;
}

long long reconstruct_iteration_cap(double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw ParamError("eps must be positive");
    const double cap = std::ceil(1.0 / (2.0 * eps * eps));
    if (!(cap < 9.0e18)) throw ParamError("eps too small, iteration cap overflows");
    return static_cast<long long>(cap);
}

double potential(const TruthTable& f, const Lbf& g) {
    if (f.n != g.n()) throw DimensionError("table and LBF dimensions differ");
    if (f.n > enumeration_cap()) throw CapError("n exceeds the enumeration cap");
    if (!f.is_boolean()) throw ParamError("potential target must be Boolean");
    const std::uint64_t size = std::uint64_t{1} << f.n;
    double acc = 0.0;
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        const double gp = g.kappa * static_cast<double>(lbf_linear_sum(g, idx));
        const double gt = project_p1(gp);
        const double fv = f.values[idx];
        acc += (fv - gt) * (fv - 2.0 * gp + gt);
    }
    return acc / static_cast<double>(size);
}

ReconstructResult chow_reconstruct(const ChowVector& alpha, const ReconstructParams& params,
                                   const TruthTable* potential_target) {
    if (alpha.values.size() < 2) throw ParamError("alpha must have n+1 >= 2 entries");
    for (double a : alpha.values)
        if (!std::isfinite(a)) throw ParamError("alpha entries must be finite");
    if (!(params.eps > 0.0) || !std::isfinite(params.eps))
        throw ParamError("eps must be positive and finite");
    if (!(params.delta > 0.0 && params.delta < 1.0)) throw ParamError("delta must lie in (0,1)");

    const int n = alpha.n();
    if (params.mode == ChowMode::exact && n > enumeration_cap())
        throw CapError("exact mode needs n <= cap; use estimated mode beyond it");

    const double eps = params.eps;
    const double kappa = eps / (4.0 * std::sqrt(static_cast<double>(n + 1)));
    const double unit = 2.0 * kappa;  // == eps/(2 sqrt(n+1)), exactly
    const long long cap = params.max_iters ? *params.max_iters : reconstruct_iteration_cap(eps);
    if (cap < 0) throw ParamError("iteration cap must be nonnegative");

    const bool track_potential = potential_target != nullptr &&
                                 params.mode == ChowMode::exact && n <= enumeration_cap();
    if (track_potential &&
        (potential_target->n != n || !potential_target->is_boolean()))
        throw ParamError("potential target must be a Boolean table of matching dimension");

    Lbf g;
    g.kappa = kappa;
    g.v.assign(n + 1, 0);

    ReconstructResult out;
    out.trace.kappa = kappa;

    std::vector<std::int64_t> increments(n + 1);
    for (long long t = 0;; ++t) {
        ChowVector beta;
        if (params.mode == ChowMode::exact) {
            beta = chow_exact(FunctionSource::lbf(g));
        } else {
            EstimatorConfig cfg;
            cfg.t = kappa;  // per-coefficient accuracy eps/(4 sqrt(n+1))
            cfg.delta = params.delta / static_cast<double>(std::max<long long>(cap, 1));
            cfg.seed = derive_seed(params.seed, static_cast<std::uint64_t>(t));
            cfg.batch = params.batch;
            beta = chow_estimate(FunctionSource::lbf(g), cfg);
        }

        IterationRecord rec;
        rec.t = t;
        rec.g_tilde.values.resize(n + 1);
        double rho_sq = 0.0;
        for (int i = 0; i <= n; ++i) {
            const GridRound r = round_to_grid(alpha.values[i], beta.values[i], unit);
            increments[i] = r.m;
            rec.g_tilde.values[i] = r.value;
            const double d = alpha.values[i] - r.value;
            rho_sq += d * d;
        }
        rec.rho = std::sqrt(rho_sq);
        if (!std::isfinite(rec.rho)) throw Error("rho is not finite");
        if (track_potential) rec.potential = potential(*potential_target, g);
        out.trace.records.push_back(std::move(rec));

        const double rho = out.trace.records.back().rho;
        if (rho <= 4.0 * eps) {
            out.trace.stop_reason = StopReason::rho;
            out.trace.iterations = t;
            break;
        }
        if (t >= cap) {
            out.trace.stop_reason = StopReason::cap;
            out.trace.iterations = t;
            break;
        }
        // g'_{t+1} = g'_t + h_t/2; each coordinate of h_t/2 is increments[i]
        // grid units of kappa, so v stays integral with no float checks.
        for (int i = 0; i <= n; ++i) g.v[i] += increments[i];
    }

    out.trace.v = g.v;
    out.lbf = std::move(g);
    return out;
}

}  // namespace chowlab
