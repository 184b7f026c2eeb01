#include "chowlab/pipeline.hpp"

#include <cmath>
#include <limits>

#include "chowlab/rng.hpp"

namespace chowlab {

ApproxResult approx_weights(const Ltf& f, const ApproxParams& params) {
    if (!(params.eps > 0.0) || !std::isfinite(params.eps))
        throw ParamError("eps must be positive and finite");
    const int n = f.n();
    const bool enumerable = n <= enumeration_cap();
    if (params.mode == ChowMode::exact && !enumerable)
        throw CapError("exact mode needs n <= cap");

    ApproxResult out;
    const FunctionSource src = FunctionSource::ltf(f);
    if (params.mode == ChowMode::exact) {
        out.alpha = chow_exact(src);
    } else {
        EstimatorConfig cfg;
        cfg.t = params.eps / std::sqrt(static_cast<double>(n + 1));
        cfg.delta = params.delta;
        cfg.seed = derive_seed(params.seed, 1);
        out.alpha = chow_estimate(src, cfg);
    }

    ReconstructParams rp;
    rp.eps = params.eps;
    rp.delta = params.delta;
    rp.mode = params.mode;
    rp.seed = derive_seed(params.seed, 2);
    ReconstructResult rec = chow_reconstruct(out.alpha, rp);

    LtfFromLbf conv = lbf_to_ltf(rec.lbf);
    out.fstar = std::move(conv.ltf);
    out.degenerate = conv.degenerate;

    double vsq = 0.0;
    for (std::int64_t vi : rec.lbf.v) vsq += static_cast<double>(vi) * static_cast<double>(vi);
    out.v_norm_sq = vsq;

    if (enumerable) {
        const TruthTable ft = tabulate(f);
        out.dchow_final = chow_distance(chow_exact(ft), chow_exact(FunctionSource::lbf(rec.lbf)));
        out.dist_final = dist_l1(ft, tabulate(out.fstar));
    } else {
        out.dchow_final = std::numeric_limits<double>::quiet_NaN();
        out.dist_final = std::numeric_limits<double>::quiet_NaN();
    }

    out.lbf = std::move(rec.lbf);
    out.trace = std::move(rec.trace);
    return out;
}

}  // namespace chowlab
