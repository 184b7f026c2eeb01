// chowlab: reconstruct linear threshold functions from their degree-0/1
// Fourier coefficients, approximate them with small integer weights, and
// cross-check against an exact LP oracle on small instances.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chowlab/chow.hpp"
#include "chowlab/exact_lp.hpp"
#include "chowlab/instances.hpp"
#include "chowlab/json_io.hpp"
#include "chowlab/learners.hpp"
#include "chowlab/pipeline.hpp"
#include "chowlab/reconstruct.hpp"
#include "chowlab/rng.hpp"
#include "chowlab/structural.hpp"

using nlohmann::json;
using namespace chowlab;

namespace {

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

struct Report {
    json body;
    json timings = json::object();
    json outputs = json::object();
    json metrics = json::object();

    explicit Report(const std::string& command, std::uint64_t seed) {
        body["command"] = command;
        body["seed"] = seed;
        body["params"] = json::object();
    }

    void emit() {
        body["timings_ms"] = timings;
        body["outputs"] = outputs;
        body["metrics"] = metrics;
        std::cout << body.dump(2) << "\n";
    }
};

double vec_norm(const std::vector<std::int64_t>& v) {
    double s = 0.0;
    for (std::int64_t x : v) s += static_cast<double>(x) * static_cast<double>(x);
    return std::sqrt(s);
}

double vec_norm_sq(const std::vector<std::int64_t>& v) {
    double s = 0.0;
    for (std::int64_t x : v) s += static_cast<double>(x) * static_cast<double>(x);
    return s;
}

ChowMode parse_mode(const std::string& mode) {
    if (mode == "exact") return ChowMode::exact;
    if (mode == "estimated") return ChowMode::estimated;
    throw ParamError("mode must be exact or estimated");
}

void put_if_finite(json& obj, const char* key, double value) {
    if (std::isfinite(value)) obj[key] = value;
}

json reconstruct_metrics(const ReconstructTrace& trace) {
    json m;
    m["iterations"] = trace.iterations;
    m["stop_reason"] = trace.stop_reason == StopReason::rho ? "rho" : "cap";
    m["kappa"] = trace.kappa;
    m["rho_final"] = trace.records.back().rho;
    m["v_norm"] = vec_norm(trace.v);
    m["v_norm_sq"] = vec_norm_sq(trace.v);
    return m;
}

// ---------------------------------------------------------------- chow

struct ChowArgs {
    std::string ltf_path, table_path, lbf_path;
    std::string mode = "exact";
    double t = 0.05, delta = 0.1;
    std::uint64_t seed = 0;
    std::size_t batch = 8192;
    std::string out;
};

int run_chow(const ChowArgs& a) {
    Report rep("chow", a.seed);
    rep.body["params"] = {{"mode", a.mode}, {"t", a.t}, {"delta", a.delta}, {"batch", a.batch}};

    const int sources = !a.ltf_path.empty() + !a.table_path.empty() + !a.lbf_path.empty();
    if (sources != 1) throw ParamError("give exactly one of --ltf, --table, --lbf");
    std::optional<FunctionSource> src;
    if (!a.ltf_path.empty()) src = FunctionSource::ltf(ltf_from_json(load_json_file(a.ltf_path)));
    if (!a.table_path.empty())
        src = FunctionSource::table(table_from_json(load_json_file(a.table_path)));
    if (!a.lbf_path.empty()) src = FunctionSource::lbf(lbf_from_json(load_json_file(a.lbf_path)));

    Stopwatch sw;
    ChowVector c;
    if (parse_mode(a.mode) == ChowMode::exact) {
        c = chow_exact(*src);
    } else {
        EstimatorConfig cfg{a.t, a.delta, a.seed, a.batch, std::nullopt};
        c = chow_estimate(*src, cfg);
        rep.metrics["samples"] = hoeffding_samples(a.t, a.delta, src->n());
    }
    rep.timings["compute"] = sw.ms();

    rep.metrics["n"] = c.n();
    rep.metrics["mode"] = a.mode;
    rep.metrics["values"] = c.values;
    if (!a.out.empty()) {
        save_json_file(a.out, chow_to_json(c));
        rep.outputs["chow"] = a.out;
    }
    rep.emit();
    return 0;
}

// ---------------------------------------------------------------- reconstruct

struct ReconstructArgs {
    std::string alpha_path;
    double eps = 0.1, delta = 0.1;
    std::string mode = "exact";
    std::uint64_t seed = 0;
    std::string out, trace_path, target_path;
    std::optional<long long> max_iters;
};

int run_reconstruct(const ReconstructArgs& a) {
    Report rep("reconstruct", a.seed);
    rep.body["params"] = {{"alpha", a.alpha_path}, {"eps", a.eps}, {"delta", a.delta},
                          {"mode", a.mode}};

    const ChowVector alpha = chow_from_json(load_json_file(a.alpha_path));
    ReconstructParams params;
    params.eps = a.eps;
    params.delta = a.delta;
    params.mode = parse_mode(a.mode);
    params.seed = a.seed;
    params.max_iters = a.max_iters;

    std::optional<TruthTable> target;
    if (!a.target_path.empty()) target = table_from_json(load_json_file(a.target_path));

    Stopwatch sw;
    const ReconstructResult res =
        chow_reconstruct(alpha, params, target ? &*target : nullptr);
    rep.timings["reconstruct"] = sw.ms();

    rep.metrics = reconstruct_metrics(res.trace);
    rep.metrics["n"] = alpha.n();
    rep.metrics["eps"] = a.eps;
    if (params.mode == ChowMode::exact && alpha.n() <= enumeration_cap())
        rep.metrics["dchow_alpha_lbf"] =
            chow_distance(alpha, chow_exact(FunctionSource::lbf(res.lbf)));

    if (!a.out.empty()) {
        save_json_file(a.out, lbf_to_json(res.lbf));
        rep.outputs["lbf"] = a.out;
    }
    if (!a.trace_path.empty()) {
        save_json_file(a.trace_path, trace_to_json(res.trace));
        rep.outputs["trace"] = a.trace_path;
    }
    rep.emit();
    return res.converged() ? 0 : 3;
}

// ---------------------------------------------------------------- exact / weights

int run_exact(const std::string& alpha_path, const std::string& out) {
    Report rep("exact", 0);
    rep.body["params"] = {{"alpha", alpha_path}};
    const ChowVector alpha = chow_from_json(load_json_file(alpha_path));

    Stopwatch sw;
    const TruthTable t = solve_exact_chow(alpha);
    rep.timings["lp"] = sw.ms();

    rep.metrics["n"] = t.n;
    rep.metrics["points"] = t.values.size();
    if (!out.empty()) {
        save_json_file(out, table_to_json(t));
        rep.outputs["table"] = out;
    }
    rep.emit();
    return 0;
}

int run_weights(const std::string& table_path, const std::string& out) {
    Report rep("weights", 0);
    rep.body["params"] = {{"table", table_path}};
    const TruthTable t = table_from_json(load_json_file(table_path));

    Stopwatch sw;
    const Ltf f = recover_weights(t);
    rep.timings["lp"] = sw.ms();

    double min_margin = std::numeric_limits<double>::infinity();
    for (std::uint64_t idx = 0; idx < t.values.size(); ++idx) {
        double s = -f.theta;
        for (int i = 1; i <= t.n; ++i) s += coord_from_index(idx, t.n, i) * f.weights[i - 1];
        min_margin = std::min(min_margin, t.values[idx] * s);
    }
    rep.metrics["n"] = t.n;
    rep.metrics["min_margin"] = min_margin;
    if (!out.empty()) {
        save_json_file(out, ltf_to_json(f));
        rep.outputs["ltf"] = out;
    }
    rep.emit();
    return 0;
}

// ---------------------------------------------------------------- approx

struct ApproxArgs {
    std::string ltf_path;
    std::string gen;  // gaussian | integer
    int n = 0;
    long long w_total = 0;
    double theta = 0.0;
    double eps = 0.1, delta = 0.1;
    std::string mode = "exact";
    std::uint64_t seed = 0;
    std::string out, lbf_out, trace_path, gen_out;
};

int run_approx(const ApproxArgs& a) {
    Report rep("approx", a.seed);
    rep.body["params"] = {{"eps", a.eps}, {"delta", a.delta}, {"mode", a.mode}};

    Ltf f;
    if (!a.ltf_path.empty()) {
        if (!a.gen.empty()) throw ParamError("give either --ltf or --gen, not both");
        f = ltf_from_json(load_json_file(a.ltf_path));
        rep.body["params"]["ltf"] = a.ltf_path;
    } else if (a.gen == "gaussian") {
        f = random_ltf_gaussian(a.n, a.seed, a.theta);
        rep.body["params"]["gen"] = {{"model", "gaussian"}, {"n", a.n}, {"theta", a.theta}};
    } else if (a.gen == "integer") {
        f = random_ltf_integer(a.n, a.w_total, a.seed);
        rep.body["params"]["gen"] = {{"model", "integer"}, {"n", a.n}, {"W", a.w_total}};
    } else {
        throw ParamError("give --ltf <file> or --gen gaussian|integer");
    }

    ApproxParams params;
    params.eps = a.eps;
    params.delta = a.delta;
    params.mode = parse_mode(a.mode);
    params.seed = a.seed;

    Stopwatch sw;
    const ApproxResult res = approx_weights(f, params);
    rep.timings["pipeline"] = sw.ms();

    rep.metrics = reconstruct_metrics(res.trace);
    rep.metrics["n"] = f.n();
    rep.metrics["eps"] = a.eps;
    rep.metrics["mode"] = a.mode;
    rep.metrics["degenerate"] = res.degenerate;
    put_if_finite(rep.metrics, "dchow_final", res.dchow_final);
    put_if_finite(rep.metrics, "dist_final", res.dist_final);

    if (!a.gen_out.empty()) {
        save_json_file(a.gen_out, ltf_to_json(f));
        rep.outputs["instance"] = a.gen_out;
    }
    if (!a.out.empty()) {
        save_json_file(a.out, ltf_to_json(res.fstar));
        rep.outputs["ltf"] = a.out;
    }
    if (!a.lbf_out.empty()) {
        save_json_file(a.lbf_out, lbf_to_json(res.lbf));
        rep.outputs["lbf"] = a.lbf_out;
    }
    if (!a.trace_path.empty()) {
        save_json_file(a.trace_path, trace_to_json(res.trace));
        rep.outputs["trace"] = a.trace_path;
    }
    rep.emit();
    return res.trace.stop_reason == StopReason::rho ? 0 : 3;
}

// ---------------------------------------------------------------- learners

struct LearnArgs {
    std::string target_path;
    int n = 0;  // optional cross-check against the target file
    double acc = 0.0, eps = 0.0, delta = 0.1, noise = 0.0;
    long long w_bound = 0;
    std::uint64_t seed = 0;
    std::string out;
};

double resolve_accuracy(const LearnArgs& a) {
    if (a.acc > 0.0) return a.acc;
    // documented default: acc = eps / (12 W) given a total-weight bound W
    if (a.eps > 0.0 && a.w_bound > 0)
        return a.eps / (12.0 * static_cast<double>(a.w_bound));
    throw ParamError("give --acc, or --eps together with --W");
}

int run_learn(const LearnArgs& a, bool rfa) {
    Report rep(rfa ? "learn-rfa" : "learn-agnostic", a.seed);
    const Ltf target = ltf_from_json(load_json_file(a.target_path));
    if (a.n != 0 && a.n != target.n())
        throw ParamError("--n disagrees with the target dimension");
    const double acc = resolve_accuracy(a);
    rep.body["params"] = {{"target", a.target_path}, {"acc", acc}, {"delta", a.delta}};

    Stopwatch sw;
    LearnResult res;
    if (rfa) {
        RfaOracle oracle(FunctionSource::ltf(target), derive_seed(a.seed, 1));
        res = learn_rfa(oracle, acc, a.delta, derive_seed(a.seed, 2));
    } else {
        rep.body["params"]["noise"] = a.noise;
        rep.body["params"]["eps"] = a.eps;
        ExampleOracle oracle(FunctionSource::ltf(target), a.noise, derive_seed(a.seed, 1));
        res = learn_agnostic(oracle, a.eps > 0.0 ? a.eps : 0.5, a.delta, acc,
                             derive_seed(a.seed, 2));
    }
    rep.timings["learn"] = sw.ms();

    rep.metrics = reconstruct_metrics(res.trace);
    rep.metrics["n"] = target.n();
    rep.metrics["acc"] = acc;
    rep.metrics["samples_consumed"] = res.samples_consumed;
    rep.metrics["degenerate"] = res.degenerate_hypothesis;
    put_if_finite(rep.metrics, "dchow_alpha_lbf", res.dchow_alpha_lbf);
    if (target.n() <= enumeration_cap())
        rep.metrics["dist_target_hypothesis"] =
            dist_l1(tabulate(target), tabulate(res.hypothesis));

    if (!a.out.empty()) {
        save_json_file(a.out, learn_result_to_json(res));
        rep.outputs["result"] = a.out;
    }
    rep.emit();
    return res.trace.stop_reason == StopReason::rho ? 0 : 3;
}

// ---------------------------------------------------------------- probe

struct ProbeArgs {
    int pairs = 50;
    int n = 10;
    double flip = 5.0;  // percent
    std::uint64_t seed = 0;
    std::string out;
};

int run_probe(const ProbeArgs& a) {
    Report rep("probe", a.seed);
    rep.body["params"] = {{"pairs", a.pairs}, {"n", a.n}, {"flip", a.flip}};
    if (a.pairs < 1) throw ParamError("--pairs must be positive");
    if (!(a.flip >= 0.0 && a.flip <= 100.0)) throw ParamError("--flip must be a percentage");

    Stopwatch sw;
    std::string csv = "dchow,dist\n";
    double max_ratio = 0.0;
    bool envelope = true;
    for (int k = 0; k < a.pairs; ++k) {
        const Ltf f = random_ltf_gaussian(a.n, derive_seed(a.seed, 2 * k));
        const TruthTable g =
            flip_fraction(tabulate(f), a.flip / 100.0, derive_seed(a.seed, 2 * k + 1));
        const auto [dchow, dist] = dchow_vs_dist_probe(f, g);
        csv += std::to_string(dchow) + "," + std::to_string(dist) + "\n";
        const double envelope_bound = 2.0 * std::sqrt(dist) + 1e-9;
        if (dchow > envelope_bound) envelope = false;
        if (dist > 0.0) max_ratio = std::max(max_ratio, dchow / (2.0 * std::sqrt(dist)));
    }
    rep.timings["probe"] = sw.ms();

    rep.metrics["pairs"] = a.pairs;
    rep.metrics["n"] = a.n;
    rep.metrics["envelope_holds"] = envelope;
    rep.metrics["max_envelope_ratio"] = max_ratio;
    if (!a.out.empty()) {
        std::ofstream out(a.out);
        if (!out) throw ParamError("cannot write " + a.out);
        out << csv;
        rep.outputs["csv"] = a.out;
    }
    rep.emit();
    return 0;
}

void apply_cap_env() {
    if (const char* cap = std::getenv("CHOWLAB_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(cap, &end, 10);
        if (end == cap || *end != '\0' || v < 1 || v > 30)
            throw ParamError("CHOWLAB_CAP must be an integer in [1,30]");
        set_enumeration_cap(static_cast<int>(v));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chow-parameter reconstruction of linear threshold functions"};
    app.require_subcommand(1);

    ChowArgs chow_args;
    auto* chow_cmd = app.add_subcommand("chow", "Compute a Chow vector exactly or by sampling");
    chow_cmd->add_option("--ltf", chow_args.ltf_path, "LTF JSON input");
    chow_cmd->add_option("--table", chow_args.table_path, "truth table JSON input");
    chow_cmd->add_option("--lbf", chow_args.lbf_path, "LBF JSON input");
    chow_cmd->add_option("--mode", chow_args.mode, "exact|estimated");
    chow_cmd->add_option("--t", chow_args.t, "per-coefficient accuracy (estimated mode)");
    chow_cmd->add_option("--delta", chow_args.delta, "failure probability (estimated mode)");
    chow_cmd->add_option("--seed", chow_args.seed, "sampling seed");
    chow_cmd->add_option("--batch", chow_args.batch, "sampling batch size");
    chow_cmd->add_option("--out", chow_args.out, "write the Chow vector here");

    ReconstructArgs rec_args;
    auto* rec_cmd = app.add_subcommand("reconstruct", "Build an LBF matching a Chow vector");
    rec_cmd->add_option("--alpha", rec_args.alpha_path, "Chow vector JSON input")->required();
    rec_cmd->add_option("--eps", rec_args.eps, "target accuracy")->required();
    rec_cmd->add_option("--delta", rec_args.delta, "failure probability");
    rec_cmd->add_option("--mode", rec_args.mode, "exact|estimated");
    rec_cmd->add_option("--seed", rec_args.seed, "seed (estimated mode)");
    rec_cmd->add_option("--out", rec_args.out, "write the LBF here");
    rec_cmd->add_option("--trace", rec_args.trace_path, "write the iteration trace here");
    rec_cmd->add_option("--target", rec_args.target_path,
                        "Boolean table for potential tracking (exact mode)");
    long long max_iters = -1;
    rec_cmd->add_option("--max-iters", max_iters, "override the iteration cap");

    std::string exact_alpha, exact_out;
    auto* exact_cmd = app.add_subcommand("exact", "Recover a truth table from an exact Chow vector");
    exact_cmd->add_option("--alpha", exact_alpha, "Chow vector JSON input")->required();
    exact_cmd->add_option("--out", exact_out, "write the table here");

    std::string weights_table, weights_out;
    auto* weights_cmd = app.add_subcommand("weights", "Recover LTF weights from a Boolean table");
    weights_cmd->add_option("--table", weights_table, "truth table JSON input")->required();
    weights_cmd->add_option("--out", weights_out, "write the LTF here");

    ApproxArgs approx_args;
    auto* approx_cmd = app.add_subcommand("approx", "Low-integer-weight approximation pipeline");
    approx_cmd->add_option("--ltf", approx_args.ltf_path, "LTF JSON input");
    approx_cmd->add_option("--gen", approx_args.gen, "generate the instance: gaussian|integer");
    approx_cmd->add_option("--n", approx_args.n, "instance dimension (with --gen)");
    approx_cmd->add_option("--W", approx_args.w_total, "total weight (integer model)");
    approx_cmd->add_option("--theta", approx_args.theta, "threshold (gaussian model)");
    approx_cmd->add_option("--eps", approx_args.eps, "target accuracy")->required();
    approx_cmd->add_option("--delta", approx_args.delta, "failure probability");
    approx_cmd->add_option("--mode", approx_args.mode, "exact|estimated");
    approx_cmd->add_option("--seed", approx_args.seed, "seed");
    approx_cmd->add_option("--out", approx_args.out, "write the approximating LTF here");
    approx_cmd->add_option("--lbf-out", approx_args.lbf_out, "write the intermediate LBF here");
    approx_cmd->add_option("--trace", approx_args.trace_path, "write the trace here");
    approx_cmd->add_option("--gen-out", approx_args.gen_out, "write the generated instance here");

    LearnArgs rfa_args;
    auto* rfa_cmd = app.add_subcommand("learn-rfa", "Learn an LTF from single-coordinate examples");
    rfa_cmd->add_option("--target", rfa_args.target_path, "hidden target LTF JSON")->required();
    rfa_cmd->add_option("--n", rfa_args.n, "expected dimension (cross-checked)");
    rfa_cmd->add_option("--acc", rfa_args.acc, "Chow accuracy");
    rfa_cmd->add_option("--eps", rfa_args.eps, "distance target (with --W)");
    rfa_cmd->add_option("--W", rfa_args.w_bound, "integer weight bound for the acc default");
    rfa_cmd->add_option("--delta", rfa_args.delta, "failure probability");
    rfa_cmd->add_option("--seed", rfa_args.seed, "seed");
    rfa_cmd->add_option("--out", rfa_args.out, "write the LearnResult here");

    LearnArgs agn_args;
    auto* agn_cmd = app.add_subcommand("learn-agnostic", "Learn an LTF from noisy examples");
    agn_cmd->add_option("--target", agn_args.target_path, "hidden target LTF JSON")->required();
    agn_cmd->add_option("--noise", agn_args.noise, "label flip rate in [0, 0.5)");
    agn_cmd->add_option("--n", agn_args.n, "expected dimension (cross-checked)");
    agn_cmd->add_option("--acc", agn_args.acc, "Chow accuracy");
    agn_cmd->add_option("--eps", agn_args.eps, "distance target");
    agn_cmd->add_option("--W", agn_args.w_bound, "integer weight bound for the acc default");
    agn_cmd->add_option("--delta", agn_args.delta, "failure probability");
    agn_cmd->add_option("--seed", agn_args.seed, "seed");
    agn_cmd->add_option("--out", agn_args.out, "write the LearnResult here");

    ProbeArgs probe_args;
    auto* probe_cmd = app.add_subcommand("probe", "Emit (dchow, dist) pairs for plotting");
    probe_cmd->add_option("--pairs", probe_args.pairs, "number of pairs");
    probe_cmd->add_option("--n", probe_args.n, "dimension");
    probe_cmd->add_option("--flip", probe_args.flip, "flip percentage");
    probe_cmd->add_option("--seed", probe_args.seed, "seed");
    probe_cmd->add_option("--out", probe_args.out, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        apply_cap_env();
        if (chow_cmd->parsed()) return run_chow(chow_args);
        if (rec_cmd->parsed()) {
            if (max_iters >= 0) rec_args.max_iters = max_iters;
            return run_reconstruct(rec_args);
        }
        if (exact_cmd->parsed()) return run_exact(exact_alpha, exact_out);
        if (weights_cmd->parsed()) return run_weights(weights_table, weights_out);
        if (approx_cmd->parsed()) return run_approx(approx_args);
        if (rfa_cmd->parsed()) return run_learn(rfa_args, true);
        if (agn_cmd->parsed()) return run_learn(agn_args, false);
        if (probe_cmd->parsed()) return run_probe(probe_args);
        return 2;
    } catch (const ParamError& e) {
        json err{{"command", command}, {"error", e.what()}, {"kind", "param"}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const InfeasibleError& e) {
        json err{{"command", command}, {"error", e.what()}, {"kind", "infeasible"}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "infeasible: " << e.what() << "\n";
        return 3;
    } catch (const NonIntegralError& e) {
        json err{{"command", command}, {"error", e.what()}, {"kind", "non_integral"}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "non-integral: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        json err{{"command", command}, {"error", e.what()}, {"kind", "algorithmic"}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
