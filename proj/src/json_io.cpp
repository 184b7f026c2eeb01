#include "chowlab/json_io.hpp"

#include <cmath>
#include <fstream>

namespace chowlab {

using nlohmann::json;

namespace {

void require_keys(const json& j, std::initializer_list<const char*> keys,
                  const char* what) {
    if (!j.is_object()) throw ParamError(std::string(what) + ": expected a JSON object");
    for (const char* k : keys)
        if (!j.contains(k))
            throw ParamError(std::string(what) + ": missing field \"" + k + "\"");
    for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (const char* k : keys)
            if (key == k) known = true;
        if (!known)
            throw ParamError(std::string(what) + ": unknown field \"" + key + "\"");
    }
}

int read_dim(const json& j, const char* what) {
    if (!j["n"].is_number_integer()) throw ParamError(std::string(what) + ": n must be an integer");
    const long long n = j["n"].get<long long>();
    if (n < 1 || n > 62) throw ParamError(std::string(what) + ": n out of range");
    return static_cast<int>(n);
}

std::vector<double> read_reals(const json& arr, std::size_t count, const char* what) {
    if (!arr.is_array() || arr.size() != count)
        throw ParamError(std::string(what) + ": wrong array length");
    std::vector<double> out;
    out.reserve(count);
    for (const auto& v : arr) {
        if (!v.is_number()) throw ParamError(std::string(what) + ": array entries must be numbers");
        const double d = v.get<double>();
        if (!std::isfinite(d)) throw ParamError(std::string(what) + ": entries must be finite");
        out.push_back(d);
    }
    return out;
}

}  // namespace

json ltf_to_json(const Ltf& f) {
    return json{{"n", f.n()}, {"weights", f.weights}, {"theta", f.theta}};
}

Ltf ltf_from_json(const json& j) {
    require_keys(j, {"n", "weights", "theta"}, "LTF");
    const int n = read_dim(j, "LTF");
    Ltf f;
    f.weights = read_reals(j["weights"], static_cast<std::size_t>(n), "LTF weights");
    if (!j["theta"].is_number()) throw ParamError("LTF: theta must be a number");
    f.theta = j["theta"].get<double>();
    if (!std::isfinite(f.theta)) throw ParamError("LTF: theta must be finite");
    return f;
}

json lbf_to_json(const Lbf& g) {
    return json{{"n", g.n()}, {"kappa", g.kappa}, {"v", g.v}};
}

Lbf lbf_from_json(const json& j) {
    require_keys(j, {"n", "kappa", "v"}, "LBF");
    const int n = read_dim(j, "LBF");
    Lbf g;
    if (!j["kappa"].is_number()) throw ParamError("LBF: kappa must be a number");
    g.kappa = j["kappa"].get<double>();
    if (!(g.kappa > 0.0) || !std::isfinite(g.kappa))
        throw ParamError("LBF: kappa must be positive and finite");
    const auto& arr = j["v"];
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n) + 1)
        throw ParamError("LBF: v must have n+1 entries");
    for (const auto& v : arr) {
        if (!v.is_number_integer()) throw ParamError("LBF: v entries must be exact integers");
        g.v.push_back(v.get<std::int64_t>());
    }
    return g;
}

json table_to_json(const TruthTable& t) {
    return json{{"n", t.n}, {"values", t.values}};
}

TruthTable table_from_json(const json& j) {
    require_keys(j, {"n", "values"}, "TruthTable");
    const int n = read_dim(j, "TruthTable");
    if (n > 30) throw ParamError("TruthTable: n too large for a dense table");
    TruthTable t;
    t.n = n;
    t.values = read_reals(j["values"], std::size_t{1} << n, "TruthTable values");
    for (double v : t.values)
        if (!(v >= -1.0 && v <= 1.0)) throw ParamError("TruthTable: values must lie in [-1,1]");
    return t;
}

json chow_to_json(const ChowVector& c) {
    return json{{"n", c.n()}, {"values", c.values}};
}

ChowVector chow_from_json(const json& j) {
    require_keys(j, {"n", "values"}, "ChowVector");
    const int n = read_dim(j, "ChowVector");
    ChowVector c;
    c.values = read_reals(j["values"], static_cast<std::size_t>(n) + 1, "ChowVector values");
    return c;
}

json trace_to_json(const ReconstructTrace& trace) {
    json out{{"iterations", trace.iterations},
             {"stop_reason", trace.stop_reason == StopReason::rho ? "rho" : "cap"},
             {"kappa", trace.kappa},
             {"v", trace.v}};
    json rho = json::array();
    for (const auto& rec : trace.records) rho.push_back(rec.rho);
    out["rho_history"] = std::move(rho);
    if (!trace.records.empty() && trace.records.front().potential) {
        json pot = json::array();
        for (const auto& rec : trace.records)
            pot.push_back(rec.potential ? json(*rec.potential) : json());
        out["potential_history"] = std::move(pot);
    }
    return out;
}

json learn_result_to_json(const LearnResult& r) {
    json out{{"hypothesis", ltf_to_json(r.hypothesis)},
             {"degenerate_hypothesis", r.degenerate_hypothesis},
             {"chow_accuracy_used", r.chow_accuracy_used},
             {"samples_consumed", r.samples_consumed},
             {"lbf", lbf_to_json(r.lbf)},
             {"trace", trace_to_json(r.trace)}};
    if (std::isfinite(r.dchow_alpha_lbf)) out["dchow_alpha_lbf"] = r.dchow_alpha_lbf;
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParamError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParamError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParamError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace chowlab
