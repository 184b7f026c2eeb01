#pragma once

#include <string>

#include <json.hpp>

#include "chowlab/chow.hpp"
#include "chowlab/func.hpp"
#include "chowlab/learners.hpp"
#include "chowlab/reconstruct.hpp"

namespace chowlab {

// File formats are fixed and validated strictly: exact key sets (unknown
// fields rejected), exact lengths, finite numbers.
//   LTF        {"n": int, "weights": [n reals], "theta": real}
//   LBF        {"n": int, "kappa": real, "v": [n+1 ints]}
//   TruthTable {"n": int, "values": [2^n reals in [-1,1]]}
//   ChowVector {"n": int, "values": [n+1 reals]}

nlohmann::json ltf_to_json(const Ltf& f);
Ltf ltf_from_json(const nlohmann::json& j);

nlohmann::json lbf_to_json(const Lbf& g);
Lbf lbf_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const TruthTable& t);
TruthTable table_from_json(const nlohmann::json& j);

nlohmann::json chow_to_json(const ChowVector& c);
ChowVector chow_from_json(const nlohmann::json& j);

// {"iterations", "stop_reason": "rho"|"cap", "rho_history", "kappa", "v",
//  "potential_history"?}
nlohmann::json trace_to_json(const ReconstructTrace& trace);

nlohmann::json learn_result_to_json(const LearnResult& r);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace chowlab
