#pragma once

#include "covario/concavity.hpp"
#include "covario/optimizer.hpp"
#include "covario/scenarios.hpp"

#include <iosfwd>
#include <nlohmann/json_fwd.hpp>
#include <string>

namespace covario {

// Body JSON schema:
//   { "dim": 2|3,
//     "kind": "vertices" | "halfspaces" | "generator",
//     "data": [...],
//     "smoothness": "polytope" | {"strictly_convex_approx": k} }
nlohmann::json body_to_json(const ConvexBody& body);
ConvexBody body_from_json(const nlohmann::json& j);
ConvexBody load_body(const std::string& path);
void save_body(const ConvexBody& body, const std::string& path);

// "0.5,0.5" -> vector; throws on malformed input or dimension mismatch.
Vec parse_vec(const std::string& csv, int expected_dim = -1);

nlohmann::json to_json(const ConcavityReport& rep);
nlohmann::json to_json(const HomothetyWitness& w);
nlohmann::json to_json(const ReconstructionReport& rep);
nlohmann::json to_json(const MaxResult& res);
nlohmann::json to_json(const LevelSetReport& rep);

// CSV rows (t, g, g_root), fixed column order.
void write_profile_csv(std::ostream& out, const SegmentProfile& profile);

}  // namespace covario
