#pragma once

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qbound/bipartite.hpp"
#include "qbound/concurrence.hpp"
#include "qbound/criteria.hpp"
#include "qbound/witness.hpp"

namespace qbound {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

/// Serialize as {"dims": [m, n], "matrix": [{"re": .., "im": ..}, ...]} with
/// the matrix in row-major order. Output is canonical: sorted keys, shortest
/// round-trip numbers; saving a loaded file reproduces it byte for byte.
nlohmann::json state_to_json(const BipartiteDensity& s);

/// Parse and validate; invariant violations surface as PreconditionError
/// naming the failed invariant and its magnitude.
BipartiteDensity state_from_json(const nlohmann::json& j);

void save_state_file(const std::string& path, const BipartiteDensity& s);
BipartiteDensity load_state_file(const std::string& path);

nlohmann::json witness_to_json(const WitnessOperator& w);
WitnessOperator witness_from_json(const nlohmann::json& j);
void save_witness_file(const std::string& path, const WitnessOperator& w);
WitnessOperator load_witness_file(const std::string& path);

nlohmann::json criteria_to_json(const CriteriaReport& r);
nlohmann::json bound_to_json(const ConcurrenceBound& b);
nlohmann::json roof_to_json(const RoofEstimate& e);

/// Full evaluation report: criteria + bound (+ roof when present).
nlohmann::json report_to_json(const CriteriaReport& r, const ConcurrenceBound& b,
                              const RoofEstimate* roof = nullptr);

}  // namespace qbound
