#pragma once

#include <string>

#include <json.hpp>

#include "vhess/analysis.hpp"

namespace vhess {

/// Renders a form in the dual variables y0..yN.
std::string print_dual(const MultiPoly& g);

nlohmann::json to_json(const RankCertificate& c);
nlohmann::json to_json(const RelationBasis& r);
nlohmann::json to_json(const LinearSubspace& s);

/// Schema-stable report. Timings are wall-clock and therefore only emitted on request, so that
/// two runs with the same seed produce identical bytes.
nlohmann::json to_json(const AnalysisReport& r, bool include_timings = false);

std::string to_text(const AnalysisReport& r, bool include_timings = false);

}  // namespace vhess
