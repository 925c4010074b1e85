#pragma once

#include "frwgalois/cli/analysis.hpp"

#include <json.hpp>

namespace frwgalois {

inline constexpr const char* kReportSchema = "frwgalois.report/1";

[[nodiscard]] nlohmann::json to_json(const Verdict& verdict);
[[nodiscard]] nlohmann::json to_json(const AnalysisReport& report);
[[nodiscard]] nlohmann::json to_json(const DarbouxReport& report);
[[nodiscard]] nlohmann::json to_json(const IntegralCheck& check);
/// hve-check result; `obstruction` empty means none up to `max_order`.
[[nodiscard]] nlohmann::json hve_to_json(long n, const HveParameters& params, int max_order,
                                         const std::optional<Obstruction>& obstruction);

} // namespace frwgalois
