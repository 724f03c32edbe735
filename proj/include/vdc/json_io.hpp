#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "vdc/certify.hpp"
#include "vdc/closed_forms.hpp"
#include "vdc/core.hpp"
#include "vdc/extremal.hpp"
#include "vdc/properties.hpp"
#include "vdc/simplex.hpp"

namespace vdc {

using Json = nlohmann::ordered_json;

/// 17 significant digits, '.' separator; "null" for non-finite values.
[[nodiscard]] std::string format_number(double v);

/// Serializes with fixed field order and every double printed with 17
/// significant digits ('.' separator, locale independent). Non-finite
/// doubles become null. indent < 0 gives a single line.
[[nodiscard]] std::string dump_json(const Json& value, int indent = 2);

/// {"degree": H, "coeffs": [t0, ..., tH]}
[[nodiscard]] Json to_json(const CosPoly& poly);
/// Throws ParseError on a malformed document or degree/coeffs mismatch.
[[nodiscard]] CosPoly cospoly_from_json(const Json& doc);

/// {"p", "q", "r0", "shifts", "gammas", "A"}
[[nodiscard]] Json to_json(const GammaSolution& gamma);

/// {"status", "value", "coeffs", "grid", "iterations"}
[[nodiscard]] Json lp_report_json(const LPResult& result, const CosPoly& poly, std::int64_t grid);

[[nodiscard]] Json to_json(const Certificate& cert);
[[nodiscard]] Json to_json(const MembershipReport& report);
/// {"check", "inputs", "values", "pass"}
[[nodiscard]] Json to_json(const CheckReport& report);

[[nodiscard]] CosPoly read_cospoly(const std::filesystem::path& path);
void write_cospoly(const std::filesystem::path& path, const CosPoly& poly);

}  // namespace vdc
