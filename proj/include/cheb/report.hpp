#pragma once

#include <json.hpp>

#include "cheb/bounds.hpp"
#include "cheb/cheb_exact.hpp"
#include "cheb/cheb_mc.hpp"
#include "cheb/chief.hpp"
#include "cheb/group_spec.hpp"
#include "cheb/verify.hpp"

namespace cheb {

inline constexpr const char* kReportSchemaVersion = "1.0";
inline constexpr int kReportDigits = 12;

std::string decimal12(const Rational& r);

nlohmann::json group_json(const ParsedGroup& g);
nlohmann::json cheb_json(const ChebValue& v);
nlohmann::json mc_json(const McReport& mc, const Rational& exact);
nlohmann::json crowns_json(const CrownData& crowns);
nlohmann::json bounds_json(const BoundReport& b);
nlohmann::json criteria_json(const std::vector<CriterionResult>& results);

/// Envelope shared by every command: schema_version, command, plus payload.
nlohmann::json make_report(const std::string& command);

}  // namespace cheb
