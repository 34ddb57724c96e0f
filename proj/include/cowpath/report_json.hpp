#pragma once

#include <json.hpp>

#include "cowpath/auditor.hpp"
#include "cowpath/coverage.hpp"
#include "cowpath/lemmas.hpp"

// JSON views of the report types. Field names are part of the tool's stable
// output contract; emitted objects are key-sorted and reproducible byte for
// byte for fixed seeds.
namespace cowpath {

void to_json(nlohmann::json& j, const Direction& q);
void to_json(nlohmann::json& j, const Hyperplane& h);
void to_json(nlohmann::json& j, const CoverageReport& r);
void to_json(nlohmann::json& j, const RatioReport& r);
void to_json(nlohmann::json& j, const LemmaVerdict& v);
void to_json(nlohmann::json& j, const Milestone& m);
void to_json(nlohmann::json& j, const AuditReport& r);
void to_json(nlohmann::json& j, const CorollaryVerdict& v);

const char* tool_version();

} // namespace cowpath
