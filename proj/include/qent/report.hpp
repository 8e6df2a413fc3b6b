#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "qent/locc.hpp"
#include "qent/measures.hpp"
#include "qent/nonlocality.hpp"
#include "qent/separability.hpp"

namespace qent {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "qent";
inline constexpr const char* kToolVersion = "1.0.0";

// FNV-1a 64-bit digest of the raw input bytes, hex-encoded.
std::uint64_t fnv1a64(const std::string& data);
std::string digest_hex(const std::string& data);

// Reports print every number at 12 significant digits; rounding through the
// printed representation keeps re-parsed documents byte-identical.
double round12(double x);
ordered_json json_number(double x);

// Common document skeleton: tool/version/command/input digest first.
ordered_json report_header(const std::string& command, const std::string& input_bytes);

ordered_json to_json(const CriterionReport& r);
ordered_json to_json(const BatteryResult& r);
ordered_json to_json(const MeasureValue& v);
ordered_json to_json(const ChshAnalysis& a);
ordered_json to_json(const WwzbResult& r);
ordered_json to_json(const TonerResult& r);
ordered_json to_json(const DistillationTrace& t);
ordered_json to_json(const TeleportationReport& r);
ordered_json to_json(const DenseCodingReport& r);
ordered_json to_json(const SwappingReport& r);

// Two-space indent, trailing newline.
std::string render_report(const ordered_json& doc);

}  // namespace qent
