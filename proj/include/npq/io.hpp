#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "npq/identities.hpp"
#include "npq/matrix_count.hpp"
#include "npq/partition.hpp"
#include "npq/rm.hpp"

namespace npq {

inline constexpr const char* kVersion = "0.1.0";

// All machine output follows one envelope: {command, parameters, results,
// version}. Exact numbers (big integers, rationals) are always strings;
// only the Monte Carlo fields are JSON floats. nlohmann::json orders keys
// alphabetically, so identical data dumps to identical bytes.

nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

/// CSV field form: parts space-separated, "" for the empty partition.
std::string partition_to_field(const Partition& p);

/// Table rows for every ordered pair p,q |- m in enumeration
/// (reverse-lexicographic) order: [{p, q, n}, ...] with n a decimal string.
nlohmann::json table_to_json(int m, const CountTable& table);

/// RFC-4180-style CSV with header "p,q,count"; the three data fields are
/// always quoted. Same row order as the JSON form.
std::string table_to_csv(int m, const CountTable& table);

/// Inverse of table_to_csv (used by the round-trip tests).
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

nlohmann::json report_to_json(const IdentityReport& report);

nlohmann::json rm_result_to_json(const RmResult& result);

nlohmann::json make_envelope(const std::string& command, nlohmann::json parameters,
                             nlohmann::json results);

/// Canonical dump used for every JSON emission: 2-space indent, sorted
/// keys (nlohmann default), trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace npq
