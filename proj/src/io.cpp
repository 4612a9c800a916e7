#include "npq/io.hpp"

#include <sstream>
#include <stdexcept>

namespace npq {
namespace {

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

nlohmann::json partition_to_json(const Partition& p) {
  return nlohmann::json(p.parts());
}

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
  std::vector<int> parts;
  for (const auto& e : j) parts.push_back(e.get<int>());
  return Partition(parts);
}

std::string partition_to_field(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p.part(i));
  }
  return out;
}

nlohmann::json table_to_json(int m, const CountTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  const auto parts = enumerate_partitions(m);
  for (const auto& p : parts) {
    for (const auto& q : parts) {
      const auto it = table.find({p, q});
      if (it == table.end()) throw std::out_of_range("table is missing an entry");
      rows.push_back({{"p", partition_to_json(p)},
                      {"q", partition_to_json(q)},
                      {"n", it->second.get_str()}});
    }
  }
  return rows;
}

std::string table_to_csv(int m, const CountTable& table) {
  std::string out = "p,q,count\r\n";
  const auto parts = enumerate_partitions(m);
  for (const auto& p : parts) {
    for (const auto& q : parts) {
      const auto it = table.find({p, q});
      if (it == table.end()) throw std::out_of_range("table is missing an entry");
      out += csv_quote(partition_to_field(p));
      out += ',';
      out += csv_quote(partition_to_field(q));
      out += ',';
      out += csv_quote(it->second.get_str());
      out += "\r\n";
    }
  }
  return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto end_field = [&] {
    row.push_back(field);
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(row);
    row.clear();
  };
  while (i < n) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < n && text[i + 1] == '"') {
          field += '"';
          i += 2;
        } else {
          quoted = false;
          ++i;
        }
      } else {
        field += c;
        ++i;
      }
    } else if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
      ++i;
    } else if (c == ',') {
      end_field();
      ++i;
    } else if (c == '\r' && i + 1 < n && text[i + 1] == '\n') {
      end_row();
      i += 2;
    } else if (c == '\n') {
      end_row();
      ++i;
    } else {
      field += c;
      field_started = true;
      ++i;
    }
  }
  if (field_started || !row.empty()) end_row();
  return rows;
}

nlohmann::json report_to_json(const IdentityReport& report) {
  return {{"identity", report.identity_id},
          {"m", report.m},
          {"witness", report.witness},
          {"lhs", report.lhs},
          {"rhs", report.rhs},
          {"pass", report.pass}};
}

nlohmann::json rm_result_to_json(const RmResult& result) {
  nlohmann::json mu = nlohmann::json::array();
  for (const auto& v : result.mu) mu.push_back(to_string(v));
  nlohmann::json j{{"m", result.m},
                   {"mu", mu},
                   {"direct", to_string(result.direct_value)},
                   {"moment", to_string(result.moment_value)},
                   {"abs", to_string(result.abs_value)},
                   {"triangle_bound", to_string(result.triangle_bound)}};
  if (result.mc_estimate) {
    j["mc_estimate"] = *result.mc_estimate;
    j["mc_stderr"] = *result.mc_stderr;
    j["mc_seed"] = *result.seed;
    j["mc_samples"] = *result.samples;
  }
  return j;
}

nlohmann::json make_envelope(const std::string& command, nlohmann::json parameters,
                             nlohmann::json results) {
  return {{"command", command},
          {"parameters", std::move(parameters)},
          {"results", std::move(results)},
          {"version", kVersion}};
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace npq
