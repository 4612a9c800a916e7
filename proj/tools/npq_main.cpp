// npq: exact counts of binary matrices with prescribed margins, plus the
// polynomial identities those counts satisfy.
//
// Subcommands: count, table, verify, stirling, rm. Machine output (JSON)
// goes to stdout; notices and errors go to stderr. Exit codes: 0 success,
// 1 verification failure or internal inconsistency, 2 usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "npq/identities.hpp"
#include "npq/io.hpp"
#include "npq/matrix_count.hpp"
#include "npq/partition.hpp"
#include "npq/poly.hpp"
#include "npq/rm.hpp"
#include "npq/symmetric.hpp"

namespace {

using namespace npq;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      tokens.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current += c;
    }
  }
  tokens.push_back(current);
  if (tokens.size() == 1 && tokens[0].empty()) tokens.clear();
  return tokens;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> values;
  for (const auto& token : split_commas(text)) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(flag + ": '" + token + "' is not an integer");
    }
    if (used != token.size())
      throw std::invalid_argument(flag + ": '" + token + "' is not an integer");
    if (value <= 0)
      throw std::invalid_argument(flag + ": entries must be positive, got " + token);
    values.push_back(value);
  }
  return values;
}

MuVector parse_mu_list(const std::string& text) {
  MuVector mu;
  for (const auto& token : split_commas(text)) mu.push_back(parse_rational(token));
  if (mu.empty()) throw std::invalid_argument("--mu: at least one entry required");
  return mu;
}

int run_count(const std::string& rows_text, const std::string& cols_text) {
  const std::vector<int> rows = parse_int_list(rows_text, "--rows");
  const std::vector<int> cols = parse_int_list(cols_text, "--cols");
  if (rows.empty() != cols.empty())
    throw std::invalid_argument("--rows and --cols must both be empty or both be nonempty");
  const Partition p = Partition::from_unsorted(rows);
  const Partition q = Partition::from_unsorted(cols);
  if (p.weight() != q.weight())
    throw std::invalid_argument("row sum " + std::to_string(p.weight()) +
                                " does not match column sum " + std::to_string(q.weight()));
  if (p.parts() != rows)
    std::cerr << "note: --rows reordered to " << format_partition(p) << "\n";
  if (q.parts() != cols)
    std::cerr << "note: --cols reordered to " << format_partition(q) << "\n";
  std::cout << count(p, q).get_str() << "\n";
  return 0;
}

int run_table(int m, const std::string& format) {
  const CountTable table = full_table(m);
  if (format == "csv") {
    std::cout << table_to_csv(m, table);
    return 0;
  }
  nlohmann::json parameters{{"m", m}, {"format", format}};
  std::cout << dump_json(make_envelope("table", parameters, table_to_json(m, table)));
  return 0;
}

/// Deterministic evaluation points for the symmetric-function expansion
/// check: 30 short rational vectors with entries in [-9,9]/[1,9].
std::vector<MuVector> e2m_sample_points() {
  std::mt19937_64 gen(2026);
  std::vector<MuVector> points;
  for (int i = 0; i < 30; ++i) {
    const int k = 1 + static_cast<int>(gen() % 6);
    MuVector mu;
    for (int j = 0; j < k; ++j) {
      const long num = static_cast<long>(gen() % 19) - 9;
      const long den = 1 + static_cast<long>(gen() % 9);
      mu.push_back(make_rational(BigInt(num), BigInt(den)));
    }
    points.push_back(std::move(mu));
  }
  return points;
}

std::vector<IdentityReport> run_identity(const std::string& identity, int m,
                                         const CountTable& table) {
  std::vector<IdentityReport> reports;
  auto take = [&reports](std::vector<IdentityReport> batch) {
    for (auto& r : batch) reports.push_back(std::move(r));
  };
  if (identity == "prop1a" || identity == "all") take(verify_prop1_first(m, table));
  if (identity == "prop1b" || identity == "all") reports.push_back(verify_prop1_second(m, table));
  if (identity == "cor1" || identity == "all") take(verify_cor1(m, table));
  if (identity == "cor2" || identity == "all") take(verify_cor2(m, table));
  if (identity == "stirling" || identity == "all")
    reports.push_back(verify_stirling_bridge(m, table));
  if (identity == "e2m" || identity == "all") {
    for (const MuVector& mu : e2m_sample_points()) take(verify_e_to_m_expansion(m, mu, table));
  }
  return reports;
}

int run_verify(const std::string& identity, int m_max, const std::string& format) {
  std::vector<IdentityReport> reports;
  for (int m = 1; m <= m_max; ++m) {
    const CountTable table = full_table(m);
    for (auto& r : run_identity(identity, m, table)) reports.push_back(std::move(r));
  }
  int failed = 0;
  for (const auto& r : reports)
    if (!r.pass) ++failed;

  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : reports) rows.push_back(report_to_json(r));
    nlohmann::json parameters{{"identity", identity}, {"m_max", m_max}};
    nlohmann::json results{{"reports", std::move(rows)},
                           {"checked", reports.size()},
                           {"failed", failed}};
    std::cout << dump_json(make_envelope("verify", parameters, results));
  } else {
    for (const auto& r : reports) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.identity_id << " m=" << r.m << " "
                << r.witness;
      if (!r.pass) std::cout << "  lhs=" << r.lhs << "  rhs=" << r.rhs;
      std::cout << "\n";
    }
    std::cout << "checked " << reports.size() << " identities, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : 1;
}

int run_stirling(int kind, int m) {
  std::string row;
  if (kind == 1) {
    const std::vector<BigRational> coeffs = stirling_first(m);
    for (int i = 1; i <= m; ++i) {
      if (i > 1) row += ", ";
      row += to_string(coeffs[i]);
    }
  } else {
    const std::vector<BigInt> values = stirling_second(m);
    for (int l = 1; l <= m; ++l) {
      if (l > 1) row += ", ";
      row += values[l - 1].get_str();
    }
  }
  std::cout << row << "\n";
  return 0;
}

int run_rm(int m, const std::string& mu_text, std::optional<std::uint64_t> mc_samples,
           std::uint64_t seed) {
  const MuVector mu = parse_mu_list(mu_text);
  std::optional<McOptions> mc;
  if (mc_samples) mc = McOptions{*mc_samples, seed};
  const RmResult result = rm_report(m, mu, mc);

  nlohmann::json mu_echo = nlohmann::json::array();
  for (const auto& v : mu) mu_echo.push_back(to_string(v));
  nlohmann::json parameters{{"m", m}, {"mu", std::move(mu_echo)}};
  if (mc_samples) {
    parameters["mc_samples"] = *mc_samples;
    parameters["seed"] = seed;
  }
  std::cout << dump_json(make_envelope("rm", parameters, rm_result_to_json(result)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact binary-matrix margin counts and the identities they satisfy"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto* count_cmd = app.add_subcommand("count", "count binary matrices with given margins");
  auto rows_text = std::make_shared<std::string>();
  auto cols_text = std::make_shared<std::string>();
  count_cmd->add_option("--rows", *rows_text, "comma-separated row sums")->required();
  count_cmd->add_option("--cols", *cols_text, "comma-separated column sums")->required();
  count_cmd->callback([&exit_code, rows_text, cols_text] {
    exit_code = run_count(*rows_text, *cols_text);
  });

  auto* table_cmd = app.add_subcommand("table", "emit all counts for one weight");
  auto table_m = std::make_shared<int>(0);
  auto table_format = std::make_shared<std::string>("json");
  table_cmd->add_option("-m,--weight", *table_m, "weight of both margins")
      ->required()
      ->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--format", *table_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  table_cmd->callback(
      [&exit_code, table_m, table_format] { exit_code = run_table(*table_m, *table_format); });

  auto* verify_cmd = app.add_subcommand("verify", "check the margin-count identities exactly");
  auto identity = std::make_shared<std::string>();
  auto m_max = std::make_shared<int>(0);
  auto verify_format = std::make_shared<std::string>("text");
  verify_cmd->add_option("--identity", *identity, "which identity to check")
      ->required()
      ->check(CLI::IsMember({"prop1a", "prop1b", "cor1", "cor2", "stirling", "e2m", "all"}));
  verify_cmd->add_option("--m-max", *m_max, "check all weights up to this")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", *verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->callback([&exit_code, identity, m_max, verify_format] {
    exit_code = run_verify(*identity, *m_max, *verify_format);
  });

  auto* stirling_cmd = app.add_subcommand("stirling", "print a row of Stirling numbers");
  auto kind = std::make_shared<int>(0);
  auto stirling_m = std::make_shared<int>(0);
  stirling_cmd->add_option("--kind", *kind, "1 (signed, first) or 2 (second)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  stirling_cmd->add_option("-m,--weight", *stirling_m, "row weight")
      ->required()
      ->check(CLI::PositiveNumber);
  stirling_cmd->callback(
      [&exit_code, kind, stirling_m] { exit_code = run_stirling(*kind, *stirling_m); });

  auto* rm_cmd = app.add_subcommand("rm", "evaluate the alternating moment statistic");
  auto rm_m = std::make_shared<int>(0);
  auto mu_text = std::make_shared<std::string>();
  auto mc_samples = std::make_shared<std::uint64_t>(0);
  auto seed = std::make_shared<std::uint64_t>(0);
  rm_cmd->add_option("-m,--weight", *rm_m, "moment order")
      ->required()
      ->check(CLI::NonNegativeNumber);
  rm_cmd->add_option("--mu", *mu_text, "comma-separated rational coefficients (a or a/b)")
      ->required();
  auto* samples_opt = rm_cmd->add_option("--mc-samples", *mc_samples,
                                         "Monte Carlo sample count (at least 2)")
                          ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 62));
  rm_cmd->add_option("--seed", *seed, "Monte Carlo RNG seed")->needs(samples_opt);
  rm_cmd->callback([&exit_code, rm_m, mu_text, mc_samples, seed, samples_opt] {
    std::optional<std::uint64_t> samples;
    if (samples_opt->count() > 0) samples = *mc_samples;
    exit_code = run_rm(*rm_m, *mu_text, samples, *seed);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
