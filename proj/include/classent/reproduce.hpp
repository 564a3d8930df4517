#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "classent/entangle.hpp"

namespace classent::cli {

using lab::Verdict;

/// One compared claim: an embedded expected value against the computed one.
struct ReproItem {
  std::string name;
  /// Where the expected value was transcribed from.
  std::string source;
  Verdict verdict = Verdict::kFail;
  std::string detail;
};

struct ReproductionReport {
  std::string case_name;
  std::vector<ReproItem> items;
  /// Human-readable blocks (truth tables, matrices, curves).
  std::vector<std::pair<std::string, std::string>> sections;
  nlohmann::json data;

  std::size_t count(Verdict v) const;
  /// Items that failed without being on the expected-fail ledger.
  std::size_t unexpected_failures() const { return count(Verdict::kFail); }
  const ReproItem& item(std::string_view name) const;
};

const std::vector<std::string>& case_names();
/// Throws std::invalid_argument for unknown names.
ReproductionReport reproduce_case(std::string_view name);

std::string render_text(const ReproductionReport& r);
nlohmann::json render_json(const ReproductionReport& r);

}  // namespace classent::cli
