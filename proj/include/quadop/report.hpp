#pragma once

// Reports for the command-line tool: a typed record with JSON and text forms.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadop/dong.hpp"
#include "quadop/locality.hpp"
#include "quadop/operad.hpp"

namespace quadop {

inline constexpr int kSchemaVersion = 1;

struct OperadSummary {
  std::string name;
  std::string recipe;
  std::vector<std::string> generators;
  /// Rows of the (12) matrix as rational strings.
  std::vector<std::vector<std::string>> swap;
  OperadDims dims;
  /// Canonical basis of R in the relation grammar.
  std::vector<std::string> relations;
  std::map<std::string, std::string> dictionary;

  bool operator==(const OperadSummary&) const = default;
};

struct WitnessText {
  std::string text;
  std::string pqt;

  bool operator==(const WitnessText&) const = default;
};

struct DongSection {
  std::string verdict;
  std::size_t kernel_dim = 0;
  bool method_agreement = true;
  std::vector<WitnessText> witnesses;

  bool operator==(const DongSection&) const = default;
};

struct ProductSection {
  std::string kind;
  std::vector<std::string> operands;
  std::map<std::string, std::string> dictionary;
  /// Named consistency checks run alongside the construction.
  std::map<std::string, bool> checks;

  bool operator==(const ProductSection&) const = default;
};

struct PairText {
  std::string inner;
  std::string outer;
  std::optional<int> order;

  bool operator==(const PairText&) const = default;
};

struct LocalitySection {
  int window = 0;
  int n_max = 0;
  int k = 0;
  int n = 0;
  int m = 0;
  std::vector<PairText> pairs;
  bool all_local = false;
  std::string note;

  bool operator==(const LocalitySection&) const = default;
};

struct Report {
  int schema_version = kSchemaVersion;
  OperadSummary operad;
  std::optional<DongSection> dong;
  std::optional<OperadSummary> dual;
  std::optional<ProductSection> product;
  std::optional<LocalitySection> locality;

  bool operator==(const Report&) const = default;
};

OperadSummary summarize(const QuadOperad& p);
DongSection dong_section(const DongReport& r);
LocalitySection locality_section(const LocalitySweep& sweep, const QuadOperad& p);

std::string emit_json(const Report& r);
std::string emit_text(const Report& r);
/// Inverse of emit_json; throws InputError on malformed input.
Report report_from_json(const std::string& text);

}  // namespace quadop
