#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace defset {

// Result of one solver question, rendered either as text or as a JSON
// record. Indices in `witness` are 1-based; values are 0/1 for variables
// and color numbers for vertices.
struct Record {
  std::string question;
  std::optional<bool> answer;
  std::optional<std::size_t> min_size;
  std::vector<std::pair<int, int>> witness;
  std::optional<std::size_t> model_count_hint;
  // Extra scalar fields (budget, chromatic number, ...), sorted by key.
  std::map<std::string, std::string> fields;
};

std::string to_json(const Record& record);
std::string to_text(const Record& record);

// Outcome of a reduction sweep.
struct VerifyReport {
  std::string name;
  std::map<std::string, std::string> params;  // generator settings
  std::size_t instances = 0;
  std::size_t oracle_checked = 0;
  std::vector<std::string> outcomes;    // one canonical line per instance
  std::vector<std::string> mismatches;  // full counterexample dumps
  double wall_seconds = 0.0;

  bool ok() const { return mismatches.empty(); }
  // "VERIFY <name> instances=<n> mismatches=<m>"
  std::string summary_line() const;
  // Human-readable report, including wall time.
  std::string text() const;
  // JSON without timing, identical for identical inputs.
  std::string structured() const;
};

}  // namespace defset
