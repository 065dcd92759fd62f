#include "defset/report.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace defset {

namespace {

template <class T>
nlohmann::ordered_json or_null(const std::optional<T>& value) {
  return value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string to_json(const Record& record) {
  nlohmann::ordered_json j;
  j["question"] = record.question;
  j["answer"] = or_null(record.answer);
  j["min_size"] = or_null(record.min_size);
  auto witness = nlohmann::ordered_json::array();
  for (const auto& [idx, value] : record.witness) witness.push_back({idx, value});
  j["witness"] = std::move(witness);
  j["model_count_hint"] = or_null(record.model_count_hint);
  for (const auto& [key, value] : record.fields) j[key] = value;
  return j.dump() + "\n";
}

std::string to_text(const Record& record) {
  std::ostringstream out;
  out << "question: " << record.question << '\n';
  if (record.answer) out << "answer: " << (*record.answer ? "yes" : "no") << '\n';
  if (record.min_size) out << "min_size=" << *record.min_size << '\n';
  if (!record.witness.empty() || record.min_size) {
    out << "witness:";
    for (const auto& [idx, value] : record.witness) out << ' ' << idx << '=' << value;
    out << '\n';
  }
  if (record.model_count_hint) out << "model_count_hint=" << *record.model_count_hint << '\n';
  for (const auto& [key, value] : record.fields) out << key << '=' << value << '\n';
  return out.str();
}

std::string VerifyReport::summary_line() const {
  return "VERIFY " + name + " instances=" + std::to_string(instances) +
         " mismatches=" + std::to_string(mismatches.size());
}

std::string VerifyReport::text() const {
  std::ostringstream out;
  out << "reduction: " << name << '\n';
  for (const auto& [key, value] : params) out << "  " << key << " = " << value << '\n';
  out << "instances checked: " << instances << '\n';
  out << "oracle cross-checks: " << oracle_checked << '\n';
  for (const auto& m : mismatches) out << "MISMATCH\n" << m << '\n';
  out << "wall time: " << std::fixed << std::setprecision(3) << wall_seconds << " s\n";
  out << summary_line() << '\n';
  return out.str();
}

std::string VerifyReport::structured() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["params"] = params;
  j["instances"] = instances;
  j["oracle_checked"] = oracle_checked;
  j["mismatches"] = mismatches;
  j["outcomes"] = outcomes;
  return j.dump() + "\n";
}

}  // namespace defset
