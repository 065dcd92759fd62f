#include "defset/cnf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "defset/errors.hpp"
#include "sat_search.hpp"

namespace defset {

// ---------------------------------------------------------------------------
// PartialAssignment

PartialAssignment::PartialAssignment(std::map<int, bool> bindings)
    : bindings_(std::move(bindings)) {
  for (const auto& entry : bindings_) {
    if (entry.first < 1) throw ContractViolation("assignment variable must be >= 1");
  }
}

PartialAssignment PartialAssignment::from_literals(const std::vector<Literal>& literals) {
  PartialAssignment out;
  for (Literal lit : literals) {
    if (lit == 0) throw ContractViolation("literal 0 in assignment");
    const int var = var_of(lit);
    const bool value = lit > 0;
    if (auto old = out.get(var); old && *old != value) {
      throw ContractViolation("variable " + std::to_string(var) + " bound twice");
    }
    out.set(var, value);
  }
  return out;
}

void PartialAssignment::set(int var, bool value) {
  if (var < 1) throw ContractViolation("assignment variable must be >= 1");
  bindings_[var] = value;
}

std::optional<bool> PartialAssignment::get(int var) const {
  auto it = bindings_.find(var);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> PartialAssignment::support() const {
  std::vector<int> out;
  out.reserve(bindings_.size());
  for (const auto& entry : bindings_) out.push_back(entry.first);
  return out;
}

std::vector<Literal> PartialAssignment::literals() const {
  std::vector<Literal> out;
  out.reserve(bindings_.size());
  for (const auto& [var, value] : bindings_) out.push_back(value ? var : -var);
  return out;
}

PartialAssignment PartialAssignment::restricted_to(const std::vector<int>& vars) const {
  PartialAssignment out;
  for (int v : vars) {
    if (auto value = get(v)) out.set(v, *value);
  }
  return out;
}

bool PartialAssignment::is_restriction_of(const PartialAssignment& other) const {
  return std::all_of(bindings_.begin(), bindings_.end(), [&](const auto& entry) {
    return other.get(entry.first) == std::optional<bool>(entry.second);
  });
}

std::string_view to_string(Truth t) {
  switch (t) {
    case Truth::satisfied: return "satisfied";
    case Truth::falsified: return "falsified";
    case Truth::undetermined: return "undetermined";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// CnfFormula

CnfFormula::CnfFormula(int num_vars, std::vector<Clause> clauses,
                       std::map<int, std::string> var_names)
    : num_vars_(num_vars), clauses_(std::move(clauses)), var_names_(std::move(var_names)) {
  if (num_vars_ < 0) throw ContractViolation("negative variable count");
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (clauses_[i].empty()) {
      throw ContractViolation("clause " + std::to_string(i + 1) + " is empty");
    }
    for (Literal lit : clauses_[i]) {
      if (lit == 0 || var_of(lit) > num_vars_) {
        throw ContractViolation("clause " + std::to_string(i + 1) + ": literal " +
                                std::to_string(lit) + " out of range");
      }
    }
  }
}

std::size_t CnfFormula::width() const {
  std::size_t w = 0;
  for (const auto& clause : clauses_) {
    w = std::max(w, std::set<Literal>(clause.begin(), clause.end()).size());
  }
  return w;
}

std::optional<std::string> CnfFormula::name(int var) const {
  auto it = var_names_.find(var);
  if (it == var_names_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// DIMACS

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool parse_int(std::string_view token, long long& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

CnfFormula parse_cnf(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  long long num_vars = 0;
  long long declared = 0;
  std::vector<Clause> clauses;
  Clause current;
  std::size_t current_line = 0;

  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "c" || tokens[0].front() == 'c') continue;
    if (tokens[0] == "%") break;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "cnf" || !parse_int(tokens[2], num_vars) ||
          !parse_int(tokens[3], declared) || num_vars < 0 || declared < 0) {
        throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause before 'p cnf' header");
    for (auto token : tokens) {
      long long lit = 0;
      if (!parse_int(token, lit)) {
        throw ParseError(line_no, "bad literal '" + std::string(token) + "'");
      }
      if (lit == 0) {
        if (current.empty()) throw ParseError(line_no, "empty clause");
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const long long var = lit < 0 ? -lit : lit;
      if (var > num_vars) {
        throw ParseError(line_no, "literal " + std::to_string(lit) + " out of range (" +
                                      std::to_string(num_vars) + " variables)");
      }
      if (current.empty()) current_line = line_no;
      current.push_back(static_cast<Literal>(lit));
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'p cnf' header");
  if (!current.empty()) throw ParseError(current_line, "clause not terminated by 0");
  if (static_cast<long long>(clauses.size()) != declared) {
    throw ParseError(line_no, "header declares " + std::to_string(declared) +
                                  " clauses, found " + std::to_string(clauses.size()));
  }
  return CnfFormula(static_cast<int>(num_vars), std::move(clauses));
}

CnfFormula read_cnf_file(const std::string& path) { return parse_cnf(slurp(path)); }

std::string write_cnf(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.num_vars() << ' ' << formula.num_clauses() << '\n';
  for (const auto& clause : formula.clauses()) {
    for (Literal lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

PartialAssignment parse_assignment(std::string_view text) {
  std::vector<Literal> lits;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool terminated = false;
  while (pos <= text.size() && !terminated) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == 'c') continue;
    for (auto token : tokens) {
      long long lit = 0;
      if (!parse_int(token, lit)) {
        throw ParseError(line_no, "bad literal '" + std::string(token) + "'");
      }
      if (lit == 0) {
        terminated = true;
        break;
      }
      lits.push_back(static_cast<Literal>(lit));
    }
  }
  if (!terminated) throw ParseError(line_no, "assignment not terminated by 0");
  try {
    return PartialAssignment::from_literals(lits);
  } catch (const ContractViolation& e) {
    throw ParseError(line_no, e.what());
  }
}

PartialAssignment read_assignment_file(const std::string& path) {
  return parse_assignment(slurp(path));
}

std::string write_assignment(const PartialAssignment& assignment) {
  std::ostringstream out;
  for (Literal lit : assignment.literals()) out << lit << ' ';
  out << "0\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Evaluation

Truth evaluate(const CnfFormula& formula, const PartialAssignment& assignment) {
  bool open = false;
  for (const auto& clause : formula.clauses()) {
    bool has_true = false;
    bool has_unbound = false;
    for (Literal lit : clause) {
      auto value = assignment.get(var_of(lit));
      if (!value) {
        has_unbound = true;
      } else if (*value == (lit > 0)) {
        has_true = true;
        break;
      }
    }
    if (has_true) continue;
    if (!has_unbound) return Truth::falsified;
    open = true;
  }
  return open ? Truth::undetermined : Truth::satisfied;
}

bool is_proper_partial(const CnfFormula& formula, const PartialAssignment& t) {
  return std::all_of(formula.clauses().begin(), formula.clauses().end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](Literal lit) {
      return t.get(var_of(lit)) == std::optional<bool>(lit > 0);
    });
  });
}

bool is_proper_total(const CnfFormula& formula, const PartialAssignment& t) {
  for (int v = 1; v <= formula.num_vars(); ++v) {
    if (!t.contains(v)) return false;
  }
  if (!t.empty() && t.support().back() > formula.num_vars()) return false;
  return evaluate(formula, t) == Truth::satisfied;
}

std::vector<PartialAssignment> enumerate_proper(const CnfFormula& formula,
                                                const PartialAssignment& fixed,
                                                std::size_t limit) {
  std::vector<PartialAssignment> out;
  detail::SatSearch search(formula);
  search.enumerate(detail::to_values(formula, fixed), limit, [&](const detail::Values& v) {
    out.push_back(detail::from_values(v));
    return true;
  });
  return out;
}

std::size_t count_extensions(const CnfFormula& formula, const PartialAssignment& fixed,
                             std::size_t limit) {
  return detail::SatSearch(formula).count(detail::to_values(formula, fixed), limit);
}

CnfFormula dedup_literals(const CnfFormula& formula) {
  std::vector<Clause> clauses;
  clauses.reserve(formula.num_clauses());
  for (const auto& clause : formula.clauses()) {
    Clause out;
    for (Literal lit : clause) {
      if (std::find(out.begin(), out.end(), lit) == out.end()) out.push_back(lit);
    }
    clauses.push_back(std::move(out));
  }
  return CnfFormula(formula.num_vars(), std::move(clauses), formula.var_names());
}

CnfFormula normalize_width(const CnfFormula& formula, std::size_t k) {
  CnfFormula distinct = dedup_literals(formula);
  std::vector<Clause> clauses = distinct.clauses();
  for (auto& clause : clauses) {
    if (clause.size() > k) {
      throw ContractViolation("clause with " + std::to_string(clause.size()) +
                              " distinct literals exceeds width " + std::to_string(k));
    }
    while (clause.size() < k) clause.push_back(clause.back());
  }
  return CnfFormula(formula.num_vars(), std::move(clauses), formula.var_names());
}

}  // namespace defset
