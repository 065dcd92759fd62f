#include "defset/sat_reductions.hpp"

#include <algorithm>
#include <sstream>

#include "defset/errors.hpp"

namespace defset {

namespace {

void check_provenance_total(const ReductionArtifact& a) {
  if (static_cast<int>(a.provenance.size()) != a.output.num_vars() ||
      (!a.provenance.empty() &&
       (a.provenance.begin()->first != 1 || a.provenance.rbegin()->first != a.output.num_vars()))) {
    throw ContractViolation("provenance does not cover every output variable");
  }
}

}  // namespace

QuantifiedSplit split_of(const ReductionArtifact& artifact) {
  QuantifiedSplit split{artifact.output, {}, {}, artifact.anchor_out};
  for (const auto& [var, tag] : artifact.provenance) {
    if (tag == "original-x") {
      split.x_vars.push_back(var);
    } else {
      split.y_vars.push_back(var);
    }
  }
  return split;
}

ReductionArtifact construct_mu(const QuantifiedSplit& split) {
  split.validate();
  const CnfFormula& phi = split.formula;
  if (phi.width() > 3) {
    throw ContractViolation("construct_mu needs a formula of width <= 3, got " +
                            std::to_string(phi.width()));
  }
  const int z = phi.num_vars() + 1;
  std::vector<Clause> clauses;
  clauses.reserve(phi.num_clauses() + split.y_vars.size());
  for (const auto& c : phi.clauses()) {
    Clause out = c;
    out.push_back(z);
    clauses.push_back(std::move(out));
  }
  for (int y : split.y_vars) clauses.push_back({-z, y});

  ReductionArtifact out{CnfFormula(z, std::move(clauses)), {}, PartialAssignment{}, std::nullopt};
  for (int x : split.x_vars) out.provenance[x] = "original-x";
  for (int y : split.y_vars) {
    out.provenance[y] = "original-y";
    out.anchor_out->set(y, true);
  }
  out.provenance[z] = "z";
  out.anchor_out->set(z, true);

  check_provenance_total(out);
  if (!is_proper_partial(out.output, *out.anchor_out)) {
    throw ContractViolation("construct_mu: anchor is not proper (construction bug)");
  }
  return out;
}

std::vector<Clause> cprime_clauses(Literal a1, Literal a2, Literal a3, Literal z, int v) {
  return {
      {a1, a2, v},
      {a3, z, -v},
      {-a1, -z, v},
      {-a2, -z, v},
      {-a1, -a3, v},
      {-a2, -a3, v},
  };
}

ReductionArtifact split_to_3cnf(const ReductionArtifact& mu) {
  int z = 0;
  for (const auto& [var, tag] : mu.provenance) {
    if (tag == "z") {
      if (z != 0) throw ContractViolation("split_to_3cnf: more than one z variable");
      z = var;
    }
  }
  if (z == 0) throw ContractViolation("split_to_3cnf: input has no z variable");
  if (!mu.anchor_out) throw ContractViolation("split_to_3cnf: input has no anchor");

  const CnfFormula& in = mu.output;
  int next = in.num_vars();
  std::vector<Clause> clauses;
  ReductionArtifact out{CnfFormula{}, mu.provenance, mu.anchor_out, mu.budget_out};
  std::size_t gadget = 0;

  for (std::size_t i = 0; i < in.num_clauses(); ++i) {
    const Clause& c = in.clause(i);
    const bool has_pos_z = std::count(c.begin(), c.end(), z) > 0;
    const bool has_neg_z = std::count(c.begin(), c.end(), -z) > 0;
    if (has_neg_z) {
      if (has_pos_z || c.size() != 2) {
        throw ContractViolation("split_to_3cnf: clause " + std::to_string(i + 1) +
                                " is not of the form (~z v y)");
      }
      clauses.push_back(c);
      continue;
    }
    if (!has_pos_z) {
      throw ContractViolation("split_to_3cnf: clause " + std::to_string(i + 1) +
                              " does not mention z");
    }
    Clause rest;
    bool dropped = false;
    for (Literal lit : c) {
      if (lit == z && !dropped) {
        dropped = true;
        continue;
      }
      rest.push_back(lit);
    }
    if (rest.empty() || rest.size() > 3 ||
        std::any_of(rest.begin(), rest.end(), [&](Literal l) { return var_of(l) == z; })) {
      throw ContractViolation("split_to_3cnf: clause " + std::to_string(i + 1) +
                              " is not of the form (a1 v a2 v a3 v z)");
    }
    while (rest.size() < 3) rest.push_back(rest.back());
    const int v = ++next;
    ++gadget;
    for (auto& g : cprime_clauses(rest[0], rest[1], rest[2], z, v)) clauses.push_back(std::move(g));
    out.provenance[v] = "gadget-v:" + std::to_string(gadget);
    out.anchor_out->set(v, true);
  }

  out.output = CnfFormula(next, std::move(clauses));
  check_provenance_total(out);
  if (!is_proper_partial(out.output, *out.anchor_out)) {
    throw ContractViolation("split_to_3cnf: anchor is not proper (construction bug)");
  }
  return out;
}

Q2Reduction reduce_unique_to_q2(const QuantifiedSplit& split) {
  if (!split.anchor_t) throw ContractViolation("reduce_unique_to_q2 needs anchor_t");
  split.validate();
  const CnfFormula& mu = split.formula;
  const std::size_t m = split.y_vars.size();
  if (m == 0) {
    throw ContractViolation("reduce_unique_to_q2: empty y block, uniqueness anchor is vacuous");
  }
  const int n_in = mu.num_vars();
  const int num_w = m == 1 ? 1 : static_cast<int>(m) - 1;
  const int k = static_cast<int>(split.x_vars.size());

  // x_i keeps its index as v_i; w's then v' copies are appended.
  std::map<int, int> vprime_of;
  std::vector<XPair> pairs;
  for (int i = 0; i < k; ++i) {
    const int x = split.x_vars[i];
    const int vp = n_in + num_w + i + 1;
    vprime_of[x] = vp;
    pairs.push_back({x, x, vp});
  }
  auto w = [&](int pos) { return n_in + pos; };

  std::vector<Clause> clauses;
  for (const auto& c : mu.clauses()) {
    Clause out;
    for (Literal lit : c) {
      auto it = vprime_of.find(var_of(lit));
      if (it == vprime_of.end()) {
        out.push_back(lit);
      } else {
        out.push_back(lit > 0 ? var_of(lit) : it->second);
      }
    }
    clauses.push_back(std::move(out));
  }

  std::vector<Literal> a(m);
  for (std::size_t j = 0; j < m; ++j) {
    const int y = split.y_vars[j];
    a[j] = *split.anchor_t->get(y) ? -y : y;
  }
  if (m == 1) {
    clauses.push_back({a[0], a[0], w(1)});
  } else {
    clauses.push_back({a[0], a[1], w(1)});
    for (std::size_t j = 2; j < m; ++j) {
      clauses.push_back({-w(static_cast<int>(j) - 1), a[j], w(static_cast<int>(j))});
    }
  }
  const int last_w = w(num_w);
  for (const auto& p : pairs) {
    clauses.push_back({-last_w, p.v_var, -p.vprime_var});
    clauses.push_back({-last_w, -p.v_var, p.vprime_var});
  }

  const int total = n_in + num_w + k;
  ReductionArtifact art{CnfFormula(total, std::move(clauses)), {}, PartialAssignment{},
                        static_cast<std::size_t>(k)};
  for (std::size_t j = 0; j < m; ++j) {
    const int y = split.y_vars[j];
    art.provenance[y] = a[j] > 0 ? "original-y:a=+" : "original-y:a=-";
    art.anchor_out->set(y, *split.anchor_t->get(y));
  }
  for (int pos = 1; pos <= num_w; ++pos) {
    art.provenance[w(pos)] = "chain-w:" + std::to_string(pos);
    art.anchor_out->set(w(pos), true);
  }
  for (int i = 0; i < k; ++i) {
    art.provenance[pairs[i].v_var] = "pair-v:" + std::to_string(i + 1);
    art.provenance[pairs[i].vprime_var] = "pair-v':" + std::to_string(i + 1);
    art.anchor_out->set(pairs[i].v_var, false);
    art.anchor_out->set(pairs[i].vprime_var, false);
  }
  check_provenance_total(art);
  if (!is_proper_total(art.output, *art.anchor_out)) {
    throw ContractViolation("reduce_unique_to_q2: t' does not satisfy the output (construction bug)");
  }
  DefsetSatInstance instance(art.output, *art.anchor_out, static_cast<std::size_t>(k));
  return Q2Reduction{std::move(art), std::move(instance), std::move(pairs)};
}

ReductionArtifact reduce_q2_to_q3(const DefsetSatInstance& instance, std::size_t k) {
  const CnfFormula& phi = instance.formula();
  const int n = phi.num_vars();
  const int per = static_cast<int>(k) + 1;
  std::vector<Clause> clauses = phi.clauses();
  ReductionArtifact out{CnfFormula{}, {}, instance.anchor(), k};
  for (int i = 1; i <= n; ++i) {
    out.provenance[i] = "original";
    const bool value = *instance.anchor().get(i);
    for (int j = 1; j <= per; ++j) {
      const int y = n + (i - 1) * per + j;
      clauses.push_back({value ? -i : i, y});
      out.provenance[y] = "pad-y:" + std::to_string(i) + "," + std::to_string(j);
      out.anchor_out->set(y, true);
    }
  }
  out.output = CnfFormula(n + n * per, std::move(clauses));
  check_provenance_total(out);
  if (!is_proper_total(out.output, *out.anchor_out)) {
    throw ContractViolation("reduce_q2_to_q3: padded anchor is not satisfying (construction bug)");
  }
  return out;
}

std::string write_provenance(const std::map<int, std::string>& provenance,
                             std::string_view keyword) {
  std::ostringstream out;
  for (const auto& [idx, tag] : provenance) out << keyword << ' ' << idx << " role " << tag << '\n';
  return out.str();
}

std::map<int, std::string> parse_provenance(std::string_view text, std::string_view keyword) {
  std::map<int, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string kw, role, tag;
    int idx = 0;
    if (!(fields >> kw)) continue;
    if (kw != keyword || !(fields >> idx >> role >> tag) || role != "role" || idx < 1) {
      throw ParseError(line_no, "expected '" + std::string(keyword) + " <idx> role <tag>'");
    }
    if (!out.emplace(idx, tag).second) {
      throw ParseError(line_no, "duplicate entry for " + std::to_string(idx));
    }
  }
  return out;
}

}  // namespace defset
