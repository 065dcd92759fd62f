#include "defset/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "defset/color_defset.hpp"
#include "defset/color_reductions.hpp"
#include "defset/errors.hpp"
#include "defset/oracle.hpp"
#include "defset/sat_defset.hpp"
#include "defset/sat_reductions.hpp"
#include "parallel.hpp"

namespace defset {

namespace {

struct Outcome {
  std::string line;
  std::string mismatch;  // empty when the instance agrees
  std::size_t oracle_checks = 0;
};

using Task = std::function<Outcome()>;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string describe(const QuantifiedSplit& split) {
  std::ostringstream out;
  out << write_cnf(split.formula) << "x:";
  for (int x : split.x_vars) out << ' ' << x;
  out << "\ny:";
  for (int y : split.y_vars) out << ' ' << y;
  out << '\n';
  if (split.anchor_t) out << "t: " << write_assignment(*split.anchor_t);
  return out.str();
}

std::string describe(const CnfFormula& f, const PartialAssignment& t) {
  return write_cnf(f) + "anchor: " + write_assignment(t);
}

std::string describe(const Graph& g, const Coloring& c) {
  return write_dimacs_graph(g) + write_coloring(c);
}

int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng) { return pick(rng, 0, 1) == 1; }

std::vector<PartialAssignment> all_models(const CnfFormula& f) {
  return enumerate_proper(f, {}, static_cast<std::size_t>(-1));
}

QuantifiedSplit split_by_mask(const CnfFormula& f, unsigned x_mask) {
  QuantifiedSplit split{f, {}, {}, std::nullopt};
  for (int v = 1; v <= f.num_vars(); ++v) {
    ((x_mask >> (v - 1)) & 1u ? split.x_vars : split.y_vars).push_back(v);
  }
  return split;
}

// -- individual equivalences -------------------------------------------------

Outcome check_mu(std::size_t id, const QuantifiedSplit& split, const SearchOptions& caps) {
  const bool lhs = exists_forall_check(split, caps);
  const QuantifiedSplit target = split_of(construct_mu(split));
  const bool rhs = exists_uniqueexists_check(target, caps);
  const bool lhs_o = oracle::exists_forall(split);
  const bool rhs_o = oracle::exists_unique(target);
  Outcome o{"#" + std::to_string(id) + " forall=" + yes_no(lhs) + " unique=" + yes_no(rhs), {}, 2};
  if (lhs != rhs || lhs != lhs_o || rhs != rhs_o) {
    o.mismatch = "instance #" + std::to_string(id) + ": exists-forall=" + yes_no(lhs) +
                 " (oracle " + yes_no(lhs_o) + "), exists-unique on mu=" + yes_no(rhs) +
                 " (oracle " + yes_no(rhs_o) + ")\n" + describe(split);
  }
  return o;
}

Outcome check_split3(std::size_t id, const QuantifiedSplit& split, const SearchOptions& caps) {
  const ReductionArtifact mu = construct_mu(split);
  const QuantifiedSplit before = split_of(mu);
  const QuantifiedSplit after = split_of(split_to_3cnf(mu));
  const bool lhs = exists_uniqueexists_check(before, caps);
  const bool rhs = exists_uniqueexists_check(after, caps);
  std::size_t checks = 0;
  bool oracle_ok = true;
  if (after.formula.num_vars() <= oracle::kMaxVars) {
    oracle_ok = oracle::exists_unique(before) == lhs && oracle::exists_unique(after) == rhs;
    checks = 2;
  }
  Outcome o{"#" + std::to_string(id) + " mu=" + yes_no(lhs) + " 3cnf=" + yes_no(rhs), {}, checks};
  if (lhs != rhs || !oracle_ok) {
    o.mismatch = "instance #" + std::to_string(id) + ": exists-unique mu=" + yes_no(lhs) +
                 ", after split=" + yes_no(rhs) + (oracle_ok ? "" : " (oracle disagrees)") + "\n" +
                 describe(split);
  }
  return o;
}

Outcome check_q2(std::size_t id, const QuantifiedSplit& source, const SearchOptions& caps) {
  const Q2Reduction red = reduce_unique_to_q2(source);
  const std::size_t k = source.x_vars.size();
  const bool lhs = has_defining_set(red.instance, k, caps);
  const bool rhs = exists_uniqueexists_check(source, caps);
  std::size_t checks = 1;
  bool oracle_ok = oracle::exists_unique(source) == rhs;
  if (red.instance.formula().num_vars() <= oracle::kMaxVars) {
    oracle_ok = oracle_ok && ((oracle::min_defset_sat(red.instance) <= k) == lhs);
    ++checks;
  }
  Outcome o{"#" + std::to_string(id) + " k=" + std::to_string(k) + " defset<=k=" + yes_no(lhs) +
                " unique=" + yes_no(rhs),
            {}, checks};
  if (lhs != rhs || !oracle_ok) {
    o.mismatch = "instance #" + std::to_string(id) + ": defining set <= " + std::to_string(k) +
                 " is " + yes_no(lhs) + ", exists-unique is " + yes_no(rhs) +
                 (oracle_ok ? "" : " (oracle disagrees)") + "\nsource:\n" + describe(source) +
                 "target:\n" + describe(red.instance.formula(), red.instance.anchor());
  }
  return o;
}

Outcome check_q3(std::size_t id, const DefsetSatInstance& inst, const SearchOptions& caps) {
  Outcome o{"#" + std::to_string(id), {}, 0};
  const std::size_t pair_min = oracle::min_defset_sat(inst);
  ++o.oracle_checks;
  for (std::size_t k = 0; k <= 2; ++k) {
    const ReductionArtifact padded = reduce_q2_to_q3(inst, k);
    const bool lhs = family_has_defining_set(padded.output, k, caps);
    const bool rhs = has_defining_set(inst, k, caps);
    bool oracle_ok = (pair_min <= k) == rhs;
    if (padded.output.num_vars() <= 8) {
      oracle_ok = oracle_ok && ((*oracle::min_defset_sat_family(padded.output) <= k) == lhs);
      ++o.oracle_checks;
    }
    o.line += " k" + std::to_string(k) + "=" + yes_no(lhs) + "/" + yes_no(rhs);
    if (lhs != rhs || !oracle_ok) {
      o.mismatch += "instance #" + std::to_string(id) + " k=" + std::to_string(k) +
                    ": family " + yes_no(lhs) + ", anchored " + yes_no(rhs) +
                    (oracle_ok ? "" : " (oracle disagrees)") + "\n" +
                    describe(inst.formula(), inst.anchor());
    }
  }
  return o;
}

Outcome check_gphi(std::size_t id, const CnfFormula& phi, const SearchOptions& caps) {
  Outcome o{"#" + std::to_string(id), {}, 0};
  const auto models = all_models(phi);
  if (models.empty()) {
    const Graph g = build_g_phi(phi, std::nullopt, caps).graph;
    const bool three = is_colorable(g, 3);
    o.line += " unsat chi>=4=" + yes_no(!three);
    if (three) {
      o.mismatch = "instance #" + std::to_string(id) +
                   ": unsatisfiable formula but G is 3-colorable\n" + write_cnf(phi);
    }
    return o;
  }
  for (const auto& t : models) {
    const GPhiArtifact art = build_g_phi(phi, t, caps);
    const int chi = chromatic_number(art.graph, caps);
    const DefsetSatInstance sat_inst(phi, t);
    const std::size_t sat_min = min_defining_set(sat_inst, caps)->size;
    const DefsetColorInstance col_inst(art.graph, *art.coloring, std::nullopt, caps);
    const std::size_t col_min = min_defining_coloring_set(col_inst, caps)->size;
    const std::size_t sat_oracle = oracle::min_defset_sat(sat_inst);
    ++o.oracle_checks;
    o.line += " [" + std::to_string(sat_min) + "->" + std::to_string(col_min) + "]";
    if (chi != 3 || col_min != sat_min + 4 || sat_oracle != sat_min) {
      o.mismatch += "instance #" + std::to_string(id) + ": chi=" + std::to_string(chi) +
                    " sat min=" + std::to_string(sat_min) + " (oracle " +
                    std::to_string(sat_oracle) + ") coloring min=" + std::to_string(col_min) +
                    "\n" + describe(phi, t);
    }
  }
  return o;
}

struct HCase {
  Graph g;
  Coloring c;
  std::vector<std::size_t> ks;
};

Outcome check_h(std::size_t id, const HCase& hc, const SearchOptions& caps) {
  Outcome o{"#" + std::to_string(id) + " n=" + std::to_string(hc.g.num_vertices()), {}, 0};
  const DefsetColorInstance inst(hc.g, hc.c, std::nullopt, caps);
  const std::size_t pair_oracle = oracle::min_defset_coloring(inst);
  for (std::size_t k : hc.ks) {
    const HArtifact h = build_h(hc.g, hc.c, k, caps);
    const int n = hc.g.num_vertices();
    const bool counts_ok = h.graph.num_vertices() ==
                           n + 3 + 2 * (static_cast<int>(k) + 1) * n + 4;
    const bool lhs = family_has_defining_coloring_set(h.graph, k + 4, caps);
    const bool rhs = has_defining_coloring_set(inst, k, caps);
    const bool oracle_ok = (pair_oracle <= k) == rhs;
    ++o.oracle_checks;
    o.line += " k" + std::to_string(k) + "=" + yes_no(lhs) + "/" + yes_no(rhs);
    if (lhs != rhs || !oracle_ok || !counts_ok) {
      o.mismatch += "instance #" + std::to_string(id) + " k=" + std::to_string(k) +
                    ": family(H) <= k+4 is " + yes_no(lhs) + ", pair(G,c) <= k is " +
                    yes_no(rhs) + (oracle_ok ? "" : " (oracle disagrees)") +
                    (counts_ok ? "" : " (vertex count off)") + "\n" + describe(hc.g, hc.c);
    }
  }
  return o;
}

// -- generators -------------------------------------------------------------

QuantifiedSplit random_split(std::mt19937_64& rng, int max_vars, int max_clauses) {
  const CnfFormula f = random_cnf(rng, max_vars, max_clauses);
  return split_by_mask(f, static_cast<unsigned>(pick(rng, 0, (1 << f.num_vars()) - 1)));
}

// Source for the uniqueness reduction: non-empty y block and an anchor on y
// that already satisfies every clause.
QuantifiedSplit random_unique_source(std::mt19937_64& rng, int max_vars, int max_clauses) {
  const int n = pick(rng, 1, max_vars);
  unsigned y_mask = 0;
  while (y_mask == 0) y_mask = static_cast<unsigned>(pick(rng, 0, (1 << n) - 1));
  std::vector<int> ys, all;
  PartialAssignment t;
  for (int v = 1; v <= n; ++v) {
    all.push_back(v);
    if ((y_mask >> (v - 1)) & 1u) {
      ys.push_back(v);
      t.set(v, coin(rng));
    }
  }
  const int m = pick(rng, 1, max_clauses);
  std::vector<Clause> clauses;
  for (int j = 0; j < m; ++j) {
    const int width = pick(rng, 1, std::min(3, n));
    const int anchor_var = ys[pick(rng, 0, static_cast<int>(ys.size()) - 1)];
    std::vector<int> others;
    for (int v : all) {
      if (v != anchor_var) others.push_back(v);
    }
    std::shuffle(others.begin(), others.end(), rng);
    Clause c{*t.get(anchor_var) ? anchor_var : -anchor_var};
    for (int i = 0; i + 1 < width; ++i) c.push_back(coin(rng) ? others[i] : -others[i]);
    std::sort(c.begin(), c.end(), [](int a, int b) { return var_of(a) < var_of(b); });
    clauses.push_back(std::move(c));
  }
  QuantifiedSplit split = split_by_mask(CnfFormula(n, std::move(clauses)), ~y_mask & ((1u << n) - 1));
  split.anchor_t = t;
  return split;
}

DefsetSatInstance random_anchored(std::mt19937_64& rng, int max_vars, int max_clauses) {
  while (true) {
    CnfFormula f = random_cnf(rng, max_vars, max_clauses);
    const auto models = all_models(f);
    if (models.empty()) continue;
    const auto& t = models[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(models.size()) - 1))];
    return DefsetSatInstance(std::move(f), t);
  }
}

HCase random_h_case(std::mt19937_64& rng, int max_vertices, const SearchOptions& caps) {
  while (true) {
    Graph g = random_graph(rng, pick(rng, 3, max_vertices));
    if (chromatic_number(g, caps) != 3) continue;
    const auto cs = enumerate_colorings(g, {}, 100000, caps);
    Coloring c = cs[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(cs.size()) - 1))];
    return HCase{std::move(g), std::move(c), {0, 1, 2}};
  }
}

// -- cprime is a fixed local check -----------------------------------------

VerifyReport verify_cprime() {
  VerifyReport r;
  r.name = "cprime";
  r.params["mode"] = "exhaustive";
  const CnfFormula gadget(5, cprime_clauses(1, 2, 3, 4, 5));
  std::size_t unique = 0, none = 0;
  for (unsigned bits = 0; bits < 16; ++bits) {
    PartialAssignment fixed;
    std::string tag;
    for (int v = 1; v <= 4; ++v) {
      const bool value = (bits >> (4 - v)) & 1u;
      fixed.set(v, value);
      tag += value ? 'T' : 'F';
    }
    const std::size_t ext = count_extensions(gadget, fixed, 3);
    std::size_t ext_oracle = 0;
    for (std::uint32_t m : oracle::models(gadget)) {
      if ((m & 0xFu) == oracle::to_mask(fixed, 4)) ++ext_oracle;
    }
    ++r.oracle_checked;
    ++r.instances;
    const bool expect_ext = bits != 0;
    if (ext == 1) ++unique;
    if (ext == 0) ++none;
    r.outcomes.push_back("a1a2a3z=" + tag + " extensions=" + std::to_string(ext));
    if (ext != ext_oracle || ext != (expect_ext ? 1u : 0u)) {
      r.mismatches.push_back("boundary " + tag + ": " + std::to_string(ext) + " extensions (oracle " +
                             std::to_string(ext_oracle) + ")");
    }
  }
  // Without the sixth clause (F,T,T,F) has two extensions.
  std::vector<Clause> five = gadget.clauses();
  five.pop_back();
  const std::size_t ext = count_extensions(CnfFormula(5, five),
                                           PartialAssignment::from_literals({-1, 2, 3, -4}), 3);
  r.outcomes.push_back("drop-sixth FTTF extensions=" + std::to_string(ext));
  ++r.instances;
  if (ext < 2) r.mismatches.push_back("dropping the sixth clause keeps FTTF unique");
  r.params["tally"] = "unique=" + std::to_string(unique) + " none=" + std::to_string(none);
  return r;
}

}  // namespace

const std::vector<std::string>& reduction_names() {
  static const std::vector<std::string> names{"mu", "cprime", "split3", "q2", "q3", "gphi", "h"};
  return names;
}

std::vector<CnfFormula> enumerate_small_cnfs(int num_vars, int max_clauses) {
  std::vector<int> universe;
  for (int v = 1; v <= num_vars; ++v) {
    universe.push_back(v);
    universe.push_back(-v);
  }
  std::vector<Clause> clauses;
  const int u = static_cast<int>(universe.size());
  for (int size = 1; size <= std::min(3, u); ++size) {
    std::vector<int> comb(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) comb[i] = i;
    do {
      Clause c;
      for (int i : comb) c.push_back(universe[i]);
      clauses.push_back(std::move(c));
    } while (detail::next_combination(comb, u));
  }
  std::vector<CnfFormula> out;
  const int nc = static_cast<int>(clauses.size());
  for (int size = 0; size <= std::min(max_clauses, nc); ++size) {
    std::vector<int> comb(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) comb[i] = i;
    do {
      std::vector<Clause> picked;
      for (int i : comb) picked.push_back(clauses[i]);
      out.emplace_back(num_vars, std::move(picked));
    } while (size > 0 && detail::next_combination(comb, nc));
  }
  return out;
}

CnfFormula random_cnf(std::mt19937_64& rng, int max_vars, int max_clauses) {
  const int n = pick(rng, 1, max_vars);
  const int m = pick(rng, 1, max_clauses);
  std::vector<int> vars(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) vars[v - 1] = v;
  std::vector<Clause> clauses;
  for (int j = 0; j < m; ++j) {
    std::shuffle(vars.begin(), vars.end(), rng);
    const int width = pick(rng, 1, std::min(3, n));
    Clause c;
    for (int i = 0; i < width; ++i) c.push_back(coin(rng) ? vars[i] : -vars[i]);
    std::sort(c.begin(), c.end(), [](int a, int b) { return var_of(a) < var_of(b); });
    clauses.push_back(std::move(c));
  }
  return CnfFormula(n, std::move(clauses));
}

Graph random_graph(std::mt19937_64& rng, int vertices) {
  Graph g(vertices);
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

VerifyReport verify_reduction(std::string_view name, const SweepSpec& sweep) {
  const auto start = std::chrono::steady_clock::now();
  if (std::find(reduction_names().begin(), reduction_names().end(), name) ==
      reduction_names().end()) {
    throw ContractViolation("unknown reduction '" + std::string(name) + "'");
  }

  VerifyReport report;
  if (name == "cprime") {
    report = verify_cprime();
  } else {
    report.name = std::string(name);
    SearchOptions caps = sweep.caps;
    caps.jobs = 1;  // parallelism goes over instances
    std::mt19937_64 rng(sweep.seed);
    std::vector<Task> tasks;
    auto& params = report.params;
    auto set_default = [](int value, int fallback) { return value > 0 ? value : fallback; };
    const bool exhaustive = sweep.instances == 0;

    if (name == "mu" || name == "split3") {
      const int vars = set_default(sweep.max_vars, 3);
      const int clauses = set_default(sweep.max_clauses, 2);
      const bool is_mu = name == "mu";
      std::vector<QuantifiedSplit> splits;
      if (exhaustive) {
        for (const auto& f : enumerate_small_cnfs(vars, clauses)) {
          for (unsigned mask = 0; mask < (1u << vars); ++mask) splits.push_back(split_by_mask(f, mask));
        }
      } else {
        for (std::size_t i = 0; i < sweep.instances; ++i) splits.push_back(random_split(rng, vars, clauses));
      }
      for (std::size_t i = 0; i < splits.size(); ++i) {
        tasks.push_back([i, caps, is_mu, s = splits[i]] {
          return is_mu ? check_mu(i, s, caps) : check_split3(i, s, caps);
        });
      }
      params["mode"] = exhaustive ? "exhaustive, every x/y split" : "random";
      params["vars"] = std::to_string(vars);
      params["clauses"] = "<=" + std::to_string(clauses);
    } else if (name == "q2") {
      const int vars = set_default(sweep.max_vars, 4);
      const int clauses = set_default(sweep.max_clauses, 4);
      const std::size_t count = exhaustive ? 200 : sweep.instances;
      for (std::size_t i = 0; i < count; ++i) {
        tasks.push_back([i, caps, s = random_unique_source(rng, vars, clauses)] {
          return check_q2(i, s, caps);
        });
      }
      params["mode"] = "random";
      params["vars"] = "<=" + std::to_string(vars);
      params["clauses"] = "<=" + std::to_string(clauses);
    } else if (name == "q3") {
      const int vars = set_default(sweep.max_vars, 4);
      const int clauses = set_default(sweep.max_clauses, 4);
      const std::size_t count = exhaustive ? 200 : sweep.instances;
      for (std::size_t i = 0; i < count; ++i) {
        tasks.push_back([i, caps, inst = random_anchored(rng, vars, clauses)] {
          return check_q3(i, inst, caps);
        });
      }
      params["mode"] = "random";
      params["vars"] = "<=" + std::to_string(vars);
      params["clauses"] = "<=" + std::to_string(clauses);
      params["k"] = "0,1,2";
    } else if (name == "gphi") {
      const int vars = set_default(sweep.max_vars, 2);
      const int clauses = set_default(sweep.max_clauses, 2);
      std::vector<CnfFormula> formulas;
      if (exhaustive) {
        for (int n = 1; n <= vars; ++n) {
          for (auto& f : enumerate_small_cnfs(n, clauses)) formulas.push_back(std::move(f));
        }
      } else {
        for (std::size_t i = 0; i < sweep.instances; ++i) formulas.push_back(random_cnf(rng, vars, clauses));
      }
      for (std::size_t i = 0; i < formulas.size(); ++i) {
        tasks.push_back([i, caps, f = formulas[i]] { return check_gphi(i, f, caps); });
      }
      params["mode"] = exhaustive ? "exhaustive, every satisfying anchor" : "random";
      params["vars"] = "<=" + std::to_string(vars);
      params["clauses"] = "<=" + std::to_string(clauses);
    } else {  // h
      const int vertices = set_default(sweep.max_vertices, 6);
      const std::size_t count = exhaustive ? 24 : sweep.instances;
      for (std::size_t i = 0; i < count; ++i) {
        tasks.push_back([i, caps, hc = random_h_case(rng, vertices, caps)] {
          return check_h(i, hc, caps);
        });
      }
      params["mode"] = "random";
      params["vertices"] = "3.." + std::to_string(vertices);
      params["k"] = "0,1,2";
    }
    params["seed"] = std::to_string(sweep.seed);
    params["width"] = "<=3";

    const auto outcomes = detail::parallel_map<Outcome>(
        tasks.size(), sweep.jobs, [&](std::size_t i) { return tasks[i](); });
    report.instances = outcomes.size();
    for (const auto& o : outcomes) {
      report.outcomes.push_back(o.line);
      report.oracle_checked += o.oracle_checks;
      if (!o.mismatch.empty()) report.mismatches.push_back(o.mismatch);
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace defset
