// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "defset/color_defset.hpp"
#include "defset/color_reductions.hpp"
#include "defset/errors.hpp"
#include "defset/oracle.hpp"
#include "defset/sat_defset.hpp"
#include "defset/verify.hpp"

using namespace defset;

namespace {

constexpr unsigned kParallel = 4;

struct Result {
  bool pass = false;
  std::string detail;
  std::string structured;  // compared across parallelism degrees
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<Result(unsigned jobs)> run;
};

std::string verify_detail(const VerifyReport& r) {
  return "instances=" + std::to_string(r.instances) + " oracle_checked=" +
         std::to_string(r.oracle_checked) + " mismatches=" + std::to_string(r.mismatches.size());
}

Result verify_criterion(const std::string& name, unsigned jobs) {
  SweepSpec sweep;
  sweep.jobs = jobs;
  const VerifyReport r = verify_reduction(name, sweep);
  Result out{r.ok(), verify_detail(r), r.structured()};
  if (!r.ok()) out.detail += "\n" + r.mismatches.front();
  return out;
}

Result gadget_tally(unsigned jobs) {
  SweepSpec sweep;
  sweep.jobs = jobs;
  const VerifyReport r = verify_reduction("cprime", sweep);
  const std::string tally = r.params.at("tally");
  return {r.ok() && tally == "unique=15 none=1", tally + " drop-sixth breaks FTTF: " + (r.ok() ? "yes" : "no"),
          r.structured()};
}

Result h_law(unsigned jobs) {
  SweepSpec sweep;
  sweep.jobs = jobs;
  const VerifyReport r = verify_reduction("h", sweep);
  // Count the k <= 1 checks on their own; the sweep also runs k = 2.
  std::size_t low_k = 0;
  for (const auto& line : r.outcomes) {
    low_k += line.find(" k0=") != std::string::npos;
    low_k += line.find(" k1=") != std::string::npos;
  }
  Result out{r.ok() && low_k >= 20, verify_detail(r) + " k<=1 checks=" + std::to_string(low_k),
             r.structured()};
  if (!r.ok()) out.detail += "\n" + r.mismatches.front();
  return out;
}

std::vector<Graph> agreement_graphs() {
  std::mt19937_64 rng(2024);
  std::vector<Graph> graphs;
  for (int i = 0; i < 200; ++i) graphs.push_back(random_graph(rng, 1 + static_cast<int>(rng() % 8)));
  return graphs;
}

Result solver_oracle(unsigned jobs) {
  SearchOptions options;
  options.jobs = jobs;
  std::mt19937_64 rng(77);
  std::ostringstream log;
  std::size_t disagreements = 0, sat_checks = 0, color_checks = 0;
  auto note = [&](bool agree, const std::string& what) {
    log << what << (agree ? " ok" : " DISAGREE") << '\n';
    disagreements += !agree;
  };

  for (int i = 0; i < 500; ++i) {
    const CnfFormula f = random_cnf(rng, 8, 10);
    const auto models = enumerate_proper(f, {}, std::size_t{1} << f.num_vars());
    const auto fam_oracle = oracle::min_defset_sat_family(f);
    if (models.empty()) {
      bool refused = false;
      try {
        min_defining_set_family(f, options);
      } catch (const NoAnchor&) {
        refused = true;
      }
      note(refused && !fam_oracle, "sat#" + std::to_string(i) + " unsat");
      ++sat_checks;
      continue;
    }
    const DefsetSatInstance inst(f, models[rng() % models.size()]);
    PartialAssignment cand;
    for (const auto& [v, value] : inst.anchor().bindings()) {
      if (rng() % 2) cand.set(v, value);
    }
    const auto best = min_defining_set(inst, options);
    const auto fam = min_defining_set_family(f, options);
    const std::size_t pair_oracle = oracle::min_defset_sat(inst);
    const bool agree = is_defining_set(inst, cand, options) == oracle::is_defining_sat(inst, cand) &&
                       best && best->size == pair_oracle &&
                       oracle::is_defining_sat(inst, best->witness) && fam &&
                       fam->size == *fam_oracle;
    note(agree, "sat#" + std::to_string(i) + " pair=" + std::to_string(pair_oracle) +
                    " family=" + std::to_string(*fam_oracle));
    ++sat_checks;
  }

  const auto graphs = agreement_graphs();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const auto all = oracle::colorings(g, oracle::chromatic_number(g));
    const DefsetColorInstance inst(g, all[rng() % all.size()], std::nullopt, options);
    PartialColoring cand;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (rng() % 2) cand.set(v, inst.anchor()[v]);
    }
    const auto best = min_defining_coloring_set(inst, options);
    const auto fam = min_defining_coloring_family(g, options);
    const std::size_t pair_oracle = oracle::min_defset_coloring(inst);
    const std::size_t fam_oracle = *oracle::min_defset_coloring_family(g);
    const bool agree =
        inst.chromatic_number() == oracle::chromatic_number(g) &&
        is_defining_coloring_set(inst, cand, options) == oracle::is_defining_coloring(inst, cand) &&
        best && best->size == pair_oracle && oracle::is_defining_coloring(inst, best->witness) && fam &&
        fam->size == fam_oracle;
    note(agree, "color#" + std::to_string(i) + " pair=" + std::to_string(pair_oracle) +
                    " family=" + std::to_string(fam_oracle));
    ++color_checks;
  }
  return {disagreements == 0,
          "formulas=" + std::to_string(sat_checks) + " graphs=" + std::to_string(color_checks) +
              " disagreements=" + std::to_string(disagreements),
          log.str()};
}

Result symmetry_floor(unsigned jobs) {
  SearchOptions options;
  options.jobs = jobs;
  std::vector<Graph> graphs = agreement_graphs();
  graphs.push_back(Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  graphs.push_back(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  graphs.push_back(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
  graphs.push_back(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  for (const CnfFormula& phi : {CnfFormula(1, {{1}}), CnfFormula(2, {{1, 2}, {-1, -2}})}) {
    graphs.push_back(build_g_phi(phi).graph);
  }
  graphs.push_back(build_h(graphs[200], {0, 1, 2}, 0).graph);

  std::ostringstream log;
  std::size_t checked = 0, violations = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const int chi = chromatic_number(g, options);
    if (chi < 2) continue;
    const Coloring anchor = enumerate_colorings(g, {}, 1, options).front();
    const DefsetColorInstance inst(g, anchor, std::nullopt, options);
    const bool empty_rejected = !is_defining_coloring_set(inst, {}, options) &&
                                count_colorings(g, chi, {}, 2) >= 2;
    const std::size_t pair_min = min_defining_coloring_set(inst, options)->size;
    const std::size_t fam_min = min_defining_coloring_family(g, options)->size;
    const bool ok = empty_rejected && pair_min >= 1 && fam_min >= 1;
    violations += !ok;
    ++checked;
    log << "graph#" << i << " chi=" << chi << " pair=" << pair_min << " family=" << fam_min
        << (ok ? "" : " VIOLATION") << '\n';
  }
  return {violations == 0,
          "graphs=" + std::to_string(checked) + " violations=" + std::to_string(violations), log.str()};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "clause gadget tally", 1.0, gadget_tally},
      {"AC2", "exists-forall vs mu equivalence", 60.0, [](unsigned j) { return verify_criterion("mu", j); }},
      {"AC3", "unique-to-Q2 reduction law", 300.0, [](unsigned j) { return verify_criterion("q2", j); }},
      {"AC4", "Q2-to-Q3 reduction law", 300.0, [](unsigned j) { return verify_criterion("q3", j); }},
      {"AC5", "G_phi +4 law", 600.0, [](unsigned j) { return verify_criterion("gphi", j); }},
      {"AC6", "H +4 law", 600.0, h_law},
      {"AC7", "solver/oracle agreement", 300.0, solver_oracle},
      {"AC9", "symmetry floor", 300.0, symmetry_floor},
  };

  bool all_pass = true;
  std::vector<std::string> sequential;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run(1);
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what(), {}};
    }
    const double elapsed = seconds_since(start);
    const bool pass = r.pass && elapsed < c.limit_seconds;
    all_pass = all_pass && pass;
    sequential.push_back(r.structured);
    std::printf("[%s] %s %s: %s (%.2fs, limit %.0fs)\n", pass ? "PASS" : "FAIL", c.id.c_str(),
                c.title.c_str(), r.detail.c_str(), elapsed, c.limit_seconds);
    std::fflush(stdout);
  }

  // Determinism: rerun every criterion with parallel workers.
  const auto start = std::chrono::steady_clock::now();
  std::string differing;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string parallel;
    try {
      parallel = criteria[i].run(kParallel).structured;
    } catch (const std::exception& e) {
      parallel = std::string("exception: ") + e.what();
    }
    if (parallel != sequential[i] || parallel.empty()) differing += " " + criteria[i].id;
  }
  const bool det_pass = differing.empty();
  all_pass = all_pass && det_pass;
  std::printf("[%s] AC8 byte-identical reports at jobs 1 and %u: %s (%.2fs)\n", det_pass ? "PASS" : "FAIL",
              kParallel, det_pass ? "all criteria identical" : ("differ:" + differing).c_str(),
              seconds_since(start));
  return all_pass ? 0 : 1;
}
