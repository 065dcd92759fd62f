// defset: defining-set questions for CNF formulas and graph colorings.
//
//   defset sat   check|min|family-min   <file.cnf>
//   defset color check|min|family-min   <file.col>
//   defset reduce mu|split3|q2|q3|gphi|h <input>
//   defset verify <reduction>
//
// Exit status: 0 success / yes, 1 no (decision forms, failed verify), 2 error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "defset/cnf.hpp"
#include "defset/color_defset.hpp"
#include "defset/color_reductions.hpp"
#include "defset/errors.hpp"
#include "defset/graph.hpp"
#include "defset/report.hpp"
#include "defset/sat_defset.hpp"
#include "defset/sat_reductions.hpp"
#include "defset/verify.hpp"

namespace {

using namespace defset;

struct Config {
  std::string input;
  std::optional<std::size_t> k;
  int max_vars = 24;
  int max_vertices = 64;
  unsigned jobs = 1;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string provenance_out;

  std::string anchor;
  std::string candidate;
  std::string provenance;
  std::string coloring;
  std::vector<int> x_vars;
  std::string output;
  std::string anchor_out;
  std::string coloring_out;

  std::size_t instances = 0;
  int max_clauses = 0;

  SearchOptions options() const {
    SearchOptions o;
    o.max_vars = max_vars;
    o.max_vertices = max_vertices;
    o.jobs = jobs;
    return o;
  }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

int emit(const Config& cfg, const Record& record) {
  std::cout << (cfg.format == "json" ? to_json(record) : to_text(record));
  return record.answer.value_or(true) ? 0 : 1;
}

std::vector<std::pair<int, int>> witness_of(const PartialAssignment& a) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [v, value] : a.bindings()) out.emplace_back(v, value ? 1 : 0);
  return out;
}

std::vector<std::pair<int, int>> witness_of(const PartialColoring& c) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [v, color] : c.colors()) out.emplace_back(v + 1, color);
  return out;
}

std::string assignment_field(const PartialAssignment& a) {
  std::string out;
  for (Literal lit : a.literals()) out += std::to_string(lit) + " ";
  return out + "0";
}

// --- sat --------------------------------------------------------------------

PartialAssignment sat_anchor(const Config& cfg, const CnfFormula& f) {
  if (!cfg.anchor.empty()) return read_assignment_file(cfg.anchor);
  const auto first = enumerate_proper(f, {}, 1);
  if (first.empty()) throw NoAnchor("formula is unsatisfiable, no anchor to default to");
  return first.front();
}

int sat_check(const Config& cfg) {
  const CnfFormula f = read_cnf_file(cfg.input);
  if (cfg.candidate.empty()) throw Error("sat check needs --candidate");
  const DefsetSatInstance inst(f, sat_anchor(cfg, f));
  const PartialAssignment cand = read_assignment_file(cfg.candidate);
  Record r{"sat.check", is_defining_set(inst, cand, cfg.options()), std::nullopt, witness_of(cand),
           count_extensions(f, cand, 2), {}};
  return emit(cfg, r);
}

int sat_min(const Config& cfg) {
  const CnfFormula f = read_cnf_file(cfg.input);
  const DefsetSatInstance inst(f, sat_anchor(cfg, f));
  Record r{"sat.min", std::nullopt, std::nullopt, {}, std::nullopt, {}};
  SearchOptions options = cfg.options();
  if (cfg.k) {
    options.max_size = *cfg.k;
    r.fields["k"] = std::to_string(*cfg.k);
  }
  const auto best = min_defining_set(inst, options);
  r.fields["anchor"] = assignment_field(inst.anchor());
  if (cfg.k) r.answer = best.has_value();
  if (best) {
    r.min_size = best->size;
    r.witness = witness_of(best->witness);
    r.model_count_hint = 1;
  }
  return emit(cfg, r);
}

int sat_family_min(const Config& cfg) {
  const CnfFormula f = read_cnf_file(cfg.input);
  Record r{"sat.family-min", std::nullopt, std::nullopt, {}, std::nullopt, {}};
  SearchOptions options = cfg.options();
  if (cfg.k) {
    options.max_size = *cfg.k;
    r.fields["k"] = std::to_string(*cfg.k);
  }
  const auto best = min_defining_set_family(f, options);
  if (cfg.k) r.answer = best.has_value();
  if (best) {
    r.min_size = best->size;
    r.witness = witness_of(best->witness);
    r.model_count_hint = 1;
    r.fields["anchor"] = assignment_field(best->anchor);
  }
  return emit(cfg, r);
}

// --- color ------------------------------------------------------------------

Coloring color_anchor(const Config& cfg, const Graph& g) {
  if (!cfg.anchor.empty()) return to_total(read_coloring_file(cfg.anchor), g);
  const auto first = enumerate_colorings(g, {}, 1, cfg.options());
  return first.empty() ? Coloring{} : first.front();
}

std::string coloring_field(const Coloring& c) {
  std::string out;
  for (std::size_t v = 0; v < c.size(); ++v) out += (v ? " " : "") + std::to_string(c[v]);
  return out;
}

int color_check(const Config& cfg) {
  const Graph g = read_graph_file(cfg.input);
  if (cfg.candidate.empty()) throw Error("color check needs --candidate");
  const DefsetColorInstance inst(g, color_anchor(cfg, g), std::nullopt, cfg.options());
  const PartialColoring cand = read_coloring_file(cfg.candidate);
  Record r{"color.check", is_defining_coloring_set(inst, cand, cfg.options()), std::nullopt,
           witness_of(cand), count_colorings(g, inst.chromatic_number(), cand, 2), {}};
  r.fields["chromatic_number"] = std::to_string(inst.chromatic_number());
  return emit(cfg, r);
}

int color_min(const Config& cfg) {
  const Graph g = read_graph_file(cfg.input);
  const DefsetColorInstance inst(g, color_anchor(cfg, g), std::nullopt, cfg.options());
  Record r{"color.min", std::nullopt, std::nullopt, {}, std::nullopt, {}};
  SearchOptions options = cfg.options();
  if (cfg.k) {
    options.max_size = *cfg.k;
    r.fields["k"] = std::to_string(*cfg.k);
  }
  const auto best = min_defining_coloring_set(inst, options);
  r.fields["chromatic_number"] = std::to_string(inst.chromatic_number());
  r.fields["anchor"] = coloring_field(inst.anchor());
  if (cfg.k) r.answer = best.has_value();
  if (best) {
    r.min_size = best->size;
    r.witness = witness_of(best->witness);
    r.model_count_hint = 1;
  }
  return emit(cfg, r);
}

int color_family_min(const Config& cfg) {
  const Graph g = read_graph_file(cfg.input);
  Record r{"color.family-min", std::nullopt, std::nullopt, {}, std::nullopt, {}};
  SearchOptions options = cfg.options();
  if (cfg.k) {
    options.max_size = *cfg.k;
    r.fields["k"] = std::to_string(*cfg.k);
  }
  const auto best = min_defining_coloring_family(g, options);
  r.fields["chromatic_number"] = std::to_string(chromatic_number(g, options));
  if (cfg.k) r.answer = best.has_value();
  if (best) {
    r.min_size = best->size;
    r.witness = witness_of(best->witness);
    r.model_count_hint = 1;
    r.fields["anchor"] = coloring_field(best->anchor);
  }
  return emit(cfg, r);
}

// --- reduce -----------------------------------------------------------------

QuantifiedSplit split_from(const Config& cfg, const CnfFormula& f) {
  QuantifiedSplit split{f, {}, {}, std::nullopt};
  for (int v = 1; v <= f.num_vars(); ++v) {
    const bool outer = std::find(cfg.x_vars.begin(), cfg.x_vars.end(), v) != cfg.x_vars.end();
    (outer ? split.x_vars : split.y_vars).push_back(v);
  }
  for (int x : cfg.x_vars) {
    if (x < 1 || x > f.num_vars()) throw ContractViolation("--x-vars entry out of range");
  }
  return split;
}

int finish_cnf_reduction(const Config& cfg, const std::string& name, const ReductionArtifact& art) {
  const std::string doc = write_cnf(art.output);
  if (cfg.output.empty()) {
    std::cout << doc;
  } else {
    write_file(cfg.output, doc);
  }
  if (!cfg.provenance_out.empty()) write_file(cfg.provenance_out, write_provenance(art.provenance));
  if (!cfg.anchor_out.empty() && art.anchor_out) write_file(cfg.anchor_out, write_assignment(*art.anchor_out));
  if (cfg.output.empty()) return 0;
  Record r{"reduce." + name, std::nullopt, std::nullopt, {}, std::nullopt, {}};
  r.fields["vars"] = std::to_string(art.output.num_vars());
  r.fields["clauses"] = std::to_string(art.output.num_clauses());
  if (art.budget_out) r.fields["budget_out"] = std::to_string(*art.budget_out);
  return emit(cfg, r);
}

int finish_graph_reduction(const Config& cfg, const std::string& name, const Graph& g,
                           const std::optional<Coloring>& coloring,
                           std::optional<std::size_t> budget) {
  const std::string doc = write_dimacs_graph(g);
  if (cfg.output.empty()) {
    std::cout << doc;
  } else {
    write_file(cfg.output, doc);
  }
  if (!cfg.provenance_out.empty()) write_file(cfg.provenance_out, write_vertex_provenance(g));
  if (!cfg.coloring_out.empty() && coloring) write_file(cfg.coloring_out, write_coloring(*coloring));
  if (cfg.output.empty()) return 0;
  Record r{"reduce." + name, std::nullopt, std::nullopt, {}, std::nullopt, {}};
  r.fields["vertices"] = std::to_string(g.num_vertices());
  r.fields["edges"] = std::to_string(g.num_edges());
  if (budget) r.fields["budget_out"] = std::to_string(*budget);
  return emit(cfg, r);
}

int reduce_mu(const Config& cfg) {
  return finish_cnf_reduction(cfg, "mu", construct_mu(split_from(cfg, read_cnf_file(cfg.input))));
}

int reduce_split3(const Config& cfg) {
  if (cfg.provenance.empty()) throw Error("reduce split3 needs --provenance (sidecar of reduce mu)");
  ReductionArtifact mu{read_cnf_file(cfg.input), parse_provenance(slurp(cfg.provenance)),
                       std::nullopt, std::nullopt};
  if (!cfg.anchor.empty()) {
    mu.anchor_out = read_assignment_file(cfg.anchor);
  } else {
    PartialAssignment t;
    for (const auto& [v, tag] : mu.provenance) {
      if (tag == "z" || tag == "original-y") t.set(v, true);
    }
    mu.anchor_out = t;
  }
  return finish_cnf_reduction(cfg, "split3", split_to_3cnf(mu));
}

int reduce_q2(const Config& cfg) {
  const CnfFormula f = read_cnf_file(cfg.input);
  QuantifiedSplit split = split_from(cfg, f);
  if (cfg.anchor.empty()) throw Error("reduce q2 needs --anchor (assignment of the y block)");
  split.anchor_t = read_assignment_file(cfg.anchor).restricted_to(split.y_vars);
  return finish_cnf_reduction(cfg, "q2", reduce_unique_to_q2(split).artifact);
}

int reduce_q3(const Config& cfg) {
  const CnfFormula f = read_cnf_file(cfg.input);
  if (!cfg.k) throw Error("reduce q3 needs --k");
  const DefsetSatInstance inst(f, sat_anchor(cfg, f));
  return finish_cnf_reduction(cfg, "q3", reduce_q2_to_q3(inst, *cfg.k));
}

int reduce_gphi(const Config& cfg) {
  const CnfFormula f = read_cnf_file(cfg.input);
  std::optional<PartialAssignment> t;
  if (!cfg.anchor.empty()) t = read_assignment_file(cfg.anchor);
  const GPhiArtifact art = build_g_phi(f, t, cfg.options());
  return finish_graph_reduction(cfg, "gphi", art.graph, art.coloring, std::nullopt);
}

int reduce_h(const Config& cfg) {
  const Graph g = read_graph_file(cfg.input);
  if (!cfg.k) throw Error("reduce h needs --k");
  if (cfg.coloring.empty()) throw Error("reduce h needs --coloring");
  const HArtifact art = build_h(g, to_total(read_coloring_file(cfg.coloring), g), *cfg.k, cfg.options());
  return finish_graph_reduction(cfg, "h", art.graph, art.anchor, art.budget_out);
}

// --- verify -----------------------------------------------------------------

int verify(const Config& cfg) {
  SweepSpec sweep;
  sweep.seed = cfg.seed;
  sweep.instances = cfg.instances;
  sweep.jobs = cfg.jobs;
  sweep.max_clauses = cfg.max_clauses;
  sweep.caps.max_vars = cfg.max_vars;
  sweep.caps.max_vertices = cfg.max_vertices;
  const VerifyReport report = verify_reduction(cfg.input, sweep);
  if (!cfg.provenance_out.empty()) write_file(cfg.provenance_out, report.structured());
  std::cout << (cfg.format == "json" ? report.structured() : report.text());
  if (cfg.format == "json") std::cout << report.summary_line() << '\n';
  return report.ok() ? 0 : 1;
}

void add_common(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--k", cfg.k, "Budget for the decision form");
  cmd->add_option("--max-vars", cfg.max_vars, "Variable cap")->check(CLI::PositiveNumber);
  cmd->add_option("--max-vertices", cfg.max_vertices, "Vertex cap")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", cfg.seed, "Generator seed");
  cmd->add_option("--provenance-out", cfg.provenance_out, "Write the provenance sidecar here");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defining sets of CNF formulas and graph colorings"};
  app.require_subcommand(1);
  Config cfg;
  std::function<int(const Config&)> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<int(const Config&)> fn) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    add_common(cmd, cfg);
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };

  CLI::App* sat = app.add_subcommand("sat", "Defining sets of satisfying assignments");
  sat->require_subcommand(1);
  for (auto* cmd : {leaf(sat, "check", "Is the candidate a defining set of the anchor?", sat_check),
                    leaf(sat, "min", "Smallest defining set of the anchor", sat_min),
                    leaf(sat, "family-min", "Smallest defining set over every anchor", sat_family_min)}) {
    cmd->add_option("cnf", cfg.input, "DIMACS cnf file")->required()->check(CLI::ExistingFile);
    if (cmd->get_name() != "family-min") {
      cmd->add_option("--anchor", cfg.anchor, "Anchor assignment (default: first model)")
          ->check(CLI::ExistingFile);
    }
    if (cmd->get_name() == "check") {
      cmd->add_option("--candidate", cfg.candidate, "Partial assignment to test")
          ->required()->check(CLI::ExistingFile);
    }
  }

  CLI::App* color = app.add_subcommand("color", "Defining sets of chromatic colorings");
  color->require_subcommand(1);
  for (auto* cmd : {leaf(color, "check", "Is the candidate a defining set of the anchor?", color_check),
                    leaf(color, "min", "Smallest defining set of the anchor", color_min),
                    leaf(color, "family-min", "Smallest defining set over every coloring", color_family_min)}) {
    cmd->add_option("graph", cfg.input, "DIMACS edge file")->required()->check(CLI::ExistingFile);
    if (cmd->get_name() != "family-min") {
      cmd->add_option("--anchor", cfg.anchor, "Anchor coloring (default: first coloring)")
          ->check(CLI::ExistingFile);
    }
    if (cmd->get_name() == "check") {
      cmd->add_option("--candidate", cfg.candidate, "Partial coloring to test")
          ->required()->check(CLI::ExistingFile);
    }
  }

  CLI::App* reduce = app.add_subcommand("reduce", "Build a reduction target");
  reduce->require_subcommand(1);
  const std::vector<std::tuple<std::string, std::string, std::function<int(const Config&)>>> reductions{
      {"mu", "Exists-forall formula to its exists-unique formula", reduce_mu},
      {"split3", "Rewrite a mu formula into 3CNF", reduce_split3},
      {"q2", "Exists-unique formula to an anchored size question", reduce_q2},
      {"q3", "Anchored size question to a family size question", reduce_q3},
      {"gphi", "3CNF formula to a graph for 3-coloring", reduce_gphi},
      {"h", "Colored graph to a graph for the family question", reduce_h},
  };
  for (const auto& [name, help, fn] : reductions) {
    CLI::App* cmd = leaf(reduce, name, help, fn);
    cmd->add_option("input", cfg.input, "Input file")->required()->check(CLI::ExistingFile);
    cmd->add_option("-o,--output", cfg.output, "Output file (stdout if omitted)");
    if (name == "mu" || name == "q2") {
      cmd->add_option("--x-vars", cfg.x_vars, "Outer block, comma separated")->delimiter(',');
    }
    if (name == "split3") {
      cmd->add_option("--provenance", cfg.provenance, "Sidecar from reduce mu")->check(CLI::ExistingFile);
    }
    if (name == "split3" || name == "q2" || name == "q3" || name == "gphi") {
      cmd->add_option("--anchor", cfg.anchor, "Anchor assignment")->check(CLI::ExistingFile);
    }
    if (name == "h") {
      cmd->add_option("--coloring", cfg.coloring, "3-coloring of the input")->check(CLI::ExistingFile);
    }
    if (name == "gphi" || name == "h") {
      cmd->add_option("--coloring-out", cfg.coloring_out, "Write the target anchor coloring here");
    } else {
      cmd->add_option("--anchor-out", cfg.anchor_out, "Write the target anchor here");
    }
  }

  CLI::App* ver = leaf(&app, "verify", "Check a reduction on a sweep of small instances", verify);
  ver->add_option("reduction", cfg.input, "One of mu, cprime, split3, q2, q3, gphi, h")
      ->required()
      ->check(CLI::IsMember(reduction_names()));
  ver->add_option("--instances", cfg.instances, "Random instances (0: reduction default)");
  ver->add_option("--max-clauses", cfg.max_clauses, "Clause bound for generated formulas");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action(cfg);
  } catch (const ParseError& e) {
    std::cerr << "defset: " << cfg.input << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "defset: " << e.what() << '\n';
  }
  return 2;
}
