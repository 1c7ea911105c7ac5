// hypertri command-line front end.
//
// Exit codes: 0 completed, 1 internal error or failed self-test,
// 2 malformed input or arguments, 3 capacity exceeded, 4 search budget exhausted.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypertri/hypertri.hpp"
#include "hypertri/invariants.hpp"
#include "hypertri/report_json.hpp"

namespace {

using namespace hypertri;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitBudget = 4;

Hypergraph load(const std::string& path) {
  if (path == "-") return parse_hg(std::cin);
  return read_hg_file(path);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct GenArgs {
  std::string family;
  int r = 3;
  int n = 0;
  int m = 0;
  int ell = 0;
  std::vector<int> sizes;
  std::string base;
  int edges = 0;
  std::uint64_t seed = 1;
  std::string forbid = "triangle";
  std::string out;
};

Hypergraph generate(const GenArgs& a) {
  const std::string& f = a.family;
  if (f == "complete") return complete(a.r, a.m > 0 ? a.m : a.n);
  if (f == "triangle") return generalized_triangle(a.r);
  if (f == "wheel5") return wheel5(a.r);
  if (f == "wheel5-blowup") return wheel5_blowup(a.r, a.sizes);
  if (f == "wheel5-tight") return wheel5_blowup(a.r, wheel5_tight_sizes(a.r, a.n));
  if (f == "blowup") {
    if (a.base.empty()) throw ContractError("blowup needs --base FILE");
    return blowup({load(a.base), a.sizes});
  }
  if (f == "balanced-partite") return balanced_r_partite(a.r, a.n);
  if (f == "expansion") return expansion_of_clique(a.r, a.ell);
  if (f == "clique-plus-isolated") return clique_plus_isolated(a.r, a.n);
  if (f == "random") {
    std::vector<ForbiddenPattern> forbidden;
    if (a.forbid == "triangle") forbidden.emplace_back(GeneralizedTriangleMode{});
    else if (a.forbid != "none") throw ContractError("--forbid must be 'triangle' or 'none'");
    return random_pattern_free(a.r, a.n, a.edges, forbidden, a.seed);
  }
  throw ContractError("unknown family '" + f + "'");
}

struct CheckArgs {
  std::string file;
  bool codegree = false;
  std::optional<int> idegree;
  bool shadow = false;
  bool degrees = false;
  bool trfree = false;
  bool sigmafree = false;
  bool aes = false;
  bool partite = false;
};

Json check(const CheckArgs& a) {
  const Hypergraph h = load(a.file);
  Json j{{"r", h.uniformity()}, {"n", h.vertex_count()}, {"m", h.edge_count()}};
  if (a.codegree) j["min_positive_codegree"] = min_positive_codegree(h);
  if (a.idegree) j["min_positive_idegree"] = Json{{"i", *a.idegree}, {"value", min_positive_idegree(h, *a.idegree)}};
  if (a.shadow) {
    Json keys = Json::array();
    for (const auto& [key, nbrs] : h.shadow_index()) keys.push_back(Json{{"set", key.to_string()}, {"neighborhood", nbrs.to_string()}});
    j["shadow"] = keys;
  }
  if (a.degrees) {
    const DegreeStats s = degree_stats(h);
    j["degrees"] = Json{{"min", s.min_degree}, {"max", s.max_degree}, {"average", s.average.to_string()}};
  }
  if (a.trfree) {
    const auto emb = contains_generalized_triangle(h);
    j["tr_free"] = !emb.has_value();
    if (emb) j["tr_copy"] = embedding_json(*emb)["map"];
  }
  if (a.sigmafree) {
    const auto w = contains_sigma(h);
    j["sigma_free"] = !w.has_value();
    if (w) j["sigma_witness"] = Json::array({w->a.to_string(), w->b.to_string(), w->c.to_string()});
  }
  if (a.aes) {
    const Threshold t = Threshold::aes(h.uniformity(), h.vertex_count());
    j["aes_threshold"] = t.to_string();
    j["codegree_exceeds_threshold"] = t.exceeded_by(min_positive_codegree(h));
  }
  if (a.partite) {
    const auto cert = find_r_partition(h);
    j["r_partite"] = cert.has_value();
    if (cert) j["partition"] = partition_json(*cert)["parts"];
  }
  return j;
}

struct EngineArgs {
  std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
  double budget_secs = 0.0;
  int workers = 1;
  int split_depth = 6;

  EngineOptions options() const { return {workers, split_depth, {budget_nodes, budget_secs}}; }

  void add_to(CLI::App* cmd) {
    cmd->add_option("--budget-nodes", budget_nodes, "node limit")->capture_default_str();
    cmd->add_option("--budget-secs", budget_secs, "wall-clock limit in seconds (0 = none)")->capture_default_str();
    cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--split-depth", split_depth, "slot depth at which work is split")->capture_default_str();
  }
};

struct SearchArgs {
  int r = 3;
  int n = 0;
  std::string mode = "theorem";
  int ell = 0;
  std::optional<int> min_codegree;
  bool no_anchor = false;
  bool timing = false;
  EngineArgs engine;
};

int run_search(const SearchArgs& a) {
  SearchProblem p;
  if (a.min_codegree) {
    if (a.mode != "theorem") throw ContractError("--min-codegree applies to the generalized-triangle mode only");
    p = min_codegree_problem(a.r, a.n, *a.min_codegree, a.engine.options());
  } else {
    p = counterexample_problem(a.r, a.n, a.engine.options());
    if (a.mode == "expansion") {
      if (a.ell <= 0) throw ContractError("expansion mode needs --ell");
      p.forbidden = {ExpansionMode{a.ell}};
    } else if (a.mode != "theorem") {
      throw ContractError("--mode must be 'theorem' or 'expansion'");
    }
  }
  if (a.no_anchor) p.anchor_first_edge = false;
  const SearchReport rep = enumerate(p);
  print_json(search_report_json(p, rep, a.timing));
  return rep.status == SearchStatus::budget_exhausted ? kExitBudget : kExitOk;
}

void print_explain(int r) {
  std::cout << "Predicted status per n (r = " << r << "):\n"
            << "  n >= (r-1)(2r+1)/2 = " << Fraction((r - 1) * (2 * r + 1), 2).to_string()
            << ": no counterexamples. Every T_r-free r-graph whose minimum positive codegree exceeds\n"
            << "      2n/(2r+1) is r-partite.\n"
            << "  r+1 <= n < (r-1)(2r+1)/2: counterexamples exist. For 2r-2 <= n the complete r-graph on\n"
            << "      2r-2 vertices plus isolated vertices is T_r-free with codegree r-1 > 2n/(2r+1) and\n"
            << "      is not r-partite; smaller n admit similar constructions.\n"
            << "  n <= r: no claim.\n"
            << "  expansion mode (forbidding H_{l+1}^r): the analogous statement needs\n"
            << "      n >= (2r+1)(r-2)C(l,2)/2; rows below that are reported as property-only and never\n"
            << "      count as a verification or a refutation.\n\n";
}

int run_verify(int r, int from, int to, std::optional<int> ell, bool explain, bool json, const EngineArgs& engine) {
  VerifyOptions opt;
  opt.engine = engine.options();
  opt.expansion_ell = ell;
  const VerifyReport rep = verify_theorem_suite(r, from, to, opt);
  if (json) {
    print_json(verify_json(rep));
  } else {
    if (explain) print_explain(r);
    std::cout << "  n  mode        prediction              status               witnesses  outcome\n";
    for (const auto& row : rep.rows) {
      std::string found = row.report.witnesses.empty() ? "none" : "counterexamples-found";
      char line[256];
      std::snprintf(line, sizeof line, "%3d  %-10s  %-22s  %-19s  %-9zu  %s  (%s)\n", row.n, row.mode.c_str(),
                    to_string(row.prediction).c_str(), to_string(row.report.status).c_str(),
                    row.report.witnesses.size(), to_string(row.outcome).c_str(), found.c_str());
      std::cout << line;
    }
    std::cout << "overall " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  }
  for (const auto& row : rep.rows) {
    if (row.report.status == SearchStatus::budget_exhausted) return kExitBudget;
  }
  return kExitOk;
}

int run_selftest(std::size_t count, std::uint64_t seed) {
  std::size_t failures = 0;
  auto report = [&](const std::string& name, std::size_t checked, const std::vector<std::string>& bad) {
    std::cout << (bad.empty() ? "PASS " : "FAIL ") << name << " (" << checked << " hypergraphs";
    if (!bad.empty()) std::cout << ", first violation: " << bad.front();
    std::cout << ")\n";
    failures += bad.empty() ? 0 : 1;
  };

  auto family = invariants::random_triangle_free_fixtures(count, seed);
  const auto blowups = invariants::random_blowup_fixtures(count / 10 + 1, seed + 1);
  const auto fixtures = invariants::construction_fixtures();
  family.insert(family.end(), blowups.begin(), blowups.end());
  family.insert(family.end(), fixtures.begin(), fixtures.end());

  std::vector<std::string> shadow_bad, union_bad, sigma_bad, structure_bad;
  for (const auto& h : family) {
    for (auto& v : invariants::shadow_reconstruction(h)) shadow_bad.push_back(v);
    for (auto& v : invariants::union_identity(h)) union_bad.push_back(v);
    for (auto& v : invariants::sigma_freeness(h)) sigma_bad.push_back(v);
    for (auto& v : invariants::edge_neighbourhood_structure(h)) structure_bad.push_back(v);
  }
  report("shadow reconstruction and codegree sum", family.size(), shadow_bad);
  report("union of face neighbourhoods equals vertex neighbourhood", family.size(), union_bad);
  report("T_r-free with codegree >= r is Sigma_r-free", family.size(), sigma_bad);
  report("face neighbourhoods disjoint, independent, avoid N(u)", family.size(), structure_bad);

  std::vector<std::string> expansion_bad;
  const auto planted = invariants::planted_expansion_fixtures(count / 10 + 1, seed + 2);
  for (const auto& h : planted) {
    if (!contains_clique_in_ith_shadow(h, 4, 1) && min_positive_codegree(h) > 3) {
      expansion_bad.push_back("planted H_4^3 with K_4-free shadow and codegree > 3");
    }
  }
  report("planted expansion: K_4 in shadow or codegree <= 3", planted.size(), expansion_bad);

  std::vector<std::string> search_bad;
  const SearchReport small = find_counterexamples(3, 6);
  const CanonicalForm expected = canonical_form(clique_plus_isolated(3, 6));
  const bool has_clique = std::any_of(small.witnesses.begin(), small.witnesses.end(),
                                      [&](const Witness& w) { return w.canonical == expected; });
  if (small.status != SearchStatus::exhaustive_complete || !has_clique) {
    search_bad.push_back("n=6 counterexample search missed K_4^3 plus two isolated vertices");
  }
  const SearchReport boundary = enumerate(min_codegree_problem(3, 7, 3));
  if (boundary.status != SearchStatus::exhaustive_complete || !boundary.witnesses.empty()) {
    search_bad.push_back("n=7: a T_3-free 3-graph with codegree >= 3 was reported");
  }
  report("counterexample searches at r=3, n=6 and n=7", 2, search_bad);

  return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypertri: r-uniform hypergraphs, positive codegree and generalized triangles"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a named hypergraph as .hg");
  gen_cmd->add_option("family", gen.family,
                      "complete | triangle | wheel5 | wheel5-blowup | wheel5-tight | blowup | balanced-partite | "
                      "expansion | clique-plus-isolated | random")
      ->required();
  gen_cmd->add_option("--r", gen.r, "uniformity");
  gen_cmd->add_option("--n", gen.n, "vertex count");
  gen_cmd->add_option("--m", gen.m, "vertex count of the complete r-graph");
  gen_cmd->add_option("--ell", gen.ell, "expansion parameter l (K_{l+1})");
  gen_cmd->add_option("--sizes", gen.sizes, "blowup class sizes")->delimiter(',');
  gen_cmd->add_option("--base", gen.base, "base hypergraph for 'blowup'");
  gen_cmd->add_option("--edges", gen.edges, "target edge count for 'random'");
  gen_cmd->add_option("--seed", gen.seed, "seed for 'random'");
  gen_cmd->add_option("--forbid", gen.forbid, "triangle | none (for 'random')");
  gen_cmd->add_option("-o,--output", gen.out, "output file (default stdout)");

  CheckArgs chk;
  auto* check_cmd = app.add_subcommand("check", "print requested metrics as JSON");
  check_cmd->add_option("file", chk.file, ".hg file or '-'")->required();
  check_cmd->add_flag("--codegree", chk.codegree, "minimum positive codegree");
  check_cmd->add_option("--idegree", chk.idegree, "minimum positive i-degree");
  check_cmd->add_flag("--shadow", chk.shadow, "shadow with neighbourhoods");
  check_cmd->add_flag("--degrees", chk.degrees, "min/max/average vertex degree");
  check_cmd->add_flag("--trfree", chk.trfree, "generalized-triangle freeness");
  check_cmd->add_flag("--sigmafree", chk.sigmafree, "Sigma_r freeness");
  check_cmd->add_flag("--aes", chk.aes, "compare codegree with 2n/(2r+1)");
  check_cmd->add_flag("--partite", chk.partite, "r-partiteness with certificate");

  std::string host_file, pattern_file;
  auto* embed_cmd = app.add_subcommand("embed", "find a copy of a pattern in a host");
  embed_cmd->add_option("--host", host_file, "host .hg")->required();
  embed_cmd->add_option("--pattern", pattern_file, "pattern .hg")->required();

  std::string part_file;
  int part_r = 0;
  auto* part_cmd = app.add_subcommand("partition", "r-partition certificate or 'absent'");
  part_cmd->add_option("file", part_file, ".hg file or '-'")->required();
  part_cmd->add_option("-r,--r", part_r, "number of parts (must equal the uniformity)")->required();

  SearchArgs srch;
  auto* search_cmd = app.add_subcommand("search", "exhaustive counterexample search, JSON report");
  search_cmd->add_option("--r", srch.r, "uniformity")->required();
  search_cmd->add_option("--n", srch.n, "vertex count")->required();
  search_cmd->add_option("--mode", srch.mode, "theorem | expansion")->capture_default_str();
  search_cmd->add_option("--ell", srch.ell, "l for expansion mode");
  search_cmd->add_option("--min-codegree", srch.min_codegree,
                         "instead: T_r-free graphs with codegree >= K, any partiteness");
  search_cmd->add_flag("--no-anchor", srch.no_anchor, "search all labellings instead of fixing edge {0..r-1}");
  search_cmd->add_flag("--timing", srch.timing, "include elapsed_seconds in the report");
  srch.engine.add_to(search_cmd);

  int coex_r = 3, coex_n = 0;
  EngineArgs coex_engine;
  auto* coex_cmd = app.add_subcommand("coex", "exact positive codegree Turan number of T_r");
  coex_cmd->add_option("--r", coex_r, "uniformity")->required();
  coex_cmd->add_option("--n", coex_n, "vertex count")->required();
  coex_engine.add_to(coex_cmd);

  int ver_r = 3, ver_from = 0, ver_to = 0;
  std::optional<int> ver_ell;
  bool ver_explain = false, ver_json = false;
  EngineArgs ver_engine;
  auto* verify_cmd = app.add_subcommand("verify", "compare searches with the predicted statuses");
  verify_cmd->add_option("--r", ver_r, "uniformity")->required();
  verify_cmd->add_option("--n-from", ver_from, "first n")->required();
  verify_cmd->add_option("--n-to", ver_to, "last n")->required();
  verify_cmd->add_option("--ell", ver_ell, "also run expansion mode with this l");
  verify_cmd->add_flag("--explain", ver_explain, "print the prediction table");
  verify_cmd->add_flag("--json", ver_json, "JSON output");
  ver_engine.add_to(verify_cmd);

  std::size_t st_count = 1000;
  std::uint64_t st_seed = 2024;
  auto* self_cmd = app.add_subcommand("selftest", "run the invariant suites at reduced scale");
  self_cmd->add_option("--count", st_count, "random hypergraphs")->capture_default_str();
  self_cmd->add_option("--seed", st_seed, "seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) {
      write_text(gen.out, to_hg(generate(gen)));
      return kExitOk;
    }
    if (*check_cmd) {
      print_json(check(chk));
      return kExitOk;
    }
    if (*embed_cmd) {
      const Hypergraph host = load(host_file);
      const Hypergraph pattern = load(pattern_file);
      if (auto emb = find_embedding(host, pattern)) print_json(embedding_json(*emb));
      else std::cout << "absent\n";
      return kExitOk;
    }
    if (*part_cmd) {
      const Hypergraph h = load(part_file);
      if (part_r != h.uniformity()) {
        throw ContractError("-r " + std::to_string(part_r) + " does not match the uniformity " +
                            std::to_string(h.uniformity()));
      }
      if (auto cert = find_r_partition(h)) print_json(partition_json(*cert));
      else std::cout << "absent\n";
      return kExitOk;
    }
    if (*search_cmd) return run_search(srch);
    if (*coex_cmd) {
      const CoexResult res = copositive_turan(coex_r, coex_n, coex_engine.options());
      print_json(coex_json(coex_r, coex_n, res));
      return res.exact() ? kExitOk : kExitBudget;
    }
    if (*verify_cmd) return run_verify(ver_r, ver_from, ver_to, ver_ell, ver_explain, ver_json, ver_engine);
    if (*self_cmd) return run_selftest(st_count, st_seed);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
