// homshift: homological shift ideals of monomial ideals, graph-class
// recognition, and randomized property campaigns.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homshift/betti.hpp"
#include "homshift/campaigns.hpp"
#include "homshift/graph.hpp"
#include "homshift/io.hpp"
#include "homshift/linquot.hpp"
#include "homshift/monomial.hpp"
#include "homshift/reproduce.hpp"

using json = nlohmann::json;
using namespace homshift;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

json ideal_to_json(const MonomialIdeal& I) {
  json gens = json::array();
  for (const Monomial& g : I.gens()) gens.push_back(g.str());
  return json{{"vars", I.vars()}, {"gens", gens}};
}

int cmd_hs(const std::string& path, int k, const std::string& route, bool as_json,
           int max_gens) {
  MonomialIdeal I = load_ideal(path);
  LinQuotOptions lopts;
  lopts.generator_cap = max_gens;

  std::optional<MonomialIdeal> via_linquot;
  std::optional<AdmissibleOrderCertificate> cert;
  if (route == "linquot" || route == "auto") {
    cert = find_admissible_order(I, lopts);
    if (cert) {
      via_linquot = hs_linquot(I, *cert, k);
    } else if (route == "linquot") {
      std::cerr << "error: ideal does not have linear quotients; "
                   "the linquot route does not apply\n";
      return kExitInputError;
    }
  }
  std::optional<MonomialIdeal> via_betti;
  if (route == "betti" || route == "auto") via_betti = hs_betti(I, k);

  if (via_linquot && via_betti && !(*via_linquot == *via_betti)) {
    std::cerr << "route disagreement:\nlinquot:\n" << format_ideal(*via_linquot)
              << "betti:\n" << format_ideal(*via_betti);
    return kExitCounterexample;
  }
  const MonomialIdeal& hs = via_betti ? *via_betti : *via_linquot;
  if (as_json) {
    json out = {{"k", k},
                {"route", route},
                {"hs", ideal_to_json(hs)},
                {"has_linear_quotients_input", cert.has_value()}};
    if (route == "auto") out["routes_agree"] = true;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << format_ideal(hs);
  }
  return kExitPass;
}

int cmd_betti(const std::string& path, bool as_json) {
  MonomialIdeal I = load_ideal(path);
  BettiTable table = multigraded_betti(I);
  if (as_json) {
    json triples = json::array();
    for (const auto& [key, rank] : table.entries()) {
      triples.push_back(
          {{"i", key.first}, {"a", key.second.exps()}, {"rank", rank}});
    }
    json out = {{"vars", I.vars()},
                {"projective_dimension", table.projective_dimension()},
                {"entries", triples}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << table.render();
  }
  return kExitPass;
}

std::string vec_str(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

int cmd_graph(const std::string& path, bool as_json, int max_vertices) {
  SimpleGraph G = load_graph(path);
  OrderSearchOptions opts;
  opts.vertex_cap = max_vertices;

  ChordalResult ch = is_chordal(G);
  ChordalResult coch = is_chordal(G.complement());
  auto pio = proper_interval_order(G, opts);
  auto rev = find_reversible_peo(G, opts);

  if (as_json) {
    json out = {{"n", G.n()},
                {"edges", G.edge_count()},
                {"chordal", ch.chordal()},
                {"cochordal", coch.chordal()},
                {"proper_interval", pio.has_value()},
                {"reversible", rev.has_value()}};
    if (ch.chordal()) out["peo"] = *ch.peo;
    else out["induced_cycle"] = ch.induced_cycle;
    if (coch.chordal()) out["complement_peo"] = *coch.peo;
    else out["complement_induced_cycle"] = coch.induced_cycle;
    if (pio) out["proper_interval_order"] = *pio;
    if (rev) out["reversible_peo"] = *rev;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "vertices: " << G.n() << ", edges: " << G.edge_count() << "\n";
    std::cout << "chordal: " << (ch.chordal() ? "yes (peo: " + vec_str(*ch.peo) + ")"
                                              : "no (induced cycle: " +
                                                    vec_str(ch.induced_cycle) + ")")
              << "\n";
    std::cout << "cochordal: "
              << (coch.chordal()
                      ? "yes (complement peo: " + vec_str(*coch.peo) + ")"
                      : "no (complement induced cycle: " +
                            vec_str(coch.induced_cycle) + ")")
              << "\n";
    std::cout << "proper interval: "
              << (pio ? "yes (order: " + vec_str(*pio) + ")" : "no") << "\n";
    std::cout << "reversible: "
              << (rev ? "yes (reversible peo: " + vec_str(*rev) + ")" : "no")
              << "\n";
  }
  return kExitPass;
}

int cmd_reproduce(const std::string& id, const std::string& data_dir, bool as_json) {
  ReproduceResult r = reproduce_example(id, data_dir);
  if (as_json) {
    std::cout << json{{"example", r.example_id}, {"pass", r.pass}, {"log", r.log}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << r.example_id << ":\n" << r.log
              << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  return r.pass ? kExitPass : kExitCounterexample;
}

int cmd_fuzz(const std::string& id, int count, uint64_t seed, int jobs,
             bool as_json) {
  CampaignReport report = run_campaign(id, count, seed, jobs);
  std::cout << report.render(as_json);
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homological shift ideals of monomial ideals"};
  app.require_subcommand(1);

  std::string ideal_path, graph_path, route = "auto", example_id, theorem_id;
  std::string data_dir = default_data_dir();
  int k = 1, count = 100, max_gens = 20, max_vertices = 10, jobs = 1;
  uint64_t seed = 0;
  bool as_json = false;
  app.add_flag("--json", as_json, "structured output");

  auto* hs = app.add_subcommand("hs", "compute HS_k of a monomial ideal");
  hs->add_option("ideal", ideal_path, "ideal file")->required();
  hs->add_option("--k", k, "homological degree")->check(CLI::NonNegativeNumber);
  hs->add_option("--route", route, "auto | linquot | betti")
      ->check(CLI::IsMember({"auto", "linquot", "betti"}));
  hs->add_option("--max-gens", max_gens, "generator cap for the order search");

  auto* betti = app.add_subcommand("betti", "multigraded Betti numbers");
  betti->add_option("ideal", ideal_path, "ideal file")->required();

  auto* graph = app.add_subcommand("graph", "graph-class verdicts");
  graph->add_option("graph", graph_path, "graph file")->required();
  graph->add_option("--max-vertices", max_vertices, "cap for order searches");

  auto* repro = app.add_subcommand("reproduce", "recompute a named example");
  repro->add_option("example", example_id, "ex1.4 | ex2.3 | ex2.10a | ex2.10b")
      ->required();
  repro->add_option("--data-dir", data_dir, "directory with inputs and goldens");

  auto* fuzz = app.add_subcommand("fuzz", "randomized property campaign");
  fuzz->add_option("theorem", theorem_id,
                   "T1.3 | T2.6 | T3.1 | C3.6 | T4.7 | Q-linres-HS1 | "
                   "Q-polymatroidal-d3")
      ->required();
  fuzz->add_option("--count", count, "number of instances");
  fuzz->add_option("--seed", seed, "campaign seed");
  fuzz->add_option("--jobs", jobs, "worker threads");

  for (auto* sub : {hs, betti, graph, repro, fuzz}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (hs->parsed()) return cmd_hs(ideal_path, k, route, as_json, max_gens);
    if (betti->parsed()) return cmd_betti(ideal_path, as_json);
    if (graph->parsed()) return cmd_graph(graph_path, as_json, max_vertices);
    if (repro->parsed()) return cmd_reproduce(example_id, data_dir, as_json);
    if (fuzz->parsed()) return cmd_fuzz(theorem_id, count, seed, jobs, as_json);
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
