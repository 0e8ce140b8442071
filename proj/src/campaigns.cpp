#include "homshift/campaigns.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "homshift/betti.hpp"
#include "homshift/constructions.hpp"
#include "homshift/polymatroid.hpp"

namespace homshift {

uint64_t derive_seed(uint64_t campaign_seed, uint64_t index) {
  // splitmix64 over the combined value
  uint64_t z = campaign_seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  std::vector<int> exps(n, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n) {
      if (left == 0) out.push_back(Monomial(exps));
      return;
    }
    for (int e = 0; e <= left; ++e) {
      exps[var] = e;
      rec(var + 1, left - e);
    }
    exps[var] = 0;
  };
  rec(0, d);
  return out;
}

// Can `g` be appended to the admissible prefix `gens`?
bool appendable(const std::vector<Monomial>& gens, const Monomial& g) {
  std::vector<Monomial> colons;
  for (const Monomial& u : gens) colons.push_back(colon_quotient(u, g));
  for (const Monomial& c : colons) {
    bool dominated = false;
    for (const Monomial& d : colons) {
      if (d.degree() == 1 && d.divides(c)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

}  // namespace

LqSample sample_lq_ideal(uint64_t seed, int max_vars, int max_degree, int max_gens) {
  std::mt19937_64 rng(seed);
  int n = 2 + static_cast<int>(rng() % static_cast<uint64_t>(max_vars - 1));
  int d = 2 + static_cast<int>(rng() % static_cast<uint64_t>(max_degree - 1));
  int target = 2 + static_cast<int>(rng() % static_cast<uint64_t>(max_gens - 1));
  auto pool = monomials_of_degree(n, d);

  std::vector<Monomial> gens{pool[rng() % pool.size()]};
  while (static_cast<int>(gens.size()) < target) {
    std::vector<Monomial> candidates;
    for (const Monomial& g : pool) {
      if (std::find(gens.begin(), gens.end(), g) == gens.end() &&
          appendable(gens, g)) {
        candidates.push_back(g);
      }
    }
    if (candidates.empty()) break;
    gens.push_back(candidates[rng() % candidates.size()]);
  }

  MonomialIdeal I(n, gens);
  // Recover the construction order as index positions into G(I).
  std::vector<int> order;
  for (const Monomial& g : gens) {
    auto it = std::find(I.gens().begin(), I.gens().end(), g);
    order.push_back(static_cast<int>(it - I.gens().begin()));
  }
  return {I, std::get<AdmissibleOrderCertificate>(is_admissible(I, order))};
}

std::optional<CochordalSample> sample_cochordal_reversible(uint64_t seed,
                                                           int max_vertices) {
  std::mt19937_64 rng(seed);
  int n = 3 + static_cast<int>(rng() % static_cast<uint64_t>(max_vertices - 2));
  for (int attempt = 0; attempt < 500; ++attempt) {
    double p = 0.2 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0;
    SimpleGraph G = random_graph(n, p, rng());
    if (edge_ideal(G).is_zero()) continue;
    SimpleGraph gc = G.complement();
    if (!is_chordal(gc).chordal()) continue;
    auto rev = find_reversible_peo(gc);
    if (rev) return CochordalSample{G, *rev};
  }
  return std::nullopt;
}

int CampaignReport::passed() const {
  int c = 0;
  for (const auto& r : instances) c += r.pass && !r.capped;
  return c;
}

int CampaignReport::failed() const {
  int c = 0;
  for (const auto& r : instances) c += !r.pass && !r.capped;
  return c;
}

int CampaignReport::capped() const {
  int c = 0;
  for (const auto& r : instances) c += r.capped;
  return c;
}

int CampaignReport::exit_code() const {
  if (failed() > 0) return 1;
  if (capped() > 0) return 3;
  return 0;
}

std::string CampaignReport::render(bool structured) const {
  std::ostringstream os;
  if (structured) {
    for (const auto& r : instances) {
      os << "instance seed=" << r.seed << " family=" << r.family << " n=" << r.n
         << " m=" << r.m << " verdict="
         << (r.capped ? "capped" : (r.pass ? "pass" : "FAIL"));
      if (!r.detail.empty()) os << " detail=\"" << r.detail << "\"";
      os << "\n";
    }
  }
  os << "campaign " << id << " seed=" << seed << " total=" << instances.size()
     << " pass=" << passed() << " fail=" << failed() << " capped=" << capped()
     << "\n";
  return os.str();
}

namespace {

using InstanceFn = std::function<InstanceReport(uint64_t seed)>;

// Campaign T1.3: HS_1 of an equigenerated LQ ideal has linear quotients, and
// every restricted colon (all other generators) : u_i is variable-generated.
InstanceReport check_t13(uint64_t seed) {
  InstanceReport r;
  r.seed = seed;
  LqSample s = sample_lq_ideal(seed);
  r.family = "lq-equigenerated";
  r.n = s.ideal.vars();
  r.m = s.ideal.num_gens();
  for (int i = 0; i < s.ideal.num_gens(); ++i) {
    auto check = colon_all_others_is_variable_generated(s.ideal, i);
    if (!check.ok) {
      r.detail = "restricted colon at generator " + std::to_string(i) +
                 " not variable-generated: " + check.colon.str();
      return r;
    }
  }
  MonomialIdeal hs1 = hs_linquot(s.ideal, s.cert, 1);
  if (hs1.is_zero()) {
    r.pass = true;
    return r;
  }
  auto cert = hs1_order(s.ideal, s.cert, hs1);
  if (!cert && hs1.num_gens() <= 20) {
    cert = find_admissible_order(hs1);
  }
  r.pass = cert.has_value();
  if (!r.pass) r.detail = "HS_1 without linear quotients: " + hs1.str();
  return r;
}

InstanceReport check_t26(uint64_t seed) {
  InstanceReport r;
  r.seed = seed;
  r.family = "cochordal-reversible";
  auto sample = sample_cochordal_reversible(seed);
  if (!sample) {
    r.capped = true;
    r.detail = "sampler exhausted";
    return r;
  }
  const SimpleGraph& G = sample->graph;
  r.n = G.n();
  MonomialIdeal I = edge_ideal(G);
  r.m = I.num_gens();
  BettiTable table = multigraded_betti(I);
  VariableOrder fwd{sample->reversible_peo};
  VariableOrder bwd{std::vector<int>(fwd.perm.rbegin(), fwd.perm.rend())};
  for (int k = 0; k <= table.projective_dimension(); ++k) {
    MonomialIdeal hs = hs_edge_ideal(G, sample->reversible_peo, k);
    if (!(hs == hs_betti(I, k, table))) {
      r.detail = "HS_" + std::to_string(k) + " route mismatch";
      return r;
    }
    for (const VariableOrder* ord : {&fwd, &bwd}) {
      auto order = lex_descending_order(hs, *ord);
      auto res = is_admissible(hs, order);
      if (const auto* f = std::get_if<FailureWitness>(&res)) {
        const Monomial& at = hs.gens()[order[f->position]];
        const Monomial& by = hs.gens()[order[f->offender]];
        std::ostringstream os;
        os << "HS_" << k << " not admissible under "
           << (ord == &fwd ? "PEO" : "reversed PEO") << " lex order; graph edges";
        for (auto [a, b] : G.edges()) os << " " << a << "-" << b;
        os << "; peo";
        for (int v : sample->reversible_peo) os << " " << v;
        os << "; HS_" << k << " = " << hs.str() << "; colon (" << by.str() << ") : "
           << at.str() << " = " << colon_quotient(by, at).str();
        r.detail = os.str();
        return r;
      }
    }
  }
  r.pass = true;
  return r;
}

InstanceReport check_gamma_hlq(uint64_t seed, const SimpleGraph& gamma,
                               const std::string& family) {
  InstanceReport r;
  r.seed = seed;
  r.family = family;
  r.n = gamma.n();
  MonomialIdeal I = edge_ideal(gamma.complement());
  r.m = I.num_gens();
  BettiTable table = multigraded_betti(I);
  for (int k = 0; k <= table.projective_dimension(); ++k) {
    MonomialIdeal hs = hs_betti(I, k, table);
    if (!verified_hlq_certificate(gamma, k, hs)) {
      r.detail = "no admissible order certified for HS_" + std::to_string(k);
      return r;
    }
  }
  r.pass = true;
  return r;
}

InstanceReport check_t31(uint64_t seed) {
  std::mt19937_64 rng(seed);
  int n = 2 + static_cast<int>(rng() % 7);  // up to 8 vertices
  SimpleGraph forest = random_forest(n, rng());
  return check_gamma_hlq(seed, forest, "forest");
}

InstanceReport check_c36(uint64_t seed) {
  std::mt19937_64 rng(seed);
  int n = 3 + static_cast<int>(rng() % 6);  // up to 8 vertices
  std::vector<int> parts;
  int left = n;
  while (left > 0) {
    int p = 1 + static_cast<int>(rng() % static_cast<uint64_t>(left));
    parts.push_back(p);
    left -= p;
  }
  if (parts.size() < 2) {
    parts.back() -= 1;
    parts.push_back(1);
  }
  SimpleGraph G = complete_multipartite(parts);
  return check_gamma_hlq(seed, G.complement(), "multipartite-complement");
}

InstanceReport check_t47(uint64_t seed) {
  InstanceReport r;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  int n = 3 + static_cast<int>(rng() % 5);  // up to 7
  SampledIdeal s = sample_degree2_polymatroidal(n, rng());
  r.family = s.family;
  r.n = n;
  r.m = s.ideal.num_gens();
  if (!check_dual_exchange(s.ideal).ok) {
    r.detail = "dual exchange fails on a polymatroidal instance";
    return r;
  }
  BettiTable table = multigraded_betti(s.ideal);
  for (int k = 0; k <= table.projective_dimension(); ++k) {
    MonomialIdeal oracle = hs_betti(s.ideal, k, table);
    auto poly = is_polymatroidal(oracle);
    if (!poly.ok) {
      r.detail = "HS_" + std::to_string(k) + " not polymatroidal: " + oracle.str();
      return r;
    }
    if (!(hs_degree2(s.ideal, k) == oracle)) {
      r.detail = "HS_" + std::to_string(k) + " decomposition route mismatch";
      return r;
    }
  }
  r.pass = true;
  return r;
}

// Open question: does HS_1 of an ideal with linear resolution have linear
// resolution? Searches for counterexamples only.
InstanceReport check_q_linres_hs1(uint64_t seed) {
  InstanceReport r;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  MonomialIdeal I(0);
  if (rng() % 2 == 0) {
    I = sample_lq_ideal(rng(), 4, 3, 8).ideal;
    r.family = "lq";
  } else {
    r.family = "linres-filtered";
    auto pool = monomials_of_degree(2 + rng() % 3, 2 + rng() % 2);
    bool found = false;
    for (int attempt = 0; attempt < 200 && !found; ++attempt) {
      std::vector<Monomial> gens;
      for (const Monomial& g : pool) {
        if (rng() % 3 == 0) gens.push_back(g);
      }
      if (gens.empty()) continue;
      MonomialIdeal cand(pool.front().vars(), gens);
      if (has_linear_resolution(cand)) {
        I = cand;
        found = true;
      }
    }
    if (!found) {
      I = sample_lq_ideal(rng(), 4, 3, 8).ideal;
      r.family = "lq-fallback";
    }
  }
  r.n = I.vars();
  r.m = I.num_gens();
  MonomialIdeal hs1 = hs_betti(I, 1);
  r.pass = has_linear_resolution(hs1);
  if (!r.pass) {
    r.detail = "counterexample candidate: I=" + I.str() + " HS_1=" + hs1.str();
  }
  return r;
}

// Open conjecture for polymatroidal ideals of degree >= 3: fuzzed only.
InstanceReport check_q_poly_d3(uint64_t seed) {
  InstanceReport r;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  int n = 3 + static_cast<int>(rng() % 3);  // up to 5
  SampledIdeal s = sample_polymatroidal(n, 3, rng());
  r.family = s.family;
  r.n = n;
  r.m = s.ideal.num_gens();
  BettiTable table = multigraded_betti(s.ideal);
  for (int k = 0; k <= table.projective_dimension(); ++k) {
    auto poly = is_polymatroidal(hs_betti(s.ideal, k, table));
    if (!poly.ok) {
      r.detail = "counterexample candidate: I=" + s.ideal.str() + " at k=" +
                 std::to_string(k);
      return r;
    }
  }
  r.pass = true;
  return r;
}

}  // namespace

CampaignReport run_campaign(const std::string& theorem_id, int count, uint64_t seed,
                            int parallelism) {
  InstanceFn fn;
  if (theorem_id == "T1.3") {
    fn = check_t13;
  } else if (theorem_id == "T2.6") {
    fn = check_t26;
  } else if (theorem_id == "T3.1") {
    fn = check_t31;
  } else if (theorem_id == "C3.6") {
    fn = check_c36;
  } else if (theorem_id == "T4.7") {
    fn = check_t47;
  } else if (theorem_id == "Q-linres-HS1") {
    fn = check_q_linres_hs1;
  } else if (theorem_id == "Q-polymatroidal-d3") {
    fn = check_q_poly_d3;
  } else {
    throw std::invalid_argument("unknown theorem id: " + theorem_id);
  }

  CampaignReport report;
  report.id = theorem_id;
  report.seed = seed;
  report.instances.resize(count);

  int workers = std::max(1, parallelism);
  if (workers == 1) {
    for (int i = 0; i < count; ++i) {
      report.instances[i] = fn(derive_seed(seed, i));
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        int i;
        while ((i = next.fetch_add(1)) < count) {
          report.instances[i] = fn(derive_seed(seed, i));
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  return report;
}

}  // namespace homshift
