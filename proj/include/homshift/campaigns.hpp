#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homshift/graph.hpp"
#include "homshift/linquot.hpp"
#include "homshift/monomial.hpp"

namespace homshift {

// Splittable per-instance seed stream: instance i of a campaign derives its
// seed from (campaign seed, i) only, so results are independent of the
// evaluation order.
uint64_t derive_seed(uint64_t campaign_seed, uint64_t index);

struct LqSample {
  MonomialIdeal ideal;
  AdmissibleOrderCertificate cert;  // construction order, admissible
};

// A random equigenerated ideal with linear quotients, grown one generator at
// a time along an admissible order.
LqSample sample_lq_ideal(uint64_t seed, int max_vars = 5, int max_degree = 4,
                         int max_gens = 10);

struct CochordalSample {
  SimpleGraph graph;           // G, with G^c chordal
  std::vector<int> reversible_peo;  // of G^c
};

std::optional<CochordalSample> sample_cochordal_reversible(uint64_t seed,
                                                           int max_vertices = 8);

struct InstanceReport {
  uint64_t seed = 0;
  std::string family;
  int n = 0;
  int m = 0;
  bool pass = false;
  bool capped = false;
  std::string detail;
};

struct CampaignReport {
  std::string id;
  uint64_t seed = 0;
  std::vector<InstanceReport> instances;

  int passed() const;
  int failed() const;
  int capped() const;
  // 0 all pass, 1 counterexample found, 3 resource-capped.
  int exit_code() const;
  std::string render(bool structured) const;
};

// theorem_id in {T1.3, T2.6, T3.1, C3.6, T4.7, Q-linres-HS1, Q-polymatroidal-d3}.
CampaignReport run_campaign(const std::string& theorem_id, int count, uint64_t seed,
                            int parallelism = 1);

}  // namespace homshift
