#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "homshift/monomial.hpp"

namespace homshift {

// An admissible order of G(I): a permutation `order` of generator indices
// (0-based into I.gens()) such that every colon ideal
// (u_1,...,u_{i-1}) : u_i is generated by variables. sets[i] holds the
// variable indices (1-based) generating that colon ideal.
struct AdmissibleOrderCertificate {
  std::vector<int> order;
  std::vector<std::vector<int>> sets;
};

// Position i (into the tested order) where the colon condition fails, with the
// earlier position j whose colon is not dominated by any variable colon.
struct FailureWitness {
  int position;
  int offender;
};

using AdmissibleResult = std::variant<AdmissibleOrderCertificate, FailureWitness>;

struct LinQuotOptions {
  int generator_cap = 20;
  // Restrict the search to non-increasing degree orders. Safe for any input
  // (an LQ ideal always has such an order); disable for differential testing.
  bool degree_pruning = true;
};

// Checks one ordering of G(I) against the colon condition.
// `order` is a permutation of {0,...,m-1}.
AdmissibleResult is_admissible(const MonomialIdeal& I, const std::vector<int>& order);

// Subset-DP search over generator sets; returns a certificate iff I has
// linear quotients. Throws ResourceCapError above opts.generator_cap.
std::optional<AdmissibleOrderCertificate> find_admissible_order(
    const MonomialIdeal& I, const LinQuotOptions& opts = {});

bool has_linear_quotients(const MonomialIdeal& I, const LinQuotOptions& opts = {});

// set(u_i) of the certificate, recomputed from the definition.
std::vector<int> set_of(const MonomialIdeal& I, const AdmissibleOrderCertificate& cert,
                        int i);

// HS_k via the admissible-order formula: minimalize of
// { u_i * x_A : A subset of set(u_i), |A| = k }.
MonomialIdeal hs_linquot(const MonomialIdeal& I, const AdmissibleOrderCertificate& cert,
                         int k);

struct VariableColonCheck {
  bool ok;
  int offender = -1;       // generator index j whose colon fails, if !ok
  Monomial colon;          // u_j : u_i for that offender
};

// Whether (G(I) minus u_i) : u_i is generated by variables.
VariableColonCheck colon_all_others_is_variable_generated(const MonomialIdeal& I, int i);

// Generator indices of I sorted descending in the lex order induced by ord.
std::vector<int> lex_descending_order(const MonomialIdeal& I, const VariableOrder& ord);

// Constructive admissible order for HS_1 of an equigenerated LQ ideal,
// assembled from an admissible order of I and verified before return.
// Returns nullopt only if verification fails.
std::optional<AdmissibleOrderCertificate> hs1_order(
    const MonomialIdeal& I, const AdmissibleOrderCertificate& cert,
    const MonomialIdeal& hs1);

// Structured text serialization of a certificate (order + sets).
std::string format_certificate(const MonomialIdeal& I,
                               const AdmissibleOrderCertificate& cert);

}  // namespace homshift
