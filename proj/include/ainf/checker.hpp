#pragma once

// Verification engines: A-infinity structure relations, the cobar d o d
// oracle, (f,g)-derivations, the Hopf compatibility of Delta_p with mu, the
// Hopf algebra axioms, and the aggregate certificate.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ainf/cobar.hpp"
#include "ainf/hopf.hpp"

namespace ainf {

struct Witness {
  TensorWord input;
  Element residual;
  std::string note;
};

struct RelationReport {
  std::string relation_id;
  std::size_t inputs_checked = 0;
  std::size_t failures = 0;
  std::size_t max_residual_terms = 0;
  std::vector<Witness> witnesses;  // first few failures, in input order

  bool pass() const { return witnesses.empty(); }
  void record(Witness w);

  static constexpr std::size_t kMaxWitnesses = 8;
};

/// Runtime knobs shared by the sweeps. `threads` = 0 means hardware concurrency.
struct SweepOptions {
  std::uint32_t max_j = 12;
  std::size_t threads = 1;
};

/// Default gamma-index bound: 12 for p = 3, 10 for p = 5, 8 for p = 7, 6 above.
std::uint32_t default_max_j(Prime p);

/// R_n(x) = sum_{i,j} (-1)^{j(n+i+1)} psi^{j+1}_{i,n-i-j-1} psi^{n-j}(x).
Element ainf_residual(const AinfFamily& family, std::size_t n, BasisElt x);

/// Lengths n <= max_n for which some composite psi^a, psi^b exists (a+b-1 = n).
std::vector<std::size_t> nonvacuous_relations(const AinfFamily& family, std::size_t max_n);

RelationReport ainf_relation(const AinfFamily& family, std::size_t n, const SweepOptions& opts);

/// Compares d o d on the cobar words of length <= max_length (gamma-index sum
/// <= max_j) against the relation residuals, term by term: the length-n part
/// of d d [x] must equal (-1)^{n+1} desusp^{(x)n} R_n(x), and d d is extended
/// to longer words as an even derivation.
RelationReport cobar_agreement(const AinfFamily& family, std::size_t max_length,
                               const SweepOptions& opts);

/// Checks d o d = 0 on cobar words of length <= max_length.
RelationReport cobar_dd_zero(const AinfFamily& family, std::size_t max_length,
                             const SweepOptions& opts);

/// h mu = mu^{(x)n} sigma_{n,2} (f (x) h + h (x) g) on all basis pairs with
/// gamma-index sum <= max_j. Throws std::invalid_argument on arity mismatch.
RelationReport fg_derivation_check(const GradedMap& h, const GradedMap& f, const GradedMap& g,
                                   const GradedMap& mu, const SweepOptions& opts,
                                   std::string relation_id = "fg_derivation");

/// Delta_p mu = mu^{(x)p} sigma_{p,2}(f^p (x) Delta_p + Delta_p (x) f^p), plus
/// the structural facts of the proof: both sides vanish on inputs involving v,
/// sigma signs are +1 on gamma_i (x) gamma_j, and the left side has coefficient
/// C(z_1+...+z_p+1, i) on v gamma_{z_1} | ... | v gamma_{z_p}.
RelationReport hopf_compat(const HopfStructure& s, const SweepOptions& opts);

struct HopfAxiomReports {
  RelationReport mu_unit;
  RelationReport mu_assoc;
  RelationReport delta2_coassoc;
  RelationReport counit;
  RelationReport algebra_map;
};
HopfAxiomReports hopf_axioms(const HopfStructure& s, const SweepOptions& opts);

struct Certificate {
  StructureParams params;
  std::uint32_t max_j;
  std::vector<RelationReport> reports;

  bool pass() const;
};

/// Hopf axioms, the A-infinity relations for n in {3, p+1, 2p-1}, the
/// vacuous-relation scan, the cobar oracle, and the Hopf compatibility of
/// Delta_p with mu.
Certificate certify_hopf_ainf(const HopfStructure& s, const SweepOptions& opts);

}  // namespace ainf
