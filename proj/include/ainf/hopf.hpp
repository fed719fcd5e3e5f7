#pragma once

// The Hopf A-infinity coalgebra A = E(v, 2m+1) (x) Gamma(w, 2mp+2) over Z_p:
// product mu, coproduct Delta_2, the degree p-2 operation Delta_p, and the
// iterated coproducts f^n, g^n.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ainf/cobar.hpp"
#include "ainf/graded_map.hpp"

namespace ainf {

struct StructureParams {
  Prime p;
  std::uint32_t m;

  StructureParams(Prime prime, std::uint32_t m_);

  std::int64_t v_degree() const { return 2 * std::int64_t{m} + 1; }
  std::int64_t w_degree() const { return 2 * std::int64_t{m} * p.value() + 2; }
};

// Formula-level operations, independent of any corruption.
Element mul(const Grading& grading, BasisElt x, BasisElt y);
Element delta2(Prime p, BasisElt x);
Element delta_p(Prime p, BasisElt x);

/// A single-coefficient corruption: the coefficient of `word` in
/// target(input) is shifted by `shift` (mod p). Used for mutation testing.
struct Corruption {
  enum class Target { delta2, delta_p };
  Target target;
  BasisElt input;
  TensorWord word;
  std::uint32_t shift;
};

class HopfStructure {
 public:
  explicit HopfStructure(StructureParams params, std::vector<Corruption> corruptions = {});

  const StructureParams& params() const { return params_; }
  const Grading& grading() const { return grading_; }
  Prime prime() const { return params_.p; }
  const std::vector<Corruption>& corruptions() const { return corruptions_; }

  const GradedMap& mu() const { return mu_; }
  const GradedMap& delta2() const { return delta2_; }
  const GradedMap& delta_p() const { return delta_p_; }

  /// f^n = (Delta (x) 1^{n-2}) ... (Delta (x) 1) Delta. Throws for n < 2.
  const GradedMap& f(std::size_t n) const;
  /// g^n = (1^{n-2} (x) Delta) ... (1 (x) Delta) Delta. Throws for n < 2.
  const GradedMap& g(std::size_t n) const;

  /// {psi^2 = Delta_2, psi^p = Delta_p}.
  AinfFamily family() const;

 private:
  struct IteratedCache {
    std::mutex mu;
    std::map<std::size_t, std::unique_ptr<GradedMap>> f, g;
  };

  StructureParams params_;
  Grading grading_;
  std::vector<Corruption> corruptions_;
  GradedMap mu_;
  GradedMap delta2_;
  GradedMap delta_p_;
  std::shared_ptr<IteratedCache> cache_;
};

/// Factor parameters of H_*(K(Z,3); Z_p): m = p^i for i = 0..count-1.
std::vector<StructureParams> em_factors_n3(Prime p, std::size_t count);

}  // namespace ainf
