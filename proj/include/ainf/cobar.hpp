#pragma once

// A-infinity coalgebra operation families and the cobar differential on the
// tensor algebra T(desusp A). Desuspension is not stored as data: a cobar
// letter is a basis element whose degree is taken to be one lower, and the
// resulting Koszul signs are applied when maps pass suspended letters.

#include <cstddef>
#include <map>

#include "ainf/graded_map.hpp"

namespace ainf {

/// A family {psi^k : A -> A^{(x)k}} of degree k-2 operations. Absent k means
/// psi^k = 0; psi^1 must be absent (zero differential).
class AinfFamily {
 public:
  explicit AinfFamily(Grading grading) : grading_(grading) {}

  /// Adds psi^k. Throws on arity/degree mismatch or k < 2.
  void set(GradedMap psi);

  const Grading& grading() const { return grading_; }
  const std::map<std::size_t, GradedMap>& operations() const { return ops_; }
  const GradedMap* find(std::size_t k) const;

 private:
  Grading grading_;
  std::map<std::size_t, GradedMap> ops_;
};

/// Elements of T(desusp A) split by word length.
using CobarChain = std::map<std::size_t, Element>;

void accumulate(CobarChain& into, const Element& x);
void accumulate(CobarChain& into, const CobarChain& x);
bool is_zero(const CobarChain& x);

/// (desusp)^{(x)n} applied to an element of A^{(x)n}: the word y1|..|yn picks
/// up (-1)^{sum_b (n-b)|y_b|} (b counted from 1).
Element desuspend(const Grading& grading, const Element& x);

/// The cobar differential d = sum (desusp^{(x)k} psi^k susp)_{i,n-i-1} on one
/// word of cobar letters, extended as a derivation. Terms longer than
/// `cutoff` are dropped.
CobarChain cobar_differential(const AinfFamily& family, const TensorWord& word,
                              std::size_t cutoff);
CobarChain cobar_differential(const AinfFamily& family, const CobarChain& x, std::size_t cutoff);

/// d(d(word)), truncated at `cutoff`. Components of length <= cutoff are exact.
CobarChain cobar_square(const AinfFamily& family, const TensorWord& word, std::size_t cutoff);

}  // namespace ainf
