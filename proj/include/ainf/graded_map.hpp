#pragma once

// Graded linear maps A^{(x)k_in} -> A^{(x)k_out} defined by a rule on basis
// words, together with the operations used to build structure-relation
// composites: 1^{(x)i} (x) f (x) 1^{(x)j}, composition, tensor products of
// maps, and the factor shuffle sigma_{n,2}.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>

#include "ainf/tensor.hpp"

namespace ainf {

/// Koszul sign of rearranging graded factors. `permutation[k]` is the input
/// index placed at output position k. Returns +1 or -1.
int koszul_sign(std::span<const std::int64_t> degrees, std::span<const std::size_t> permutation);

/// Output-position -> input-index permutation of sigma_{n,2}:
/// a1..an | b1..bn  ->  a1 b1 | a2 b2 | ... | an bn.
std::vector<std::size_t> sigma_n2_permutation(std::size_t n);

/// sigma_{n,2} on a single word of length 2n; returns (sign, shuffled word).
std::pair<int, TensorWord> sigma_n2_word(const Grading& grading, const TensorWord& w);

/// sigma_{n,2} extended linearly. Throws std::invalid_argument on odd length.
Element sigma_n2(const Grading& grading, const Element& x);

class GradedMap {
 public:
  using Rule = std::function<Element(const TensorWord&)>;

  GradedMap(std::string name, Grading grading, std::size_t arity_in, std::size_t arity_out,
            std::int64_t degree, Rule rule, bool memoize = false);

  const std::string& name() const { return name_; }
  const Grading& grading() const { return grading_; }
  Prime prime() const { return grading_.prime(); }
  std::size_t arity_in() const { return arity_in_; }
  std::size_t arity_out() const { return arity_out_; }
  std::int64_t degree() const { return degree_; }

  /// Evaluates on a basis word; checks arity and degree of every output term.
  Element operator()(const TensorWord& w) const;
  Element operator()(const Element& x) const;
  Element operator()(BasisElt x) const { return (*this)(TensorWord{x}); }

  GradedMap renamed(std::string name) const;

 private:
  struct Memo;

  std::string name_;
  Grading grading_;
  std::size_t arity_in_;
  std::size_t arity_out_;
  std::int64_t degree_;
  std::shared_ptr<const Rule> rule_;
  std::shared_ptr<Memo> memo_;
};

GradedMap identity_map(const Grading& grading, std::size_t arity);
GradedMap zero_map(const Grading& grading, std::size_t arity_in, std::size_t arity_out,
                   std::int64_t degree);

/// f_{i,j} = 1^{(x)i} (x) f (x) 1^{(x)j}, with Koszul sign
/// (-1)^{|f| * (degree of the first i factors)}.
GradedMap extend(const GradedMap& f, std::size_t i, std::size_t j);

/// g o f. Throws std::invalid_argument unless arity_out(f) == arity_in(g).
GradedMap compose(const GradedMap& g, const GradedMap& f, bool memoize = false);

/// f (x) h with (f (x) h)(x (x) y) = (-1)^{|h||x|} f(x) (x) h(y).
GradedMap tensor(const GradedMap& f, const GradedMap& h);

/// f (x) f (x) ... (x) f, n copies.
GradedMap tensor_power(const GradedMap& f, std::size_t n);

/// sigma_{n,2} as a degree-zero map A^{(x)2n} -> A^{(x)2n}.
GradedMap sigma_map(const Grading& grading, std::size_t n);

}  // namespace ainf
