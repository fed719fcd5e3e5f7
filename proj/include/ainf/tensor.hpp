#pragma once

// Basis monomials v^i gamma_j of E(v, 2m+1) (x) Gamma(w, 2mp+2), tensor words
// over them, and sparse Z_p-linear combinations of words.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ainf/prime_field.hpp"

namespace ainf {

/// The monomial v^i gamma_j. (0, 0) is the unit.
struct BasisElt {
  std::uint8_t i = 0;
  std::uint32_t j = 0;

  static constexpr BasisElt unit() { return {0, 0}; }
  bool is_unit() const { return i == 0 && j == 0; }

  friend auto operator<=>(const BasisElt&, const BasisElt&) = default;
};

/// Degrees of the ambient algebra: |v| = 2m+1, |gamma_j| = j(2mp+2).
class Grading {
 public:
  Grading(Prime p, std::uint32_t m);

  Prime prime() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::int64_t v_degree() const { return 2 * std::int64_t{m_} + 1; }
  std::int64_t w_degree() const { return 2 * std::int64_t{m_} * p_.value() + 2; }
  std::int64_t degree(BasisElt x) const { return x.i * v_degree() + std::int64_t{x.j} * w_degree(); }

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  Prime p_;
  std::uint32_t m_;
};

using TensorWord = std::vector<BasisElt>;

std::int64_t word_degree(const Grading& grading, const TensorWord& w);
std::string to_string(BasisElt x);
std::string to_string(const TensorWord& w);

struct TensorWordHash {
  std::size_t operator()(const TensorWord& w) const noexcept;
};

/// Every basis element with j <= max_j, in canonical order.
std::vector<BasisElt> basis_up_to(std::uint32_t max_j);

/// A finite Z_p-linear combination of tensor words of one fixed length.
/// Zero coefficients are never stored; iteration is in canonical
/// (lexicographic on (i, j) pairs) order.
class Element {
 public:
  using Terms = std::map<TensorWord, std::uint32_t>;

  Element(std::size_t tensor_length, Prime p) : k_(tensor_length), p_(p) {}

  static Element word(TensorWord w, Prime p, std::uint32_t coeff = 1);

  std::size_t tensor_length() const { return k_; }
  Prime prime() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Terms::const_iterator begin() const { return terms_.begin(); }
  Terms::const_iterator end() const { return terms_.end(); }

  FieldElt coeff(const TensorWord& w) const;

  /// Adds c * w. Throws std::invalid_argument if w has the wrong length.
  void add_term(const TensorWord& w, std::uint32_t c);
  void add_term(TensorWord&& w, std::uint32_t c);
  void add_term(const TensorWord& w, FieldElt c);

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element operator+(const Element& rhs) const { return Element(*this) += rhs; }
  Element operator-(const Element& rhs) const { return Element(*this) -= rhs; }
  Element operator-() const;
  Element scaled(std::uint32_t c) const;
  Element scaled(FieldElt c) const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  void require_compatible(const Element& rhs) const;

  std::size_t k_;
  Prime p_;
  Terms terms_;
};

/// Tensor product of elements: (sum a_w w) (x) (sum b_u u) = sum a_w b_u w|u.
Element concat(const Element& a, const Element& b);

std::ostream& operator<<(std::ostream& os, const Element& x);

}  // namespace ainf
