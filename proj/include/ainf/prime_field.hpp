#pragma once

// Exact arithmetic in Z_p for an odd prime p, plus binomial coefficients
// reduced mod p.

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace ainf {

/// Raised when two residues with different moduli are combined.
class ModulusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An odd prime modulus. Validated by trial division at construction.
class Prime {
 public:
  explicit Prime(std::uint32_t value);

  std::uint32_t value() const noexcept { return value_; }
  operator std::uint32_t() const noexcept { return value_; }

  friend bool operator==(Prime, Prime) = default;

  static bool is_odd_prime(std::uint64_t candidate) noexcept;

 private:
  std::uint32_t value_;
};

/// A residue class in Z_p. Immutable value type.
class FieldElt {
 public:
  FieldElt(std::int64_t value, Prime modulus);

  std::uint32_t value() const noexcept { return value_; }
  Prime modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElt operator+(FieldElt rhs) const;
  FieldElt operator-(FieldElt rhs) const;
  FieldElt operator*(FieldElt rhs) const;
  FieldElt operator-() const;
  FieldElt& operator+=(FieldElt rhs) { return *this = *this + rhs; }
  FieldElt& operator-=(FieldElt rhs) { return *this = *this - rhs; }
  FieldElt& operator*=(FieldElt rhs) { return *this = *this * rhs; }

  friend bool operator==(const FieldElt&, const FieldElt&) = default;

 private:
  void require_same_modulus(FieldElt rhs) const;

  std::uint32_t value_;
  Prime modulus_;
};

std::ostream& operator<<(std::ostream& os, const FieldElt& x);

// Raw residue helpers used by the sparse containers, which store bare
// residues next to a single shared modulus.
inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}
inline std::uint32_t reduce_signed(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

/// C(n, k) mod p via Pascal's triangle, reducing at every step. Zero for k > n.
/// Rows are cached per prime; safe to call concurrently.
FieldElt binom_mod_p(std::uint64_t n, std::uint64_t k, Prime p);
std::uint32_t binom_residue(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// Exact C(n, k) over the naturals. Throws std::overflow_error past 64 bits.
std::uint64_t binom_exact(std::uint64_t n, std::uint64_t k);

/// C(r+s, k) == sum_i C(r, i) C(s, k-i) mod p. Requires k <= r + s.
bool vandermonde_check(std::uint64_t r, std::uint64_t s, std::uint64_t k, Prime p);

}  // namespace ainf
