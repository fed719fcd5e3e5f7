#pragma once

// The binomial identity behind Hopf compatibility:
//   C(z_1+..+z_n+1, i) = sum_{s_1+..+s_n=i-1} prod C(z_t, s_t)
//                      + sum_{t_1+..+t_n=i}   prod C(z_t, t_t)
// over the naturals or reduced mod p, and the iterated Vandermonde expansion
// C(z_1+..+z_n, i) = sum_{t_1+..+t_n=i} prod C(z_t, t_t).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ainf/prime_field.hpp"

namespace ainf {

struct LemmaResult {
  std::uint64_t lhs;
  std::uint64_t rhs;
  bool equal() const { return lhs == rhs; }
};

/// Evaluates both sides by enumerating weak compositions. With `modulus`
/// unset the arithmetic is exact over the naturals (std::overflow_error past
/// 64 bits); otherwise every binomial and sum is reduced mod p.
LemmaResult lemma_comb(std::span<const std::uint64_t> z, std::uint64_t i,
                       std::optional<Prime> modulus = std::nullopt);

/// Right side of the Vandermonde expansion computed by iterated convolution
/// of binomial rows, compared against C(z_1+..+z_n, i) mod p.
bool vandermonde_expansion_check(std::span<const std::uint64_t> z, std::uint64_t i, Prime p);

struct LemmaCase {
  std::vector<std::uint64_t> z;
  std::uint64_t i;
  LemmaResult result;
};

struct LemmaSweep {
  Prime p;
  std::uint64_t seed;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::vector<LemmaCase> failures;  // first few
};

/// Seeded sweep over random tuples of length p (entries in [0, p]) and
/// i in [0, z_1+..+z_p+2], reduced mod p.
LemmaSweep lemma_sweep(Prime p, std::size_t trials, std::uint64_t seed);

}  // namespace ainf
