#pragma once

// Seeded generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "ainf/tensor.hpp"

namespace ainf::prop {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  std::int64_t signed_uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }

  BasisElt basis(std::uint32_t max_j) {
    return {static_cast<std::uint8_t>(uniform(0, 1)), static_cast<std::uint32_t>(uniform(0, max_j))};
  }
  TensorWord word(std::size_t length, std::uint32_t max_j) {
    TensorWord w;
    for (std::size_t t = 0; t < length; ++t) w.push_back(basis(max_j));
    return w;
  }
  Element element(std::size_t length, Prime p, std::size_t terms, std::uint32_t max_j) {
    Element x(length, p);
    for (std::size_t t = 0; t < terms; ++t)
      x.add_term(word(length, max_j), static_cast<std::uint32_t>(uniform(1, p.value() - 1)));
    return x;
  }
  std::vector<std::uint64_t> tuple(std::size_t length, std::uint64_t max_entry) {
    std::vector<std::uint64_t> z(length);
    for (auto& v : z) v = uniform(0, max_entry);
    return z;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ainf::prop
