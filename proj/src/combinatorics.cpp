#include "ainf/combinatorics.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

#include "ainf/compositions.hpp"

namespace ainf {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s;
  if (__builtin_add_overflow(a, b, &s)) throw std::overflow_error("lemma_comb: sum overflow");
  return s;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s;
  if (__builtin_mul_overflow(a, b, &s)) throw std::overflow_error("lemma_comb: product overflow");
  return s;
}

// sum over weak compositions t of `total` (t_k <= z_k) of prod C(z_k, t_k).
std::uint64_t product_sum(std::span<const std::uint64_t> z, std::uint64_t total,
                          const std::optional<Prime>& modulus) {
  const std::vector<std::uint64_t> bounds(z.begin(), z.end());
  std::uint64_t acc = 0;
  for_each_weak_composition(
      total, z.size(),
      [&](const std::vector<std::uint64_t>& t) {
        if (modulus) {
          const std::uint32_t p = modulus->value();
          std::uint32_t prod = 1 % p;
          for (std::size_t k = 0; k < t.size() && prod; ++k)
            prod = mul_mod(prod, binom_residue(z[k], t[k], p), p);
          acc = add_mod(static_cast<std::uint32_t>(acc), prod, p);
        } else {
          std::uint64_t prod = 1;
          for (std::size_t k = 0; k < t.size(); ++k) prod = checked_mul(prod, binom_exact(z[k], t[k]));
          acc = checked_add(acc, prod);
        }
      },
      &bounds);
  return acc;
}

}  // namespace

LemmaResult lemma_comb(std::span<const std::uint64_t> z, std::uint64_t i,
                       std::optional<Prime> modulus) {
  std::uint64_t sum = 0;
  for (auto v : z) sum = checked_add(sum, v);
  const std::uint64_t top = checked_add(sum, 1);
  LemmaResult r{};
  if (modulus) {
    r.lhs = binom_residue(top, i, modulus->value());
    const std::uint32_t p = modulus->value();
    const std::uint64_t first = i == 0 ? 0 : product_sum(z, i - 1, modulus);
    r.rhs = add_mod(static_cast<std::uint32_t>(first),
                    static_cast<std::uint32_t>(product_sum(z, i, modulus)), p);
  } else {
    r.lhs = binom_exact(top, i);
    const std::uint64_t first = i == 0 ? 0 : product_sum(z, i - 1, modulus);
    r.rhs = checked_add(first, product_sum(z, i, modulus));
  }
  return r;
}

bool vandermonde_expansion_check(std::span<const std::uint64_t> z, std::uint64_t i, Prime p) {
  // row[t] = C(z_1 + .. + z_k, t) after absorbing k factors, one Vandermonde
  // step per factor.
  std::vector<std::uint32_t> row(i + 1, 0);
  row[0] = 1;
  for (auto zk : z) {
    std::vector<std::uint32_t> next(i + 1, 0);
    for (std::uint64_t t = 0; t <= i; ++t) {
      if (row[t] == 0) continue;
      for (std::uint64_t s = 0; t + s <= i && s <= zk; ++s)
        next[t + s] = add_mod(next[t + s], mul_mod(row[t], binom_residue(zk, s, p), p), p);
    }
    row = std::move(next);
  }
  const std::uint64_t sum = std::accumulate(z.begin(), z.end(), std::uint64_t{0});
  return row[i] == binom_residue(sum, i, p);
}

LemmaSweep lemma_sweep(Prime p, std::size_t trials, std::uint64_t seed) {
  LemmaSweep sweep{p, seed, 0, 0, {}};
  std::mt19937_64 rng(seed);
  const std::uint64_t pv = p.value();
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<std::uint64_t> z(pv);
    std::uint64_t sum = 0;
    for (auto& v : z) {
      v = rng() % (pv + 1);
      sum += v;
    }
    const std::uint64_t i = rng() % (sum + 3);
    const LemmaResult r = lemma_comb(z, i, p);
    ++sweep.trials;
    if (r.equal())
      ++sweep.passed;
    else if (sweep.failures.size() < 8)
      sweep.failures.push_back({z, i, r});
  }
  return sweep;
}

}  // namespace ainf
