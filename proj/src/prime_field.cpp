#include "ainf/prime_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace ainf {

namespace {

// Largest n for which Pascal rows are materialized.
constexpr std::uint64_t kMaxPascalRow = 2048;

class PascalTable {
 public:
  explicit PascalTable(std::uint32_t p) : p_(p) { rows_.push_back({1u % p}); }

  std::uint32_t get(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (n > kMaxPascalRow)
      throw std::out_of_range("binom_mod_p: n=" + std::to_string(n) + " exceeds Pascal table limit");
    {
      std::shared_lock lock(mu_);
      if (n < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mu_);
    while (rows_.size() <= n) {
      const auto& prev = rows_.back();
      std::vector<std::uint32_t> row(prev.size() + 1);
      row.front() = 1u % p_;
      row.back() = 1u % p_;
      for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = add_mod(prev[i - 1], prev[i], p_);
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::uint32_t p_;
  std::shared_mutex mu_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

PascalTable& table_for(std::uint32_t p) {
  static std::mutex registry_mu;
  static std::map<std::uint32_t, std::unique_ptr<PascalTable>> registry;
  thread_local std::uint32_t last_p = 0;
  thread_local PascalTable* last = nullptr;
  if (last_p == p) return *last;
  std::lock_guard lock(registry_mu);
  auto& slot = registry[p];
  if (!slot) slot = std::make_unique<PascalTable>(p);
  last_p = p;
  last = slot.get();
  return *last;
}

}  // namespace

bool Prime::is_odd_prime(std::uint64_t candidate) noexcept {
  if (candidate < 3 || candidate % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= candidate; d += 2)
    if (candidate % d == 0) return false;
  return true;
}

Prime::Prime(std::uint32_t value) : value_(value) {
  if (!is_odd_prime(value))
    throw std::invalid_argument("not an odd prime: " + std::to_string(value));
}

FieldElt::FieldElt(std::int64_t value, Prime modulus)
    : value_(reduce_signed(value, modulus.value())), modulus_(modulus) {}

void FieldElt::require_same_modulus(FieldElt rhs) const {
  if (modulus_ != rhs.modulus_)
    throw ModulusMismatch("modulus mismatch: " + std::to_string(modulus_.value()) + " vs " +
                          std::to_string(rhs.modulus_.value()));
}

FieldElt FieldElt::operator+(FieldElt rhs) const {
  require_same_modulus(rhs);
  return FieldElt(add_mod(value_, rhs.value_, modulus_), modulus_);
}

FieldElt FieldElt::operator-(FieldElt rhs) const {
  require_same_modulus(rhs);
  return FieldElt(add_mod(value_, neg_mod(rhs.value_, modulus_), modulus_), modulus_);
}

FieldElt FieldElt::operator*(FieldElt rhs) const {
  require_same_modulus(rhs);
  return FieldElt(mul_mod(value_, rhs.value_, modulus_), modulus_);
}

FieldElt FieldElt::operator-() const { return FieldElt(neg_mod(value_, modulus_), modulus_); }

std::ostream& operator<<(std::ostream& os, const FieldElt& x) {
  return os << x.value() << " (mod " << x.modulus().value() << ")";
}

std::uint32_t binom_residue(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  return table_for(p).get(n, k);
}

FieldElt binom_mod_p(std::uint64_t n, std::uint64_t k, Prime p) {
  return FieldElt(binom_residue(n, k, p.value()), p);
}

__extension__ using u128 = unsigned __int128;

std::uint64_t binom_exact(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    acc = acc * (n - k + i) / i;
    if (acc > static_cast<u128>(UINT64_MAX))
      throw std::overflow_error("binom_exact overflow");
  }
  return static_cast<std::uint64_t>(acc);
}

bool vandermonde_check(std::uint64_t r, std::uint64_t s, std::uint64_t k, Prime p) {
  if (k > r + s) throw std::invalid_argument("vandermonde_check: k > r + s");
  std::uint32_t rhs = 0;
  for (std::uint64_t i = 0; i <= k; ++i)
    rhs = add_mod(rhs, mul_mod(binom_residue(r, i, p), binom_residue(s, k - i, p), p), p);
  return rhs == binom_residue(r + s, k, p);
}

}  // namespace ainf
