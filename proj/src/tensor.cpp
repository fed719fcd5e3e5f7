#include "ainf/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace ainf {

Grading::Grading(Prime p, std::uint32_t m) : p_(p), m_(m) {
  if (m == 0) throw std::invalid_argument("grading: m must be >= 1");
}

std::int64_t word_degree(const Grading& grading, const TensorWord& w) {
  std::int64_t d = 0;
  for (auto x : w) d += grading.degree(x);
  return d;
}

std::string to_string(BasisElt x) {
  if (x.is_unit()) return "1";
  std::string s;
  if (x.i == 1) s += "v";
  if (x.j > 0) s += "g" + std::to_string(x.j);
  return s;
}

std::string to_string(const TensorWord& w) {
  std::string s;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) s += "|";
    s += to_string(w[t]);
  }
  return s;
}

std::size_t TensorWordHash::operator()(const TensorWord& w) const noexcept {
  std::size_t h = w.size();
  for (auto x : w) {
    std::size_t k = (std::size_t{x.j} << 1) | x.i;
    h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<BasisElt> basis_up_to(std::uint32_t max_j) {
  std::vector<BasisElt> out;
  for (std::uint8_t i = 0; i <= 1; ++i)
    for (std::uint32_t j = 0; j <= max_j; ++j) out.push_back({i, j});
  return out;
}

Element Element::word(TensorWord w, Prime p, std::uint32_t coeff) {
  Element e(w.size(), p);
  e.add_term(std::move(w), coeff);
  return e;
}

FieldElt Element::coeff(const TensorWord& w) const {
  auto it = terms_.find(w);
  return FieldElt(it == terms_.end() ? 0 : it->second, p_);
}

void Element::add_term(const TensorWord& w, std::uint32_t c) { add_term(TensorWord(w), c); }

void Element::add_term(TensorWord&& w, std::uint32_t c) {
  if (w.size() != k_)
    throw std::invalid_argument("word " + to_string(w) + " has length " + std::to_string(w.size()) +
                                ", element expects " + std::to_string(k_));
  c %= p_.value();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second = add_mod(it->second, c, p_);
    if (it->second == 0) terms_.erase(it);
  }
}

void Element::add_term(const TensorWord& w, FieldElt c) {
  if (c.modulus() != p_) throw ModulusMismatch("coefficient modulus differs from element modulus");
  add_term(w, c.value());
}

void Element::require_compatible(const Element& rhs) const {
  if (rhs.p_ != p_) throw ModulusMismatch("element modulus mismatch");
  if (rhs.k_ != k_) throw std::invalid_argument("element tensor length mismatch");
}

Element& Element::operator+=(const Element& rhs) {
  require_compatible(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_compatible(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, neg_mod(c, p_));
  return *this;
}

Element Element::operator-() const { return scaled(p_.value() - 1); }

Element Element::scaled(std::uint32_t c) const {
  Element out(k_, p_);
  c %= p_.value();
  if (c == 0) return out;
  for (const auto& [w, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), w, mul_mod(a, c, p_));
  return out;
}

Element Element::scaled(FieldElt c) const {
  if (c.modulus() != p_) throw ModulusMismatch("scalar modulus differs from element modulus");
  return scaled(c.value());
}

Element concat(const Element& a, const Element& b) {
  if (a.prime() != b.prime()) throw ModulusMismatch("concat: modulus mismatch");
  const auto p = a.prime();
  Element out(a.tensor_length() + b.tensor_length(), p);
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      TensorWord w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(std::move(w), mul_mod(ca, cb, p));
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Element& x) {
  if (x.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [w, c] : x) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c << "*";
    os << to_string(w);
  }
  return os;
}

}  // namespace ainf
