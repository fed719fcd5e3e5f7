#include "ainf/cobar.hpp"

#include <stdexcept>

namespace ainf {

void AinfFamily::set(GradedMap psi) {
  const std::size_t k = psi.arity_out();
  if (psi.arity_in() != 1) throw std::invalid_argument("psi must have arity 1 -> k");
  if (k < 2) throw std::invalid_argument("psi^1 is zero in this setting; k must be >= 2");
  if (psi.degree() != static_cast<std::int64_t>(k) - 2)
    throw std::invalid_argument("psi^k must have degree k-2");
  if (!(psi.grading() == grading_)) throw std::invalid_argument("psi grading mismatch");
  ops_.insert_or_assign(k, std::move(psi));
}

const GradedMap* AinfFamily::find(std::size_t k) const {
  auto it = ops_.find(k);
  return it == ops_.end() ? nullptr : &it->second;
}

void accumulate(CobarChain& into, const Element& x) {
  if (x.is_zero()) return;
  auto it = into.find(x.tensor_length());
  if (it == into.end()) {
    into.emplace(x.tensor_length(), x);
    return;
  }
  it->second += x;
  if (it->second.is_zero()) into.erase(it);
}

void accumulate(CobarChain& into, const CobarChain& x) {
  for (const auto& [len, e] : x) accumulate(into, e);
}

bool is_zero(const CobarChain& x) {
  for (const auto& [len, e] : x)
    if (!e.is_zero()) return false;
  return true;
}

Element desuspend(const Grading& grading, const Element& x) {
  const auto p = x.prime();
  const std::size_t n = x.tensor_length();
  Element out(n, p);
  for (const auto& [w, c] : x) {
    std::int64_t parity = 0;
    for (std::size_t b = 0; b < n; ++b) parity += static_cast<std::int64_t>(n - 1 - b) * grading.degree(w[b]);
    out.add_term(w, parity % 2 != 0 ? neg_mod(c, p) : c);
  }
  return out;
}

CobarChain cobar_differential(const AinfFamily& family, const TensorWord& word,
                              std::size_t cutoff) {
  const auto& grading = family.grading();
  const auto p = grading.prime();
  CobarChain out;
  // Degree of a desuspended letter is |x| - 1; d has odd degree, so passing
  // the prefix contributes (-1)^{sum over prefix of (|x_l| - 1)}.
  std::int64_t prefix_parity = 0;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    for (const auto& [k, psi] : family.operations()) {
      const std::size_t len = word.size() - 1 + k;
      if (len > cutoff) continue;
      Element image = desuspend(grading, psi(word[pos]));
      if (image.is_zero()) continue;
      Element piece(len, p);
      const bool flip = prefix_parity % 2 != 0;
      for (const auto& [u, c] : image) {
        TensorWord full;
        full.reserve(len);
        full.insert(full.end(), word.begin(), word.begin() + pos);
        full.insert(full.end(), u.begin(), u.end());
        full.insert(full.end(), word.begin() + pos + 1, word.end());
        piece.add_term(std::move(full), flip ? neg_mod(c, p) : c);
      }
      accumulate(out, piece);
    }
    prefix_parity += grading.degree(word[pos]) - 1;
  }
  return out;
}

CobarChain cobar_differential(const AinfFamily& family, const CobarChain& x, std::size_t cutoff) {
  CobarChain out;
  for (const auto& [len, e] : x)
    for (const auto& [w, c] : e)
      for (const auto& [l, piece] : cobar_differential(family, w, cutoff))
        accumulate(out, piece.scaled(c));
  return out;
}

CobarChain cobar_square(const AinfFamily& family, const TensorWord& word, std::size_t cutoff) {
  return cobar_differential(family, cobar_differential(family, word, cutoff), cutoff);
}

}  // namespace ainf
