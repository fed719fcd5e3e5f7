#include "ainf/graded_map.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace ainf {

int koszul_sign(std::span<const std::int64_t> degrees, std::span<const std::size_t> permutation) {
  const std::size_t n = permutation.size();
  if (degrees.size() != n) throw std::invalid_argument("koszul_sign: size mismatch");
  // position[input] = output slot
  std::vector<std::size_t> position(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (permutation[k] >= n || position[permutation[k]] != n)
      throw std::invalid_argument("koszul_sign: not a permutation");
    position[permutation[k]] = k;
  }
  int parity = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (degrees[a] % 2 == 0) continue;
    for (std::size_t b = a + 1; b < n; ++b)
      if (position[a] > position[b] && degrees[b] % 2 != 0) parity ^= 1;
  }
  return parity ? -1 : 1;
}

std::vector<std::size_t> sigma_n2_permutation(std::size_t n) {
  std::vector<std::size_t> perm(2 * n);
  for (std::size_t t = 0; t < n; ++t) {
    perm[2 * t] = t;
    perm[2 * t + 1] = n + t;
  }
  return perm;
}

std::pair<int, TensorWord> sigma_n2_word(const Grading& grading, const TensorWord& w) {
  if (w.size() % 2 != 0)
    throw std::invalid_argument("sigma_n2: odd tensor length " + std::to_string(w.size()));
  const std::size_t n = w.size() / 2;
  const auto perm = sigma_n2_permutation(n);
  std::vector<std::int64_t> degrees(w.size());
  for (std::size_t t = 0; t < w.size(); ++t) degrees[t] = grading.degree(w[t]);
  TensorWord out(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out[k] = w[perm[k]];
  return {koszul_sign(degrees, perm), std::move(out)};
}

Element sigma_n2(const Grading& grading, const Element& x) {
  if (x.tensor_length() % 2 != 0)
    throw std::invalid_argument("sigma_n2: odd tensor length " + std::to_string(x.tensor_length()));
  const auto p = x.prime();
  Element out(x.tensor_length(), p);
  for (const auto& [w, c] : x) {
    auto [sign, shuffled] = sigma_n2_word(grading, w);
    out.add_term(std::move(shuffled), sign > 0 ? c : neg_mod(c, p));
  }
  return out;
}

struct GradedMap::Memo {
  std::shared_mutex mu;
  std::unordered_map<TensorWord, Element, TensorWordHash> table;
};

GradedMap::GradedMap(std::string name, Grading grading, std::size_t arity_in,
                     std::size_t arity_out, std::int64_t degree, Rule rule, bool memoize)
    : name_(std::move(name)),
      grading_(grading),
      arity_in_(arity_in),
      arity_out_(arity_out),
      degree_(degree),
      rule_(std::make_shared<const Rule>(std::move(rule))),
      memo_(memoize ? std::make_shared<Memo>() : nullptr) {}

Element GradedMap::operator()(const TensorWord& w) const {
  if (w.size() != arity_in_)
    throw std::invalid_argument(name_ + ": word length " + std::to_string(w.size()) +
                                " != arity " + std::to_string(arity_in_));
  if (memo_) {
    std::shared_lock lock(memo_->mu);
    auto it = memo_->table.find(w);
    if (it != memo_->table.end()) return it->second;
  }
  Element out = (*rule_)(w);
  if (out.tensor_length() != arity_out_ || out.prime() != prime())
    throw std::logic_error(name_ + ": rule produced element of wrong shape");
  const std::int64_t expected = word_degree(grading_, w) + degree_;
  for (const auto& [u, c] : out)
    if (word_degree(grading_, u) != expected)
      throw std::logic_error(name_ + ": term " + to_string(u) + " breaks degree " +
                             std::to_string(degree_));
  if (memo_) {
    std::unique_lock lock(memo_->mu);
    memo_->table.emplace(w, out);
  }
  return out;
}

Element GradedMap::operator()(const Element& x) const {
  if (x.prime() != prime()) throw ModulusMismatch(name_ + ": modulus mismatch");
  if (x.tensor_length() != arity_in_)
    throw std::invalid_argument(name_ + ": element length != arity");
  Element out(arity_out_, prime());
  const auto p = prime();
  for (const auto& [w, c] : x)
    for (const auto& [u, d] : (*this)(w)) out.add_term(u, mul_mod(c, d, p));
  return out;
}

GradedMap GradedMap::renamed(std::string name) const {
  GradedMap copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

GradedMap identity_map(const Grading& grading, std::size_t arity) {
  return GradedMap("1^" + std::to_string(arity), grading, arity, arity, 0,
                   [p = grading.prime()](const TensorWord& w) { return Element::word(w, p); });
}

GradedMap zero_map(const Grading& grading, std::size_t arity_in, std::size_t arity_out,
                   std::int64_t degree) {
  return GradedMap("0", grading, arity_in, arity_out, degree,
                   [p = grading.prime(), arity_out](const TensorWord&) {
                     return Element(arity_out, p);
                   });
}

GradedMap extend(const GradedMap& f, std::size_t i, std::size_t j) {
  if (i == 0 && j == 0) return f;
  const std::size_t in = i + f.arity_in() + j;
  const std::size_t out = i + f.arity_out() + j;
  const std::string name =
      f.name() + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
  return GradedMap(name, f.grading(), in, out, f.degree(), [f, i, out](const TensorWord& w) {
    const auto p = f.prime();
    const auto& grading = f.grading();
    std::int64_t prefix = 0;
    for (std::size_t t = 0; t < i; ++t) prefix += grading.degree(w[t]);
    const bool flip = (f.degree() % 2 != 0) && (prefix % 2 != 0);
    TensorWord middle(w.begin() + i, w.begin() + i + f.arity_in());
    Element image = f(middle);
    Element result(out, p);
    for (const auto& [u, c] : image) {
      TensorWord full;
      full.reserve(out);
      full.insert(full.end(), w.begin(), w.begin() + i);
      full.insert(full.end(), u.begin(), u.end());
      full.insert(full.end(), w.begin() + i + f.arity_in(), w.end());
      result.add_term(std::move(full), flip ? neg_mod(c, p) : c);
    }
    return result;
  });
}

GradedMap compose(const GradedMap& g, const GradedMap& f, bool memoize) {
  if (g.arity_in() != f.arity_out())
    throw std::invalid_argument("compose: arity mismatch (" + g.name() + " takes " +
                                std::to_string(g.arity_in()) + ", " + f.name() + " gives " +
                                std::to_string(f.arity_out()) + ")");
  if (!(g.grading() == f.grading())) throw std::invalid_argument("compose: grading mismatch");
  return GradedMap(g.name() + "*" + f.name(), f.grading(), f.arity_in(), g.arity_out(),
                   g.degree() + f.degree(), [g, f](const TensorWord& w) { return g(f(w)); },
                   memoize);
}

GradedMap tensor(const GradedMap& f, const GradedMap& h) {
  if (!(f.grading() == h.grading())) throw std::invalid_argument("tensor: grading mismatch");
  const std::size_t in = f.arity_in() + h.arity_in();
  const std::size_t out = f.arity_out() + h.arity_out();
  return GradedMap("(" + f.name() + "(x)" + h.name() + ")", f.grading(), in, out,
                   f.degree() + h.degree(), [f, h, out](const TensorWord& w) {
                     const auto& grading = f.grading();
                     TensorWord left(w.begin(), w.begin() + f.arity_in());
                     TensorWord right(w.begin() + f.arity_in(), w.end());
                     const bool flip =
                         (h.degree() % 2 != 0) && (word_degree(grading, left) % 2 != 0);
                     Element result = concat(f(left), h(right));
                     if (result.tensor_length() != out)
                       throw std::logic_error("tensor: unexpected output length");
                     return flip ? -result : result;
                   });
}

GradedMap tensor_power(const GradedMap& f, std::size_t n) {
  if (n == 0) throw std::invalid_argument("tensor_power: n must be >= 1");
  GradedMap acc = f;
  for (std::size_t t = 1; t < n; ++t) acc = tensor(acc, f);
  return acc.renamed(f.name() + "^(x)" + std::to_string(n));
}

GradedMap sigma_map(const Grading& grading, std::size_t n) {
  return GradedMap("sigma_{" + std::to_string(n) + ",2}", grading, 2 * n, 2 * n, 0,
                   [grading](const TensorWord& w) {
                     auto [sign, shuffled] = sigma_n2_word(grading, w);
                     const auto p = grading.prime();
                     return Element::word(std::move(shuffled), p, sign > 0 ? 1 : p - 1);
                   });
}

}  // namespace ainf
