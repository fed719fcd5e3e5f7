#include "ainf/hopf.hpp"

#include <stdexcept>
#include <string>

#include "ainf/compositions.hpp"

namespace ainf {

StructureParams::StructureParams(Prime prime, std::uint32_t m_) : p(prime), m(m_) {
  if (m_ == 0) throw std::invalid_argument("structure parameter m must be >= 1");
}

Element mul(const Grading& grading, BasisElt x, BasisElt y) {
  const auto p = grading.prime();
  Element out(1, p);
  // mu = (mu_E (x) mu_Gamma) sigma_{2,2}: v^{i2} passes gamma_{j1}.
  const bool flip = (std::int64_t{y.i} * grading.v_degree() % 2 != 0) &&
                    (std::int64_t{x.j} * grading.w_degree() % 2 != 0);
  if (x.i + y.i > 1) return out;  // v^2 = 0
  const std::uint32_t c = binom_residue(std::uint64_t{x.j} + y.j, x.j, p);
  out.add_term(TensorWord{BasisElt{static_cast<std::uint8_t>(x.i + y.i), x.j + y.j}},
               flip ? neg_mod(c, p) : c);
  return out;
}

Element delta2(Prime p, BasisElt x) {
  Element out(2, p);
  for (std::uint8_t k = 0; k <= x.i; ++k)
    for (std::uint32_t l = 0; l <= x.j; ++l)
      out.add_term(TensorWord{BasisElt{k, l}, BasisElt{static_cast<std::uint8_t>(x.i - k), x.j - l}}, 1);
  return out;
}

Element delta_p(Prime p, BasisElt x) {
  const std::size_t arity = p.value();
  Element out(arity, p);
  if (x.j == 0) return out;
  const unsigned exponent = x.i + 1u;
  for_each_weak_composition(x.j - 1, arity, [&](const std::vector<std::uint64_t>& k) {
    // Each factor is v^{i+1} gamma_{k_t}; v^2 = 0 kills the whole word when i = 1.
    if (exponent > 1) return;
    TensorWord w(arity);
    for (std::size_t t = 0; t < arity; ++t)
      w[t] = BasisElt{static_cast<std::uint8_t>(exponent), static_cast<std::uint32_t>(k[t])};
    out.add_term(std::move(w), 1);
  });
  return out;
}

namespace {

Element apply_corruptions(Element image, Corruption::Target target, BasisElt input,
                          const std::vector<Corruption>& corruptions) {
  for (const auto& c : corruptions)
    if (c.target == target && c.input == input) image.add_term(c.word, c.shift);
  return image;
}

}  // namespace

HopfStructure::HopfStructure(StructureParams params, std::vector<Corruption> corruptions)
    : params_(params),
      grading_(params.p, params.m),
      corruptions_(std::move(corruptions)),
      mu_("mu", grading_, 2, 1, 0,
          [g = grading_](const TensorWord& w) { return mul(g, w[0], w[1]); }, true),
      delta2_("Delta2", grading_, 1, 2, 0,
              [p = params.p, cs = corruptions_](const TensorWord& w) {
                return apply_corruptions(ainf::delta2(p, w[0]), Corruption::Target::delta2, w[0], cs);
              },
              true),
      delta_p_("Delta" + std::to_string(params.p.value()), grading_, 1, params.p.value(),
               static_cast<std::int64_t>(params.p.value()) - 2,
               [p = params.p, cs = corruptions_](const TensorWord& w) {
                 return apply_corruptions(ainf::delta_p(p, w[0]), Corruption::Target::delta_p, w[0],
                                          cs);
               },
               true),
      cache_(std::make_shared<IteratedCache>()) {
  for (const auto& c : corruptions_) {
    const std::size_t expected = c.target == Corruption::Target::delta2 ? 2 : params.p.value();
    if (c.word.size() != expected)
      throw std::invalid_argument("corruption word has the wrong tensor length");
  }
}

const GradedMap& HopfStructure::f(std::size_t n) const {
  if (n < 2) throw std::invalid_argument("f^n requires n >= 2");
  std::lock_guard lock(cache_->mu);
  if (auto it = cache_->f.find(n); it != cache_->f.end()) return *it->second;
  GradedMap acc = delta2_;
  for (std::size_t k = 3; k <= n; ++k) acc = compose(extend(delta2_, 0, k - 2), acc, true);
  auto& slot = cache_->f[n];
  slot = std::make_unique<GradedMap>(acc.renamed("f^" + std::to_string(n)));
  return *slot;
}

const GradedMap& HopfStructure::g(std::size_t n) const {
  if (n < 2) throw std::invalid_argument("g^n requires n >= 2");
  std::lock_guard lock(cache_->mu);
  if (auto it = cache_->g.find(n); it != cache_->g.end()) return *it->second;
  GradedMap acc = delta2_;
  for (std::size_t k = 3; k <= n; ++k) acc = compose(extend(delta2_, k - 2, 0), acc, true);
  auto& slot = cache_->g[n];
  slot = std::make_unique<GradedMap>(acc.renamed("g^" + std::to_string(n)));
  return *slot;
}

AinfFamily HopfStructure::family() const {
  AinfFamily fam(grading_);
  fam.set(delta2_);
  fam.set(delta_p_);
  return fam;
}

std::vector<StructureParams> em_factors_n3(Prime p, std::size_t count) {
  if (count == 0) throw std::invalid_argument("factor count must be >= 1");
  std::vector<StructureParams> out;
  std::uint64_t m = 1;
  for (std::size_t i = 0; i < count; ++i) {
    if (m > UINT32_MAX / (2ull * p.value()))
      throw std::overflow_error("factor degree overflows");
    out.emplace_back(p, static_cast<std::uint32_t>(m));
    m *= p.value();
  }
  return out;
}

}  // namespace ainf
