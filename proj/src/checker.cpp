#include "ainf/checker.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "ainf/compositions.hpp"
#include "ainf/parallel.hpp"

namespace ainf {

namespace {

using MaybeWitnesses = std::vector<Witness>;

// Folds per-input results into a report in input order.
RelationReport collect(std::string id, const std::vector<MaybeWitnesses>& per_input) {
  RelationReport report;
  report.relation_id = std::move(id);
  report.inputs_checked = per_input.size();
  for (const auto& ws : per_input)
    for (const auto& w : ws) report.record(w);
  return report;
}

std::vector<TensorWord> words_of_length(std::size_t length, std::uint32_t max_j) {
  std::vector<TensorWord> out;
  TensorWord cur;
  auto rec = [&](auto&& self, std::uint32_t budget) -> void {
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (std::uint8_t i = 0; i <= 1; ++i) {
      for (std::uint32_t j = 0; j <= budget; ++j) {
        cur.push_back({i, j});
        self(self, budget - j);
        cur.pop_back();
      }
    }
  };
  rec(rec, max_j);
  return out;
}

std::vector<std::pair<BasisElt, BasisElt>> basis_pairs(std::uint32_t max_j) {
  std::vector<std::pair<BasisElt, BasisElt>> out;
  for (const auto& w : words_of_length(2, max_j)) out.emplace_back(w[0], w[1]);
  return out;
}

Element counit_left(const Element& x) {
  Element out(1, x.prime());
  for (const auto& [w, c] : x)
    if (w[0].is_unit()) out.add_term(TensorWord{w[1]}, c);
  return out;
}

Element counit_right(const Element& x) {
  Element out(1, x.prime());
  for (const auto& [w, c] : x)
    if (w[1].is_unit()) out.add_term(TensorWord{w[0]}, c);
  return out;
}

bool involves_v(const TensorWord& w) {
  return std::any_of(w.begin(), w.end(), [](BasisElt b) { return b.i != 0; });
}

}  // namespace

void RelationReport::record(Witness w) {
  ++failures;
  max_residual_terms = std::max(max_residual_terms, w.residual.size());
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
}

std::uint32_t default_max_j(Prime p) {
  switch (p.value()) {
    case 3: return 12;
    case 5: return 10;
    case 7: return 8;
    default: return 6;
  }
}

Element ainf_residual(const AinfFamily& family, std::size_t n, BasisElt x) {
  const auto p = family.grading().prime();
  Element total(n, p);
  for (std::size_t j = 0; j + 1 <= n; ++j) {
    const GradedMap* outer = family.find(j + 1);
    const GradedMap* inner = family.find(n - j);
    if (!outer || !inner) continue;
    const Element first = (*inner)(x);
    if (first.is_zero()) continue;
    for (std::size_t i = 0; i + j + 1 <= n; ++i) {
      const GradedMap placed = extend(*outer, i, n - i - j - 1);
      Element term = placed(first);
      const bool negative = (j * (n + i + 1)) % 2 != 0;
      if (negative)
        total -= term;
      else
        total += term;
    }
  }
  return total;
}

std::vector<std::size_t> nonvacuous_relations(const AinfFamily& family, std::size_t max_n) {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    bool any = false;
    for (std::size_t j = 0; j + 1 <= n && !any; ++j)
      any = family.find(j + 1) && family.find(n - j);
    if (any) out.push_back(n);
  }
  return out;
}

RelationReport ainf_relation(const AinfFamily& family, std::size_t n, const SweepOptions& opts) {
  if (n == 0) throw std::invalid_argument("ainf_relation: n must be >= 1");
  const auto inputs = basis_up_to(opts.max_j);
  auto per_input = parallel_map(inputs.size(), opts.threads, [&](std::size_t idx) {
    MaybeWitnesses ws;
    Element r = ainf_residual(family, n, inputs[idx]);
    if (!r.is_zero()) ws.push_back({TensorWord{inputs[idx]}, std::move(r), "residual"});
    return ws;
  });
  return collect("ainf.n=" + std::to_string(n), per_input);
}

namespace {

std::size_t max_operation_arity(const AinfFamily& family) {
  return family.operations().empty() ? 1 : family.operations().rbegin()->first;
}

// d d [x] predicted from the relation residuals.
CobarChain predicted_square_letter(const AinfFamily& family, BasisElt x) {
  CobarChain out;
  const std::size_t top = 2 * max_operation_arity(family) - 1;
  for (std::size_t n = 1; n <= top; ++n) {
    Element r = desuspend(family.grading(), ainf_residual(family, n, x));
    accumulate(out, n % 2 == 0 ? -r : r);  // (-1)^{n+1}
  }
  return out;
}

CobarChain predicted_square(const AinfFamily& family, const TensorWord& word) {
  const auto p = family.grading().prime();
  CobarChain out;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    const TensorWord before(word.begin(), word.begin() + pos);
    const TensorWord after(word.begin() + pos + 1, word.end());
    for (const auto& [len, e] : predicted_square_letter(family, word[pos])) {
      Element piece = e;
      if (!before.empty()) piece = concat(Element::word(before, p), piece);
      if (!after.empty()) piece = concat(piece, Element::word(after, p));
      accumulate(out, piece);
    }
  }
  return out;
}

Element flatten_difference(const CobarChain& a, const CobarChain& b, Prime p) {
  // Residual reported as the longest nonzero length component of a - b.
  CobarChain diff = a;
  for (const auto& [len, e] : b) accumulate(diff, -e);
  if (diff.empty()) return Element(1, p);
  return diff.rbegin()->second;
}

std::vector<TensorWord> cobar_inputs(std::size_t max_length, std::uint32_t max_j) {
  std::vector<TensorWord> inputs;
  for (std::size_t len = 1; len <= max_length; ++len) {
    auto ws = words_of_length(len, max_j);
    inputs.insert(inputs.end(), ws.begin(), ws.end());
  }
  return inputs;
}

}  // namespace

RelationReport cobar_agreement(const AinfFamily& family, std::size_t max_length,
                               const SweepOptions& opts) {
  const auto p = family.grading().prime();
  const std::size_t cutoff = max_length + 2 * (max_operation_arity(family) - 1);
  const auto inputs = cobar_inputs(max_length, opts.max_j);
  auto per_input = parallel_map(inputs.size(), opts.threads, [&](std::size_t idx) {
    MaybeWitnesses ws;
    const CobarChain direct = cobar_square(family, inputs[idx], cutoff);
    const CobarChain predicted = predicted_square(family, inputs[idx]);
    CobarChain diff = direct;
    for (const auto& [len, e] : predicted) accumulate(diff, -e);
    if (!is_zero(diff))
      ws.push_back({inputs[idx], flatten_difference(direct, predicted, p), "cobar/relation mismatch"});
    return ws;
  });
  return collect("cobar.agreement", per_input);
}

RelationReport cobar_dd_zero(const AinfFamily& family, std::size_t max_length,
                             const SweepOptions& opts) {
  const auto p = family.grading().prime();
  const std::size_t cutoff = max_length + 2 * (max_operation_arity(family) - 1);
  const auto inputs = cobar_inputs(max_length, opts.max_j);
  auto per_input = parallel_map(inputs.size(), opts.threads, [&](std::size_t idx) {
    MaybeWitnesses ws;
    const CobarChain dd = cobar_square(family, inputs[idx], cutoff);
    if (!is_zero(dd)) ws.push_back({inputs[idx], flatten_difference(dd, {}, p), "d o d != 0"});
    return ws;
  });
  return collect("cobar.dd_zero", per_input);
}

RelationReport fg_derivation_check(const GradedMap& h, const GradedMap& f, const GradedMap& g,
                                   const GradedMap& mu, const SweepOptions& opts,
                                   std::string relation_id) {
  const std::size_t n = h.arity_out();
  if (h.arity_in() != 1 || f.arity_in() != 1 || g.arity_in() != 1)
    throw std::invalid_argument("fg_derivation_check: f, g, h must have arity 1 -> n");
  if (f.arity_out() != n || g.arity_out() != n)
    throw std::invalid_argument("fg_derivation_check: f, g, h must share output arity");
  if (mu.arity_in() != 2 || mu.arity_out() != 1)
    throw std::invalid_argument("fg_derivation_check: mu must have arity 2 -> 1");

  const GradedMap lhs_map = compose(h, mu);
  const GradedMap post = compose(tensor_power(mu, n), sigma_map(mu.grading(), n));
  const GradedMap fh = tensor(f, h);
  const GradedMap hg = tensor(h, g);
  const auto pairs = basis_pairs(opts.max_j);
  auto per_input = parallel_map(pairs.size(), opts.threads, [&](std::size_t idx) {
    MaybeWitnesses ws;
    const TensorWord w{pairs[idx].first, pairs[idx].second};
    Element lhs = lhs_map(w);
    Element rhs = post(fh(w) + hg(w));
    if (!(lhs == rhs)) ws.push_back({w, lhs - rhs, "h mu - mu_B (f(x)h + h(x)g)"});
    return ws;
  });
  return collect(std::move(relation_id), per_input);
}

RelationReport hopf_compat(const HopfStructure& s, const SweepOptions& opts) {
  const auto& grading = s.grading();
  const auto p = s.prime();
  const std::size_t n = p.value();
  const GradedMap& fp = s.f(n);
  const GradedMap& dp = s.delta_p();
  const GradedMap mu_n = tensor_power(s.mu(), n);
  const GradedMap fh = tensor(fp, dp);
  const GradedMap hf = tensor(dp, fp);
  const auto pairs = basis_pairs(opts.max_j);

  auto per_input = parallel_map(pairs.size(), opts.threads, [&](std::size_t idx) {
    MaybeWitnesses ws;
    const auto [x, y] = pairs[idx];
    const TensorWord w{x, y};
    const Element lhs = dp(s.mu()(w));

    const Element inner = fh(w) + hf(w);
    Element shuffled(2 * n, p);
    bool bad_sign = false;
    for (const auto& [u, c] : inner) {
      auto [sign, su] = sigma_n2_word(grading, u);
      if (sign < 0) bad_sign = true;
      shuffled.add_term(std::move(su), sign > 0 ? c : neg_mod(c, p));
    }
    const Element rhs = mu_n(shuffled);

    if (!(lhs == rhs)) ws.push_back({w, lhs - rhs, "Delta_p mu != mu^(x)p sigma (f(x)D + D(x)f)"});
    if (involves_v(w)) {
      if (!lhs.is_zero()) ws.push_back({w, lhs, "left side nonzero on input involving v"});
      if (!rhs.is_zero()) ws.push_back({w, rhs, "right side nonzero on input involving v"});
      return ws;
    }
    if (bad_sign) ws.push_back({w, inner, "sigma_{p,2} produced a -1 on gamma (x) gamma"});

    // Closed form of the left side: sum over z_1+..+z_p = i+j-1 of
    // C(z_1+..+z_p+1, i) v g_{z_1} | .. | v g_{z_p}.
    Element closed(n, p);
    if (x.j + y.j >= 1) {
      const std::uint64_t total = std::uint64_t{x.j} + y.j - 1;
      const std::uint32_t coeff = binom_residue(total + 1, x.j, p);
      for_each_weak_composition(total, n, [&](const std::vector<std::uint64_t>& z) {
        TensorWord u(n);
        for (std::size_t t = 0; t < n; ++t) u[t] = {1, static_cast<std::uint32_t>(z[t])};
        closed.add_term(std::move(u), coeff);
      });
    }
    if (!(closed == lhs)) ws.push_back({w, lhs - closed, "left side differs from closed form"});
    return ws;
  });
  return collect("hopf_compat.n=" + std::to_string(n), per_input);
}

HopfAxiomReports hopf_axioms(const HopfStructure& s, const SweepOptions& opts) {
  const auto p = s.prime();
  const auto& grading = s.grading();
  const GradedMap& mu = s.mu();
  const GradedMap& delta = s.delta2();
  const auto basis = basis_up_to(opts.max_j);
  HopfAxiomReports out;

  {
    auto per = parallel_map(basis.size(), opts.threads, [&](std::size_t idx) {
      MaybeWitnesses ws;
      const auto x = basis[idx];
      const Element expected = Element::word({x}, p);
      const Element left = mu(TensorWord{BasisElt::unit(), x});
      const Element right = mu(TensorWord{x, BasisElt::unit()});
      if (!(left == expected)) ws.push_back({{x}, left - expected, "1 * x != x"});
      if (!(right == expected)) ws.push_back({{x}, right - expected, "x * 1 != x"});
      return ws;
    });
    out.mu_unit = collect("hopf.mu_unit", per);
  }
  {
    const GradedMap left = compose(mu, extend(mu, 0, 1));
    const GradedMap right = compose(mu, extend(mu, 1, 0));
    const auto triples = words_of_length(3, opts.max_j);
    auto per = parallel_map(triples.size(), opts.threads, [&](std::size_t idx) {
      MaybeWitnesses ws;
      Element r = left(triples[idx]) - right(triples[idx]);
      if (!r.is_zero()) ws.push_back({triples[idx], std::move(r), "(xy)z - x(yz)"});
      return ws;
    });
    out.mu_assoc = collect("hopf.mu_assoc", per);
  }
  {
    const GradedMap left = compose(extend(delta, 0, 1), delta);
    const GradedMap right = compose(extend(delta, 1, 0), delta);
    auto per = parallel_map(basis.size(), opts.threads, [&](std::size_t idx) {
      MaybeWitnesses ws;
      const TensorWord w{basis[idx]};
      Element r = left(w) - right(w);
      if (!r.is_zero()) ws.push_back({w, std::move(r), "(D(x)1)D - (1(x)D)D"});
      return ws;
    });
    out.delta2_coassoc = collect("hopf.delta2_coassoc", per);
  }
  {
    auto per = parallel_map(basis.size(), opts.threads, [&](std::size_t idx) {
      MaybeWitnesses ws;
      const TensorWord w{basis[idx]};
      const Element image = delta(w);
      const Element expected = Element::word(w, p);
      if (!(counit_left(image) == expected))
        ws.push_back({w, counit_left(image) - expected, "(e(x)1)D != 1"});
      if (!(counit_right(image) == expected))
        ws.push_back({w, counit_right(image) - expected, "(1(x)e)D != 1"});
      return ws;
    });
    out.counit = collect("hopf.counit", per);
  }
  {
    const GradedMap left = compose(delta, mu);
    const GradedMap right =
        compose(compose(tensor(mu, mu), sigma_map(grading, 2)), tensor(delta, delta));
    const auto pairs = basis_pairs(opts.max_j);
    auto per = parallel_map(pairs.size(), opts.threads, [&](std::size_t idx) {
      MaybeWitnesses ws;
      const TensorWord w{pairs[idx].first, pairs[idx].second};
      Element r = left(w) - right(w);
      if (!r.is_zero()) ws.push_back({w, std::move(r), "D mu - (mu(x)mu) sigma (D(x)D)"});
      return ws;
    });
    out.algebra_map = collect("hopf.algebra_map", per);
  }
  return out;
}

bool Certificate::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass(); });
}

Certificate certify_hopf_ainf(const HopfStructure& s, const SweepOptions& opts) {
  const std::size_t p = s.prime().value();
  Certificate cert{s.params(), opts.max_j, {}};
  auto axioms = hopf_axioms(s, opts);
  cert.reports.push_back(std::move(axioms.mu_unit));
  cert.reports.push_back(std::move(axioms.mu_assoc));
  cert.reports.push_back(std::move(axioms.delta2_coassoc));
  cert.reports.push_back(std::move(axioms.counit));
  cert.reports.push_back(std::move(axioms.algebra_map));

  const AinfFamily family = s.family();
  for (std::size_t n : {std::size_t{3}, p + 1, 2 * p - 1})
    cert.reports.push_back(ainf_relation(family, n, opts));

  {
    RelationReport scan;
    scan.relation_id = "ainf.vacuous_scan";
    const std::vector<std::size_t> expected{3, p + 1, 2 * p - 1};
    const auto found = nonvacuous_relations(family, 2 * p);
    scan.inputs_checked = 2 * p;
    if (found != expected) {
      Element none(1, s.prime());
      std::string listed;
      for (auto n : found) listed += std::to_string(n) + " ";
      scan.record({{}, none, "unexpected composable lengths: " + listed});
    }
    cert.reports.push_back(std::move(scan));
  }

  cert.reports.push_back(cobar_dd_zero(family, 2, opts));
  cert.reports.push_back(cobar_agreement(family, 2, opts));
  cert.reports.push_back(hopf_compat(s, opts));
  cert.reports.push_back(fg_derivation_check(s.delta_p(), s.f(p), s.f(p), s.mu(), opts,
                                             "fg_derivation.Delta_p"));
  return cert;
}

}  // namespace ainf
