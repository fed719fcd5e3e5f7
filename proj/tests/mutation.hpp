#pragma once

// Random single-coefficient corruptions of Delta_2 and Delta_p that keep the
// corrupted map homogeneous of the right degree.

#include <optional>
#include <vector>

#include "ainf/hopf.hpp"
#include "generators.hpp"

namespace ainf::prop {

inline std::vector<TensorWord> admissible_words(const Grading& g, BasisElt x, std::size_t length,
                                                std::int64_t map_degree) {
  const std::int64_t want = g.degree(x) + map_degree;
  std::vector<TensorWord> out;
  TensorWord cur;
  auto rec = [&](auto&& self, std::int64_t so_far) -> void {
    if (so_far > want) return;
    if (cur.size() == length) {
      if (so_far == want) out.push_back(cur);
      return;
    }
    for (std::uint8_t i = 0; i <= 1; ++i)
      for (std::uint32_t j = 0; j <= x.j + 1; ++j) {
        cur.push_back({i, j});
        self(self, so_far + g.degree(cur.back()));
        cur.pop_back();
      }
  };
  rec(rec, 0);
  return out;
}

/// Draws a corruption of the requested target with input gamma index <= max_input_j.
/// Returns nullopt when the drawn input admits no word of the right degree.
inline std::optional<Corruption> random_corruption(Gen& gen, const Grading& g, bool on_delta2,
                                                   std::uint32_t max_input_j) {
  const std::uint32_t p = g.prime().value();
  const BasisElt x = gen.basis(max_input_j);
  const auto words = admissible_words(g, x, on_delta2 ? 2 : p, on_delta2 ? 0 : std::int64_t{p} - 2);
  if (words.empty()) return std::nullopt;
  const TensorWord w = words[gen.uniform(0, words.size() - 1)];
  const auto shift = static_cast<std::uint32_t>(gen.uniform(1, p - 1));
  return Corruption{on_delta2 ? Corruption::Target::delta2 : Corruption::Target::delta_p, x, w,
                    shift};
}

}  // namespace ainf::prop
