#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ainf {

/// Calls fn(parts) for every weak composition of `total` into `count` parts,
/// in lexicographic order. Optional per-part upper bounds prune the search.
template <typename Fn>
void for_each_weak_composition(std::uint64_t total, std::size_t count, Fn&& fn,
                               const std::vector<std::uint64_t>* bounds = nullptr) {
  if (count == 0) {
    if (total == 0) {
      std::vector<std::uint64_t> empty;
      fn(empty);
    }
    return;
  }
  std::vector<std::uint64_t> parts(count, 0);
  // Suffix capacity lets bounded searches skip dead branches.
  std::vector<std::uint64_t> capacity(count + 1, 0);
  if (bounds) {
    for (std::size_t t = count; t-- > 0;) capacity[t] = capacity[t + 1] + (*bounds)[t];
    if (capacity[0] < total) return;
  }
  auto rec = [&](auto&& self, std::size_t pos, std::uint64_t remaining) -> void {
    if (pos + 1 == count) {
      if (bounds && remaining > (*bounds)[pos]) return;
      parts[pos] = remaining;
      fn(static_cast<const std::vector<std::uint64_t>&>(parts));
      return;
    }
    std::uint64_t hi = remaining;
    if (bounds && (*bounds)[pos] < hi) hi = (*bounds)[pos];
    for (std::uint64_t v = 0; v <= hi; ++v) {
      if (bounds && remaining - v > capacity[pos + 1]) continue;
      parts[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
}

}  // namespace ainf
