#include "ainf/polytope.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ainf {

namespace {

void require_n(int n, int max_n, const char* what) {
  if (n < 1 || n > max_n)
    throw std::out_of_range(std::string(what) + ": n=" + std::to_string(n) + " outside [1, " +
                            std::to_string(max_n) + "]");
}

}  // namespace

// ---------------------------------------------------------------------------
// Ordered partitions

OrderedPartition::OrderedPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::vector<int> seen;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("ordered partition has an empty block");
    std::sort(b.begin(), b.end());
    seen.insert(seen.end(), b.begin(), b.end());
  }
  std::sort(seen.begin(), seen.end());
  n_ = static_cast<int>(seen.size());
  for (int k = 0; k < n_; ++k)
    if (seen[k] != k + 1) throw std::invalid_argument("blocks do not partition {1..n}");
  if (n_ == 0) throw std::invalid_argument("ordered partition of the empty set");
}

OrderedPartition OrderedPartition::top(int n) {
  Block all(n);
  std::iota(all.begin(), all.end(), 1);
  return OrderedPartition({all});
}

OrderedPartition OrderedPartition::parse(std::string_view text) {
  std::vector<Block> blocks(1);
  for (char ch : text) {
    if (ch == '|') {
      blocks.emplace_back();
    } else if (ch >= '1' && ch <= '9') {
      blocks.back().push_back(ch - '0');
    } else if (ch != ' ') {
      throw std::invalid_argument("unexpected character in ordered partition: " + std::string(text));
    }
  }
  return OrderedPartition(std::move(blocks));
}

std::string OrderedPartition::to_string() const {
  std::string s;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) s += '|';
    for (int x : blocks_[b]) s += std::to_string(x);
  }
  return s;
}

std::vector<OrderedPartition> enumerate_faces(int n) {
  require_n(n, kMaxPermutahedron, "enumerate_faces");
  // Assign each element a block label, keep labellings whose used labels are
  // exactly 0..r-1.
  std::vector<OrderedPartition> out;
  std::vector<int> label(n, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      const int r = *std::max_element(label.begin(), label.end()) + 1;
      std::vector<OrderedPartition::Block> blocks(r);
      for (int x = 0; x < n; ++x) blocks[label[x]].push_back(x + 1);
      if (std::any_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); })) return;
      out.emplace_back(std::move(blocks));
      return;
    }
    for (int l = 0; l < n; ++l) {
      label[pos] = l;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

FaceChain boundary(const OrderedPartition& face) {
  FaceChain out;
  const auto& blocks = face.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    const std::size_t k = block.size();
    if (k < 2) continue;
    for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
      OrderedPartition::Block first, second;
      for (std::size_t t = 0; t < k; ++t) (mask >> t & 1u ? first : second).push_back(block[t]);
      std::vector<OrderedPartition::Block> split;
      split.reserve(blocks.size() + 1);
      split.insert(split.end(), blocks.begin(), blocks.begin() + b);
      split.push_back(std::move(first));
      split.push_back(std::move(second));
      split.insert(split.end(), blocks.begin() + b + 1, blocks.end());
      out.toggle(OrderedPartition(std::move(split)));
    }
  }
  return out;
}

FaceChain boundary(const FaceChain& chain) {
  FaceChain out;
  for (const auto& f : chain) out += boundary(f);
  return out;
}

DiagonalElement boundary(const DiagonalElement& x) {
  DiagonalElement out;
  for (const auto& [a, b] : x) {
    for (const auto& da : boundary(a)) out.toggle({da, b});
    for (const auto& db : boundary(b)) out.toggle({a, db});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrices

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix must be nonempty");
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<int> values)
    : rows_(rows), cols_(cols), data_(std::move(values)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix must be nonempty");
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix value count != rows*cols");
  std::vector<int> nonzero;
  for (int v : data_) {
    if (v < 0) throw std::invalid_argument("matrix entries must be >= 0");
    if (v > 0) nonzero.push_back(v);
  }
  std::sort(nonzero.begin(), nonzero.end());
  if (std::adjacent_find(nonzero.begin(), nonzero.end()) != nonzero.end())
    throw std::invalid_argument("matrix repeats a nonzero entry");
}

std::vector<int> IntMatrix::row_entries(std::size_t i) const {
  std::vector<int> out;
  for (std::size_t j = 0; j < cols_; ++j)
    if (at(i, j)) out.push_back(at(i, j));
  return out;
}

std::vector<int> IntMatrix::col_entries(std::size_t j) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < rows_; ++i)
    if (at(i, j)) out.push_back(at(i, j));
  return out;
}

std::string IntMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ' ';
      s += std::to_string(at(i, j));
    }
  }
  return s + "]";
}

namespace {

// Nonzero positions along a line must be contiguous with increasing values.
template <typename Get>
bool increasing_contiguous(std::size_t len, Get get) {
  std::size_t first = len, last = 0, count = 0;
  int prev = 0;
  for (std::size_t t = 0; t < len; ++t) {
    const int v = get(t);
    if (!v) continue;
    if (count && v < prev) return false;
    prev = v;
    first = std::min(first, t);
    last = t;
    ++count;
  }
  return count == 0 || last - first + 1 == count;
}

}  // namespace

bool is_step_matrix(const IntMatrix& m) {
  const std::size_t q = m.rows(), p = m.cols();
  int count = 0, max_v = 0;
  for (int v : m.values())
    if (v) {
      ++count;
      max_v = std::max(max_v, v);
    }
  if (count == 0 || max_v != count) return false;
  for (std::size_t i = 0; i < q; ++i)
    if (!increasing_contiguous(p, [&](std::size_t j) { return m.at(i, j); })) return false;
  for (std::size_t j = 0; j < p; ++j)
    if (!increasing_contiguous(q, [&](std::size_t i) { return m.at(i, j); })) return false;
  // Diagonals j - i = d for d in [-(q-1), p-1].
  for (long d = -static_cast<long>(q) + 1; d < static_cast<long>(p); ++d) {
    int on_diagonal = 0;
    for (std::size_t i = 0; i < q; ++i) {
      const long j = static_cast<long>(i) + d;
      if (j >= 0 && j < static_cast<long>(p) && m.at(i, static_cast<std::size_t>(j))) ++on_diagonal;
    }
    if (on_diagonal != 1) return false;
  }
  return true;
}

IntMatrix step_matrix_from_permutation(std::span<const int> perm) {
  const std::size_t n = perm.size();
  if (n == 0) throw std::invalid_argument("empty permutation");
  std::vector<int> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < n; ++k)
    if (sorted[k] != static_cast<int>(k) + 1) throw std::invalid_argument("not a permutation of 1..n");
  std::size_t ascents = 0;
  for (std::size_t t = 1; t < n; ++t)
    if (perm[t] > perm[t - 1]) ++ascents;
  const std::size_t p = ascents + 1;
  const std::size_t q = n - ascents;
  std::vector<int> values(p * q, 0);
  std::size_t i = q - 1, j = 0;
  values[i * p + j] = perm[0];
  for (std::size_t t = 1; t < n; ++t) {
    if (perm[t] > perm[t - 1])
      ++j;
    else
      --i;
    values[i * p + j] = perm[t];
  }
  return IntMatrix(q, p, std::move(values));
}

std::vector<int> permutation_of(const IntMatrix& step) {
  if (!is_step_matrix(step)) throw std::invalid_argument("permutation_of: not a step matrix");
  std::vector<int> out;
  std::size_t i = step.rows() - 1, j = 0;
  out.push_back(step.at(i, j));
  while (!(i == 0 && j + 1 == step.cols())) {
    if (j + 1 < step.cols() && step.at(i, j + 1))
      ++j;
    else
      --i;
    out.push_back(step.at(i, j));
  }
  return out;
}

std::vector<IntMatrix> step_matrices(int n) {
  require_n(n, kMaxPermutahedron, "step_matrices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<IntMatrix> out;
  do {
    out.push_back(step_matrix_from_permutation(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_proper_subset(std::span<const int> subset, const std::vector<int>& line,
                           const char* what) {
  for (int s : subset)
    if (std::find(line.begin(), line.end(), s) == line.end())
      throw std::invalid_argument(std::string(what) + ": subset is not within the line");
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument(std::string(what) + ": subset repeats an entry");
  if (!line.empty() && sorted.size() >= line.size())
    throw std::invalid_argument(std::string(what) + ": subset is not proper");
}

}  // namespace

IntMatrix down_shift(const IntMatrix& m, std::size_t row, std::span<const int> subset) {
  if (row >= m.rows()) throw std::out_of_range("down_shift: row out of range");
  require_proper_subset(subset, m.row_entries(row), "down_shift");
  if (subset.empty() || row + 1 >= m.rows()) return m;
  const int smallest = *std::min_element(subset.begin(), subset.end());
  std::size_t j = 0;
  while (m.at(row, j) != smallest) ++j;
  const auto below = m.row_entries(row + 1);
  if (!below.empty() && *std::max_element(below.begin(), below.end()) >= smallest) return m;
  for (std::size_t k = j; k < m.cols(); ++k)
    if (m.at(row + 1, k)) return m;
  IntMatrix out = m;
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const int v = m.at(row, k);
    if (v && std::find(subset.begin(), subset.end(), v) != subset.end())
      std::swap(out.ref(row, k), out.ref(row + 1, k));
  }
  return out;
}

IntMatrix right_shift(const IntMatrix& m, std::size_t col, std::span<const int> subset) {
  if (col >= m.cols()) throw std::out_of_range("right_shift: column out of range");
  require_proper_subset(subset, m.col_entries(col), "right_shift");
  if (subset.empty() || col + 1 >= m.cols()) return m;
  const int smallest = *std::min_element(subset.begin(), subset.end());
  std::size_t i = 0;
  while (m.at(i, col) != smallest) ++i;
  const auto right = m.col_entries(col + 1);
  if (!right.empty() && *std::max_element(right.begin(), right.end()) >= smallest) return m;
  for (std::size_t k = i; k < m.rows(); ++k)
    if (m.at(k, col + 1)) return m;
  IntMatrix out = m;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const int v = m.at(k, col);
    if (v && std::find(subset.begin(), subset.end(), v) != subset.end())
      std::swap(out.ref(k, col), out.ref(k, col + 1));
  }
  return out;
}

namespace {

template <typename Shift>
std::set<IntMatrix> apply_stage(const std::set<IntMatrix>& current, std::size_t index,
                                bool by_row, Shift shift) {
  std::set<IntMatrix> next;
  for (const auto& m : current) {
    const auto line = by_row ? m.row_entries(index) : m.col_entries(index);
    const std::size_t k = line.size();
    // Proper subsets, the empty set included.
    for (std::uint32_t mask = 0; mask + 1 < (1u << k); ++mask) {
      std::vector<int> subset;
      for (std::size_t t = 0; t < k; ++t)
        if (mask >> t & 1u) subset.push_back(line[t]);
      next.insert(shift(m, index, subset));
    }
    if (k == 0) next.insert(m);
  }
  return next;
}

}  // namespace

std::vector<IntMatrix> derived_matrices(const IntMatrix& step) {
  std::set<IntMatrix> current{step};
  for (std::size_t i = 0; i < step.rows(); ++i)
    current = apply_stage(current, i, true, [](const IntMatrix& m, std::size_t r, const std::vector<int>& s) {
      return down_shift(m, r, s);
    });
  for (std::size_t j = 0; j < step.cols(); ++j)
    current = apply_stage(current, j, false, [](const IntMatrix& m, std::size_t c, const std::vector<int>& s) {
      return right_shift(m, c, s);
    });
  return {current.begin(), current.end()};
}

FacePair complementary_pair(const IntMatrix& derived) {
  std::vector<OrderedPartition::Block> columns, rows;
  for (std::size_t j = 0; j < derived.cols(); ++j) columns.push_back(derived.col_entries(j));
  for (std::size_t i = derived.rows(); i-- > 0;) rows.push_back(derived.row_entries(i));
  return {OrderedPartition(std::move(columns)), OrderedPartition(std::move(rows))};
}

std::set<FacePair> complementary_pairs(int n, int p, int q) {
  require_n(n, kMaxPermutahedron, "complementary_pairs");
  std::set<FacePair> out;
  for (const auto& step : step_matrices(n)) {
    if (static_cast<int>(step.cols()) != p || static_cast<int>(step.rows()) != q) continue;
    for (const auto& d : derived_matrices(step)) out.insert(complementary_pair(d));
  }
  return out;
}

namespace {

const DiagonalElement& top_diagonal(int n) {
  static std::mutex mu;
  static std::map<int, DiagonalElement> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  DiagonalElement d;
  for (int p = 1; p <= n; ++p)
    for (const auto& cp : complementary_pairs(n, p, n + 1 - p)) d.toggle(cp);
  return cache.emplace(n, std::move(d)).first->second;
}

std::vector<OrderedPartition::Block> relabel(const OrderedPartition& face,
                                             const OrderedPartition::Block& labels) {
  std::vector<OrderedPartition::Block> blocks;
  for (const auto& b : face.blocks()) {
    OrderedPartition::Block mapped;
    for (int x : b) mapped.push_back(labels[x - 1]);
    blocks.push_back(std::move(mapped));
  }
  return blocks;
}

}  // namespace

DiagonalElement diagonal_P(const OrderedPartition& face) {
  require_n(face.n(), kMaxPermutahedron, "diagonal_P");
  // Partial products as pairs of block lists.
  using Partial = std::pair<std::vector<OrderedPartition::Block>, std::vector<OrderedPartition::Block>>;
  std::vector<Partial> partial{{}};
  for (const auto& block : face.blocks()) {
    std::vector<Partial> next;
    for (const auto& [a, b] : top_diagonal(static_cast<int>(block.size()))) {
      const auto ra = relabel(a, block);
      const auto rb = relabel(b, block);
      for (const auto& [pa, pb] : partial) {
        Partial grown{pa, pb};
        grown.first.insert(grown.first.end(), ra.begin(), ra.end());
        grown.second.insert(grown.second.end(), rb.begin(), rb.end());
        next.push_back(std::move(grown));
      }
    }
    partial = std::move(next);
  }
  DiagonalElement out;
  for (auto& [a, b] : partial) out.toggle({OrderedPartition(std::move(a)), OrderedPartition(std::move(b))});
  return out;
}

// ---------------------------------------------------------------------------
// Planar trees and the projection to associahedra

PlanarTree PlanarTree::leaf(int label) {
  PlanarTree t;
  t.label_ = label;
  t.repr_ = std::to_string(label);
  return t;
}

PlanarTree PlanarTree::node(std::vector<PlanarTree> children) {
  if (children.size() < 2) throw std::invalid_argument("internal vertex needs >= 2 children");
  PlanarTree t;
  t.children_ = std::move(children);
  for (const auto& c : t.children_) t.repr_ += c.is_leaf() ? c.repr_ : "(" + c.repr_ + ")";
  return t;
}

PlanarTree PlanarTree::corolla(int leaves) {
  std::vector<PlanarTree> kids;
  for (int l = 1; l <= leaves; ++l) kids.push_back(leaf(l));
  return node(std::move(kids));
}

int PlanarTree::leaves() const {
  if (is_leaf()) return 1;
  int total = 0;
  for (const auto& c : children_) total += c.leaves();
  return total;
}

int PlanarTree::internal_vertices() const {
  if (is_leaf()) return 0;
  int total = 1;
  for (const auto& c : children_) total += c.internal_vertices();
  return total;
}

std::optional<PlanarTree> tonks_projection(const OrderedPartition& face) {
  const int n = face.n();
  // level[g] for gap g between leaves g and g+1; the last block is the root.
  std::vector<int> level(n + 1, 0);
  for (std::size_t b = 0; b < face.blocks().size(); ++b)
    for (int g : face.blocks()[b]) level[g] = static_cast<int>(b) + 1;
  std::vector<int> vertices_at(face.size() + 1, 0);

  auto build = [&](auto&& self, int lo, int hi) -> PlanarTree {
    if (lo == hi) return PlanarTree::leaf(lo);
    int top = 0;
    for (int g = lo; g < hi; ++g) top = std::max(top, level[g]);
    ++vertices_at[top];
    std::vector<PlanarTree> kids;
    int start = lo;
    for (int g = lo; g < hi; ++g) {
      if (level[g] != top) continue;
      kids.push_back(self(self, start, g));
      start = g + 1;
    }
    kids.push_back(self(self, start, hi));
    return PlanarTree::node(std::move(kids));
  };
  PlanarTree tree = build(build, 1, n + 1);
  for (int count : vertices_at)
    if (count > 1) return std::nullopt;
  return tree;
}

AssocDiagonal project(const DiagonalElement& x) {
  AssocDiagonal out;
  for (const auto& [a, b] : x) {
    auto ta = tonks_projection(a);
    if (!ta) continue;
    auto tb = tonks_projection(b);
    if (!tb) continue;
    out.toggle({std::move(*ta), std::move(*tb)});
  }
  return out;
}

AssocDiagonal diagonal_K(int n) {
  require_n(n, kMaxPermutahedron, "diagonal_K");
  return project(diagonal_P(OrderedPartition::top(n)));
}

Z2Chain<PlanarTree> boundary(const PlanarTree& tree) {
  Z2Chain<PlanarTree> out;
  if (tree.is_leaf()) return out;
  const auto& kids = tree.children();
  const std::size_t k = kids.size();
  // Group a consecutive run of children under a new vertex.
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 2; b <= k; ++b) {
      if (a == 0 && b == k) continue;
      std::vector<PlanarTree> grouped(kids.begin(), kids.begin() + a);
      grouped.push_back(PlanarTree::node({kids.begin() + a, kids.begin() + b}));
      grouped.insert(grouped.end(), kids.begin() + b, kids.end());
      out.toggle(PlanarTree::node(std::move(grouped)));
    }
  }
  // Or refine inside one child.
  for (std::size_t c = 0; c < k; ++c) {
    for (const auto& refined : boundary(kids[c])) {
      std::vector<PlanarTree> copy = kids;
      copy[c] = refined;
      out.toggle(PlanarTree::node(std::move(copy)));
    }
  }
  return out;
}

AssocDiagonal boundary(const AssocDiagonal& x) {
  AssocDiagonal out;
  for (const auto& [a, b] : x) {
    for (const auto& da : boundary(a)) out.toggle({da, b});
    for (const auto& db : boundary(b)) out.toggle({a, db});
  }
  return out;
}

bool diagonal_P_commutes_with_boundary(const OrderedPartition& face) {
  DiagonalElement rhs;
  for (const auto& facet : boundary(face)) rhs += diagonal_P(facet);
  return boundary(diagonal_P(face)) == rhs;
}

bool diagonal_K_commutes_with_boundary(int n) {
  require_n(n, kMaxPermutahedron, "diagonal_K_commutes_with_boundary");
  std::map<PlanarTree, OrderedPartition> preimage;
  for (const auto& face : enumerate_faces(n)) {
    auto t = tonks_projection(face);
    if (t && t->dimension() == n - 2) preimage.emplace(std::move(*t), face);
  }
  const PlanarTree top = PlanarTree::corolla(n + 1);
  AssocDiagonal rhs;
  for (const auto& facet : boundary(top)) {
    auto it = preimage.find(facet);
    if (it == preimage.end()) return false;
    rhs += project(diagonal_P(it->second));
  }
  return boundary(diagonal_K(n)) == rhs;
}

}  // namespace ainf
