#pragma once

// Cellular chains of permutahedra and associahedra with Z_2 coefficients:
// faces of P_n as ordered partitions, step and derived matrices, the
// complementary-pair diagonal on P_n, the level-forgetting projection
// P_n -> K_{n+1}, and the induced diagonal on K_{n+1}.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ainf {

/// A face A_1|A_2|...|A_r of P_n: disjoint nonempty blocks covering {1..n}.
class OrderedPartition {
 public:
  using Block = std::vector<int>;  // sorted ascending

  /// Throws std::invalid_argument unless the blocks partition {1..n}.
  explicit OrderedPartition(std::vector<Block> blocks);

  static OrderedPartition top(int n);
  /// Parses "13|2" style notation (single-digit elements).
  static OrderedPartition parse(std::string_view text);

  int n() const { return n_; }
  std::size_t size() const { return blocks_.size(); }
  int dimension() const { return n_ - static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::string to_string() const;

  friend auto operator<=>(const OrderedPartition&, const OrderedPartition&) = default;

 private:
  std::vector<Block> blocks_;
  int n_ = 0;
};

/// A finite Z_2 combination: a set of cells, added by symmetric difference.
template <typename Cell>
class Z2Chain {
 public:
  Z2Chain() = default;
  Z2Chain(std::initializer_list<Cell> cells) {
    for (const auto& c : cells) toggle(c);
  }

  void toggle(const Cell& c) {
    auto [it, inserted] = cells_.insert(c);
    if (!inserted) cells_.erase(it);
  }
  Z2Chain& operator+=(const Z2Chain& rhs) {
    for (const auto& c : rhs.cells_) toggle(c);
    return *this;
  }
  Z2Chain operator+(const Z2Chain& rhs) const { return Z2Chain(*this) += rhs; }

  bool contains(const Cell& c) const { return cells_.count(c) != 0; }
  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }
  const std::set<Cell>& cells() const { return cells_; }
  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }

  friend bool operator==(const Z2Chain&, const Z2Chain&) = default;

 private:
  std::set<Cell> cells_;
};

using FaceChain = Z2Chain<OrderedPartition>;
using FacePair = std::pair<OrderedPartition, OrderedPartition>;
using DiagonalElement = Z2Chain<FacePair>;

constexpr int kMaxPermutahedron = 7;

/// All ordered partitions of {1..n}, sorted. Throws std::out_of_range unless 1 <= n <= 7.
std::vector<OrderedPartition> enumerate_faces(int n);

/// Sum of the single-block splittings A_i -> B|C. Zero on vertices.
FaceChain boundary(const OrderedPartition& face);
FaceChain boundary(const FaceChain& chain);
/// (d (x) 1 + 1 (x) d) over Z_2.
DiagonalElement boundary(const DiagonalElement& x);

/// A q x p matrix over {0} u {1..n}; each nonzero value occurs at most once.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Row-major values. Throws std::invalid_argument on negative or repeated entries.
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<int> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<int>& values() const { return data_; }

  /// Nonzero entries of a row (left to right) or column (top to bottom).
  std::vector<int> row_entries(std::size_t i) const;
  std::vector<int> col_entries(std::size_t j) const;

  std::string to_string() const;

  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  friend IntMatrix down_shift(const IntMatrix&, std::size_t, std::span<const int>);
  friend IntMatrix right_shift(const IntMatrix&, std::size_t, std::span<const int>);
  int& ref(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<int> data_;
};

/// Each of 1..n once; nonzero entries of every row (left to right) and every
/// column (top to bottom) form an increasing contiguous block; each diagonal
/// parallel to the main diagonal holds exactly one nonzero entry.
bool is_step_matrix(const IntMatrix& m);

/// The staircase read from the lower-left corner: an ascent steps right, a
/// descent steps up. `perm` is a permutation of 1..n in one-line notation.
IntMatrix step_matrix_from_permutation(std::span<const int> perm);
/// Inverse of step_matrix_from_permutation.
std::vector<int> permutation_of(const IntMatrix& step);

/// Every step matrix over {1..n} (n! of them), sorted. Throws std::out_of_range unless 1 <= n <= 7.
std::vector<IntMatrix> step_matrices(int n);

/// D_{S}: moves the entries of `subset` (a proper subset of row `row`'s
/// nonzero entries) down one row when the guard holds; otherwise returns m.
/// An all-zero next row counts as having maximum -infinity.
IntMatrix down_shift(const IntMatrix& m, std::size_t row, std::span<const int> subset);
/// R_{T}: the column analogue, moving entries one column to the right.
IntMatrix right_shift(const IntMatrix& m, std::size_t col, std::span<const int> subset);

/// All R_{T_p}..R_{T_1} D_{S_q}..D_{S_1} E over every admissible choice of
/// subsets, deduplicated and sorted. Contains E itself.
std::vector<IntMatrix> derived_matrices(const IntMatrix& step);

/// (A_1|..|A_p, B_q|..|B_1) with A_j = column j and B_i = row i.
FacePair complementary_pair(const IntMatrix& derived);

/// All (p,q)-complementary pairs of {1..n}, i.e. from q x p derived matrices.
std::set<FacePair> complementary_pairs(int n, int p, int q);

/// The diagonal: complementary pairs on the top cell, extended blockwise.
DiagonalElement diagonal_P(const OrderedPartition& face);

/// A planar rooted tree; leaves are labelled 1..L left to right.
class PlanarTree {
 public:
  static PlanarTree leaf(int label);
  static PlanarTree node(std::vector<PlanarTree> children);
  static PlanarTree corolla(int leaves);

  bool is_leaf() const { return children_.empty(); }
  int label() const { return label_; }
  const std::vector<PlanarTree>& children() const { return children_; }
  int leaves() const;
  int internal_vertices() const;
  /// Dimension of the associahedron face: leaves - 1 - internal vertices.
  int dimension() const { return leaves() - 1 - internal_vertices(); }

  /// Parenthesized word, e.g. "((12)3)4"; the root carries no parentheses.
  const std::string& to_string() const { return repr_; }

  friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.repr_ == b.repr_; }
  friend auto operator<=>(const PlanarTree& a, const PlanarTree& b) { return a.repr_ <=> b.repr_; }

 private:
  int label_ = 0;
  std::vector<PlanarTree> children_;
  std::string repr_;
};

/// Face of K_{n+1} obtained by forgetting levels, or nullopt when two vertices
/// share a level (the face degenerates).
std::optional<PlanarTree> tonks_projection(const OrderedPartition& face);

using TreePair = std::pair<PlanarTree, PlanarTree>;
using AssocDiagonal = Z2Chain<TreePair>;

/// (theta (x) theta) over Z_2, dropping pairs with a degenerate factor.
AssocDiagonal project(const DiagonalElement& x);

/// Diagonal on the top cell of K_{n+1}, induced from P_n. 1 <= n <= 7.
AssocDiagonal diagonal_K(int n);

/// Cellular boundary of an associahedron face: insert one internal edge.
Z2Chain<PlanarTree> boundary(const PlanarTree& tree);
AssocDiagonal boundary(const AssocDiagonal& x);

/// (d (x) 1 + 1 (x) d) diagonal_P(face) == diagonal_P(d face).
bool diagonal_P_commutes_with_boundary(const OrderedPartition& face);
/// The same identity for the top cell of K_{n+1}, evaluating the diagonal on
/// each facet through a preimage in P_n.
bool diagonal_K_commutes_with_boundary(int n);

}  // namespace ainf
