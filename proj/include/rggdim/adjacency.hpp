#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rggdim {

using NodeId = std::size_t;
using Edge = std::pair<NodeId, NodeId>;
using DegreeVector = std::vector<std::int64_t>;

/// Symmetric 0/1 matrix with zero diagonal. Row i is stored as ceil(n/64)
/// 64-bit words, bit j of the row set iff nodes i and j are adjacent.
///
/// Instances are immutable once built; build through `from_edge_pairs` or
/// `AdjacencyMatrix::Builder`.
class AdjacencyMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  class Builder {
   public:
    explicit Builder(std::size_t n);

    /// Sets (i, j) and (j, i). Self-pairs are ignored. Throws InvalidInput if
    /// either index is out of range.
    Builder& add_edge(NodeId i, NodeId j);

    AdjacencyMatrix build() &&;

   private:
    std::size_t n_;
    std::size_t words_;
    std::vector<Word> bits_;
  };

  AdjacencyMatrix() = default;

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool has_edge(NodeId i, NodeId j) const;

  std::span<const Word> row(NodeId i) const noexcept {
    return {bits_.data() + i * words_, words_};
  }

  /// Undirected edges (i < j) in ascending lexicographic order.
  std::vector<Edge> edges() const;

  std::size_t edge_count() const noexcept;

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

 private:
  AdjacencyMatrix(std::size_t n, std::size_t words, std::vector<Word> bits)
      : n_(n), words_(words), bits_(std::move(bits)) {}

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

/// Builds the graph on n nodes with the given undirected edges. Self-pairs are
/// dropped and duplicates are idempotent. Throws InvalidInput on an index >= n.
AdjacencyMatrix from_edge_pairs(std::size_t n, std::span<const Edge> pairs);

/// Relabels nodes: node i of the input becomes node perm[i] of the output.
AdjacencyMatrix permute(const AdjacencyMatrix& a, std::span<const NodeId> perm);

DegreeVector degrees(const AdjacencyMatrix& a);

/// Number of common neighbours of i and j, i.e. (A^2)_ij. Requires i != j.
std::int64_t common_neighbors(const AdjacencyMatrix& a, NodeId i, NodeId j);

struct ClosedWalkCounts {
  std::int64_t trace_a3 = 0;       // tr(A^3)
  std::int64_t trace_a4 = 0;       // tr(A^4)
  std::int64_t sum_a2 = 0;         // 1'A^2 1
  std::int64_t sum_a3 = 0;         // 1'A^3 1
  std::vector<std::int64_t> diag_a3;  // diag(A^3)

  friend bool operator==(const ClosedWalkCounts&, const ClosedWalkCounts&) = default;
};

/// Aggregates over all unordered pairs {i, j} of the common-neighbour count
/// c_ij = popcount(row_i & row_j). One O(n^2 * n/64) pass feeds both the walk
/// counts and the 4-node motif sums.
struct PairKernelSums {
  DegreeVector degree;
  std::vector<std::int64_t> diag_a3;   // sum over neighbours j of c_ij
  std::int64_t sum_c2_all_pairs = 0;   // sum_{i<j} c_ij^2
  std::int64_t sum_c_adjacent = 0;     // sum_{i<j, A_ij=1} c_ij
  std::int64_t sum_c2_adjacent = 0;    // sum_{i<j, A_ij=1} c_ij^2
  std::int64_t sum_deg_product_adjacent = 0;  // sum_{i<j, A_ij=1} d_i d_j
};

PairKernelSums pair_kernel_sums(const AdjacencyMatrix& a);

/// Walk counts from the bit-row kernels. Exact; throws std::overflow_error if an
/// intermediate would leave the int64 range.
ClosedWalkCounts closed_walk_counts(const AdjacencyMatrix& a);

namespace reference {

/// Plain row-major integer matrix. Slow, obviously correct; kept as the
/// cross-check for the bit kernels.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), v_(n * n, 0) {}
  static IntMatrix from(const AdjacencyMatrix& a);

  std::size_t size() const noexcept { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  std::int64_t trace() const;
  std::int64_t total() const;

 private:
  std::size_t n_;
  std::vector<std::int64_t> v_;
};

/// Same contract as rggdim::closed_walk_counts, via dense integer matrix powers.
ClosedWalkCounts closed_walk_counts_dense(const AdjacencyMatrix& a);

}  // namespace reference
}  // namespace rggdim
