#include "rggdim/adjacency.hpp"

#include <bit>
#include <string>

#include "rggdim/checked.hpp"
#include "rggdim/error.hpp"

namespace rggdim {
namespace {

std::size_t words_for(std::size_t n) {
  return (n + AdjacencyMatrix::kWordBits - 1) / AdjacencyMatrix::kWordBits;
}

std::int64_t and_popcount(std::span<const AdjacencyMatrix::Word> x,
                          std::span<const AdjacencyMatrix::Word> y) {
  std::int64_t count = 0;
  for (std::size_t w = 0; w < x.size(); ++w) count += std::popcount(x[w] & y[w]);
  return count;
}

void check_index(std::size_t n, NodeId i) {
  if (i >= n) {
    throw InvalidInput("node index " + std::to_string(i) + " out of range for n = " +
                       std::to_string(n));
  }
}

}  // namespace

AdjacencyMatrix::Builder::Builder(std::size_t n)
    : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

AdjacencyMatrix::Builder& AdjacencyMatrix::Builder::add_edge(NodeId i, NodeId j) {
  check_index(n_, i);
  check_index(n_, j);
  if (i == j) return *this;
  bits_[i * words_ + j / kWordBits] |= Word{1} << (j % kWordBits);
  bits_[j * words_ + i / kWordBits] |= Word{1} << (i % kWordBits);
  return *this;
}

AdjacencyMatrix AdjacencyMatrix::Builder::build() && {
  return AdjacencyMatrix(n_, words_, std::move(bits_));
}

bool AdjacencyMatrix::has_edge(NodeId i, NodeId j) const {
  check_index(n_, i);
  check_index(n_, j);
  return (bits_[i * words_ + j / kWordBits] >> (j % kWordBits)) & 1U;
}

std::vector<Edge> AdjacencyMatrix::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId i = 0; i < n_; ++i) {
    const auto r = row(i);
    for (std::size_t w = (i + 1) / kWordBits; w < words_; ++w) {
      Word word = r[w];
      if (w == (i + 1) / kWordBits) word &= ~Word{0} << ((i + 1) % kWordBits);
      while (word != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(word));
        out.emplace_back(i, w * kWordBits + bit);
        word &= word - 1;
      }
    }
  }
  return out;
}

std::size_t AdjacencyMatrix::edge_count() const noexcept {
  std::size_t total = 0;
  for (Word w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

AdjacencyMatrix from_edge_pairs(std::size_t n, std::span<const Edge> pairs) {
  AdjacencyMatrix::Builder builder(n);
  for (const auto& [i, j] : pairs) builder.add_edge(i, j);
  return std::move(builder).build();
}

AdjacencyMatrix permute(const AdjacencyMatrix& a, std::span<const NodeId> perm) {
  if (perm.size() != a.size()) throw InvalidInput("permutation length does not match node count");
  AdjacencyMatrix::Builder builder(a.size());
  for (const auto& [i, j] : a.edges()) builder.add_edge(perm[i], perm[j]);
  return std::move(builder).build();
}

DegreeVector degrees(const AdjacencyMatrix& a) {
  DegreeVector d(a.size(), 0);
  for (NodeId i = 0; i < a.size(); ++i) {
    for (auto w : a.row(i)) d[i] += std::popcount(w);
  }
  return d;
}

std::int64_t common_neighbors(const AdjacencyMatrix& a, NodeId i, NodeId j) {
  check_index(a.size(), i);
  check_index(a.size(), j);
  if (i == j) throw InvalidInput("common_neighbors requires two distinct nodes");
  return and_popcount(a.row(i), a.row(j));
}

PairKernelSums pair_kernel_sums(const AdjacencyMatrix& a) {
  using namespace checked;
  const std::size_t n = a.size();
  PairKernelSums s;
  s.degree = degrees(a);
  s.diag_a3.assign(n, 0);
  for (NodeId i = 0; i < n; ++i) {
    const auto ri = a.row(i);
    std::int64_t c2_row = 0;
    std::int64_t c2_adj_row = 0;
    std::int64_t c_adj_row = 0;
    std::int64_t dd_row = 0;
    for (NodeId j = i + 1; j < n; ++j) {
      const std::int64_t c = and_popcount(ri, a.row(j));
      c2_row = add(c2_row, c * c);
      if ((ri[j / AdjacencyMatrix::kWordBits] >> (j % AdjacencyMatrix::kWordBits)) & 1U) {
        c_adj_row += c;
        c2_adj_row = add(c2_adj_row, c * c);
        dd_row = add(dd_row, mul(s.degree[i], s.degree[j]));
        s.diag_a3[i] += c;
        s.diag_a3[j] += c;
      }
    }
    s.sum_c2_all_pairs = add(s.sum_c2_all_pairs, c2_row);
    s.sum_c_adjacent = add(s.sum_c_adjacent, c_adj_row);
    s.sum_c2_adjacent = add(s.sum_c2_adjacent, c2_adj_row);
    s.sum_deg_product_adjacent = add(s.sum_deg_product_adjacent, dd_row);
  }
  return s;
}

ClosedWalkCounts closed_walk_counts(const AdjacencyMatrix& a) {
  using namespace checked;
  const PairKernelSums s = pair_kernel_sums(a);
  ClosedWalkCounts out;
  std::int64_t sum_d2 = 0;
  for (auto d : s.degree) sum_d2 = add(sum_d2, mul(d, d));
  // (A^2)_ii = d_i and (A^2)_ij = c_ij, so tr(A^4) = sum_ij (A^2)_ij^2.
  out.trace_a4 = add(sum_d2, mul(2, s.sum_c2_all_pairs));
  out.trace_a3 = mul(2, s.sum_c_adjacent);
  out.sum_a2 = sum_d2;
  out.sum_a3 = mul(2, s.sum_deg_product_adjacent);
  out.diag_a3 = s.diag_a3;
  return out;
}

namespace reference {

IntMatrix IntMatrix::from(const AdjacencyMatrix& a) {
  IntMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a.has_edge(i, j) ? 1 : 0;
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const std::int64_t lhs = (*this)(i, k);
      if (lhs == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += lhs * rhs(k, j);
    }
  }
  return out;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

std::int64_t IntMatrix::total() const {
  std::int64_t t = 0;
  for (auto v : v_) t += v;
  return t;
}

ClosedWalkCounts closed_walk_counts_dense(const AdjacencyMatrix& a) {
  const IntMatrix m1 = IntMatrix::from(a);
  const IntMatrix m2 = m1 * m1;
  const IntMatrix m3 = m2 * m1;
  const IntMatrix m4 = m3 * m1;
  ClosedWalkCounts out;
  out.trace_a3 = m3.trace();
  out.trace_a4 = m4.trace();
  out.sum_a2 = m2.total();
  out.sum_a3 = m3.total();
  out.diag_a3.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.diag_a3[i] = m3(i, i);
  return out;
}

}  // namespace reference
}  // namespace rggdim
