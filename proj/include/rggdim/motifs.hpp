#pragma once

#include <cstddef>
#include <cstdint>

#include "rggdim/adjacency.hpp"

namespace rggdim {

/// Ordered motif sums over tuples of pairwise distinct nodes. Each field is the
/// raw integer sum; nothing is normalized by n^4 here.
///
///   tri3 = sum_{i,j,k} A_ij A_jk A_ki          (6 per triangle)
///   path2 = sum_{i,j,k} A_ij A_ik              (2 per 2-path)
///   raw1 = sum_{i,j,k,l} A_ij A_jk A_kl A_li A_ik   (4-cycle with chord ik)
///   raw2 = sum_{i,j,k,l} A_ij A_jk A_ki A_il        (triangle with pendant at i)
///   raw3 = sum_{i,j,k,l} A_ij A_ik A_il             (3-star centred at i)
///   raw4 = sum_{i,j,k,l} A_ij A_jk A_kl A_li        (4-cycle)
///   raw5 = sum_{i,j,k,l} A_ij A_jk A_kl             (3-path)
struct MotifCounts {
  std::size_t n = 0;
  std::int64_t tri3 = 0;
  std::int64_t path2 = 0;
  std::int64_t raw1 = 0;
  std::int64_t raw2 = 0;
  std::int64_t raw3 = 0;
  std::int64_t raw4 = 0;
  std::int64_t raw5 = 0;

  friend bool operator==(const MotifCounts&, const MotifCounts&) = default;
};

/// Literal enumeration of all ordered distinct triples and quadruples.
/// O(n^4); meant for n up to a few dozen.
MotifCounts motif_counts_oracle(const AdjacencyMatrix& a);

/// Closed forms over degrees, common-neighbour counts and walk counts
/// (c_ij = (A^2)_ij, d = A1):
///
///   tri3  = tr(A^3)
///   path2 = 1'A^2 1 - 1'A 1
///   raw1  = sum_{A_ik=1} c_ik (c_ik - 1)
///   raw2  = sum_i diag(A^3)_i d_i - 2 tr(A^3)
///   raw3  = sum_i d_i (d_i - 1)(d_i - 2)
///   raw4  = tr(A^4) - 2 sum_i d_i^2 + sum_i d_i
///   raw5  = 1'A^3 1 - 2 1'A^2 1 + 1'A 1 - tr(A^3)
///
/// Terms such as tr(A) and tr(A o A^3) that vanish on a zero diagonal are
/// omitted. Exact integer arithmetic, O(n^3 / 64) word operations.
MotifCounts motif_counts_fast(const AdjacencyMatrix& a);

}  // namespace rggdim
