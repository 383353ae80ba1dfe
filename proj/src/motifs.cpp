#include "rggdim/motifs.hpp"

#include <vector>

#include "rggdim/checked.hpp"

namespace rggdim {

MotifCounts motif_counts_oracle(const AdjacencyMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::uint8_t> adj(n * n, 0);
  for (const auto& [i, j] : a.edges()) {
    adj[i * n + j] = 1;
    adj[j * n + i] = 1;
  }
  auto A = [&](std::size_t i, std::size_t j) -> std::int64_t { return adj[i * n + j]; };

  MotifCounts c;
  c.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        c.tri3 += A(i, j) * A(j, k) * A(k, i);
        c.path2 += A(i, j) * A(i, k);
        for (std::size_t l = 0; l < n; ++l) {
          if (l == i || l == j || l == k) continue;
          c.raw1 += A(i, j) * A(j, k) * A(k, l) * A(l, i) * A(i, k);
          c.raw2 += A(i, j) * A(j, k) * A(k, i) * A(i, l);
          c.raw3 += A(i, j) * A(i, k) * A(i, l);
          c.raw4 += A(i, j) * A(j, k) * A(k, l) * A(l, i);
          c.raw5 += A(i, j) * A(j, k) * A(k, l);
        }
      }
    }
  }
  return c;
}

MotifCounts motif_counts_fast(const AdjacencyMatrix& a) {
  using namespace checked;
  const PairKernelSums s = pair_kernel_sums(a);

  std::int64_t sum_d = 0;
  std::int64_t sum_d2 = 0;
  std::int64_t sum_d3_falling = 0;
  std::int64_t sum_diag3_d = 0;
  for (std::size_t i = 0; i < s.degree.size(); ++i) {
    const std::int64_t d = s.degree[i];
    sum_d = add(sum_d, d);
    sum_d2 = add(sum_d2, mul(d, d));
    sum_d3_falling = add(sum_d3_falling, mul(mul(d, d - 1), d - 2));
    sum_diag3_d = add(sum_diag3_d, mul(s.diag_a3[i], d));
  }
  const std::int64_t trace_a3 = mul(2, s.sum_c_adjacent);
  const std::int64_t trace_a4 = add(sum_d2, mul(2, s.sum_c2_all_pairs));
  const std::int64_t sum_a3 = mul(2, s.sum_deg_product_adjacent);

  MotifCounts c;
  c.n = a.size();
  c.tri3 = trace_a3;
  c.path2 = sub(sum_d2, sum_d);
  // Each unordered adjacent pair appears twice in the ordered sum.
  c.raw1 = mul(2, sub(s.sum_c2_adjacent, s.sum_c_adjacent));
  c.raw2 = sub(sum_diag3_d, mul(2, trace_a3));
  c.raw3 = sum_d3_falling;
  c.raw4 = add(sub(trace_a4, mul(2, sum_d2)), sum_d);
  c.raw5 = sub(add(sub(sum_a3, mul(2, sum_d2)), sum_d), trace_a3);
  return c;
}

}  // namespace rggdim
