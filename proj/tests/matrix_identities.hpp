#pragma once

// The matrix identities for the five 4-node sums, transcribed literally with
// dense integer matrices and no simplification. Used to show which of them
// agree with the defining sums.

#include <cstdint>
#include <vector>

#include "rggdim/adjacency.hpp"

namespace rggdim::testing {

using reference::IntMatrix;

inline IntMatrix hadamard(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out(i, j) = x(i, j) * y(i, j);
  return out;
}

inline std::vector<std::int64_t> row_sums(const IntMatrix& x) {
  std::vector<std::int64_t> out(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += x(i, j);
  return out;
}

struct MatrixIdentities {
  std::int64_t s1, s2, s3, s4, s5;
};

inline MatrixIdentities matrix_identities(const AdjacencyMatrix& g) {
  const IntMatrix a = IntMatrix::from(g);
  const IntMatrix a2 = a * a;
  const IntMatrix a3 = a2 * a;
  const IntMatrix a4 = a3 * a;
  const std::size_t n = a.size();
  const auto a1 = row_sums(a);

  MatrixIdentities p{};
  p.s1 = hadamard(hadamard(a2, a2), a).total() - hadamard(a2, a).total();

  // diag(A^3 - 2 A o A^2)' A1 - 1'[A^2 o A + A^2 o A^2]1
  const IntMatrix a_had_a2 = hadamard(a, a2);
  std::int64_t first = 0;
  for (std::size_t i = 0; i < n; ++i) first += (a3(i, i) - 2 * a_had_a2(i, i)) * a1[i];
  p.s2 = first - (hadamard(a2, a).total() + hadamard(a2, a2).total());

  std::int64_t cubes = 0;
  for (auto d : a1) cubes += d * d * d;
  p.s3 = cubes + 2 * a.total() - 3 * a2.total();

  p.s4 = a4.trace() - 2 * hadamard(a, a3).trace() + a.total() - 2 * a2.total();
  p.s5 = a3.total() - 2 * a2.total() + a.total() - a3.trace();
  return p;
}

}  // namespace rggdim::testing
