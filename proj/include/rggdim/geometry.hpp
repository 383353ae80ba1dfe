#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rggdim/adjacency.hpp"

namespace rggdim {

/// Parameters of a torus random geometric graph: n nodes uniform on [0,1)^m,
/// joined when their wrap-around L-infinity distance is at most r.
struct RggParams {
  std::size_t n = 0;
  std::size_t m = 1;
  double r = 0.0;
  std::uint64_t seed = 0;

  /// Throws InvalidInput unless n >= 1, m >= 1 and 0 <= r <= 0.5.
  void validate() const;
};

/// n points in [0,1)^m, row-major.
class PointCloud {
 public:
  /// Throws InvalidInput if the coordinate count is not n*m or any coordinate
  /// is outside [0, 1).
  PointCloud(std::size_t dimension, std::vector<double> coords);

  std::size_t size() const noexcept { return dimension_ == 0 ? 0 : coords_.size() / dimension_; }
  std::size_t dimension() const noexcept { return dimension_; }

  std::span<const double> point(std::size_t i) const noexcept {
    return {coords_.data() + i * dimension_, dimension_};
  }
  std::span<const double> coordinates() const noexcept { return coords_; }

  /// Adds `offset` to every point, reducing each coordinate modulo 1.
  PointCloud shifted(std::span<const double> offset) const;

  friend bool operator==(const PointCloud&, const PointCloud&) = default;

 private:
  std::size_t dimension_;
  std::vector<double> coords_;
};

/// max_k min(|a_k - b_k|, 1 - |a_k - b_k|). Throws InvalidInput on a
/// dimension mismatch or an empty point.
double torus_distance(std::span<const double> a, std::span<const double> b);

/// Coordinate k of point i is element i*m + k of the counter stream keyed by
/// params.seed, so every node can be drawn independently of the others.
PointCloud sample_points(const RggParams& params);

/// A_ij = 1 iff i != j and torus_distance(X_i, X_j) <= r.
AdjacencyMatrix connect_points(const PointCloud& points, double r);

struct Rgg {
  PointCloud points;
  AdjacencyMatrix adjacency;
};

Rgg generate_rgg(const RggParams& params);

}  // namespace rggdim
