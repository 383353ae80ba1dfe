#include "rggdim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rggdim/error.hpp"
#include "rggdim/rng.hpp"

namespace rggdim {

void RggParams::validate() const {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (m < 1) throw InvalidInput("m must be at least 1");
  if (!(r >= 0.0 && r <= 0.5)) throw InvalidInput("r must lie in [0, 0.5], got " + std::to_string(r));
}

PointCloud::PointCloud(std::size_t dimension, std::vector<double> coords)
    : dimension_(dimension), coords_(std::move(coords)) {
  if (dimension_ == 0) throw InvalidInput("point dimension must be at least 1");
  if (coords_.size() % dimension_ != 0) {
    throw InvalidInput("coordinate count is not a multiple of the dimension");
  }
  for (double x : coords_) {
    if (!(x >= 0.0 && x < 1.0)) throw InvalidInput("coordinate outside [0, 1)");
  }
}

PointCloud PointCloud::shifted(std::span<const double> offset) const {
  if (offset.size() != dimension_) throw InvalidInput("shift dimension mismatch");
  std::vector<double> out(coords_.size());
  for (std::size_t idx = 0; idx < coords_.size(); ++idx) {
    double x = coords_[idx] + offset[idx % dimension_];
    x -= std::floor(x);
    out[idx] = x < 1.0 ? x : 0.0;  // x - floor(x) can round up to 1.0
  }
  return PointCloud(dimension_, std::move(out));
}

double torus_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw InvalidInput("torus_distance: dimension mismatch (" + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()) + ")");
  }
  if (a.empty()) throw InvalidInput("torus_distance: points must have dimension >= 1");
  double dist = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double delta = std::fabs(a[k] - b[k]);
    dist = std::max(dist, std::min(delta, 1.0 - delta));
  }
  return dist;
}

PointCloud sample_points(const RggParams& params) {
  params.validate();
  const CounterStream stream(params.seed);
  std::vector<double> coords(params.n * params.m);
  for (std::size_t idx = 0; idx < coords.size(); ++idx) coords[idx] = stream.uniform_at(idx);
  return PointCloud(params.m, std::move(coords));
}

AdjacencyMatrix connect_points(const PointCloud& points, double r) {
  const std::size_t n = points.size();
  AdjacencyMatrix::Builder builder(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = points.point(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (torus_distance(xi, points.point(j)) <= r) builder.add_edge(i, j);
    }
  }
  return std::move(builder).build();
}

Rgg generate_rgg(const RggParams& params) {
  PointCloud points = sample_points(params);
  AdjacencyMatrix adjacency = connect_points(points, params.r);
  return Rgg{std::move(points), std::move(adjacency)};
}

}  // namespace rggdim
