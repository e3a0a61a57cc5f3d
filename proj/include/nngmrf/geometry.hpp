#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "nngmrf/csv.hpp"
#include "nngmrf/rng.hpp"

namespace nngmrf {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double squared_distance(const Point& a, const Point& b) noexcept {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

enum class ProcessKind { binomial, poisson };

inline const char* to_string(ProcessKind kind) noexcept {
  return kind == ProcessKind::binomial ? "binomial" : "poisson";
}

// A planar point configuration on the centered square [-side/2, side/2]^2
// with side^2 = n_nominal / density. Immutable after sampling.
struct PointSet {
  std::vector<Point> points;
  double density = 1.0;
  double side = 1.0;
  ProcessKind process_kind = ProcessKind::binomial;
  std::uint64_t seed = 0;

  std::size_t size() const noexcept { return points.size(); }
};

namespace detail {
inline void fill_uniform(std::vector<Point>& points, std::size_t n, double side, RngStream& rng) {
  points.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    points[i].x = rng.uniform(-side / 2.0, side / 2.0);
    points[i].y = rng.uniform(-side / 2.0, side / 2.0);
  }
}
}  // namespace detail

// n points i.i.d. uniform on the centered square of area n/density.
inline PointSet sample_binomial(std::size_t n, double density, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_binomial: n must be >= 1");
  if (!(density > 0.0)) throw std::invalid_argument("sample_binomial: density must be positive");
  PointSet ps;
  ps.density = density;
  ps.side = std::sqrt(static_cast<double>(n) / density);
  ps.process_kind = ProcessKind::binomial;
  ps.seed = seed;
  RngStream rng(seed);
  detail::fill_uniform(ps.points, n, ps.side, rng);
  return ps;
}

// Homogeneous Poisson process restricted to the square of area mean_n/density:
// the count is Poisson(mean_n) and positions are i.i.d. uniform given the count.
inline PointSet sample_poisson(double mean_n, double density, std::uint64_t seed) {
  if (!(mean_n > 0.0)) throw std::invalid_argument("sample_poisson: mean_n must be positive");
  if (!(density > 0.0)) throw std::invalid_argument("sample_poisson: density must be positive");
  PointSet ps;
  ps.density = density;
  ps.side = std::sqrt(mean_n / density);
  ps.process_kind = ProcessKind::poisson;
  ps.seed = seed;
  RngStream rng(seed);
  const std::uint64_t count = rng.poisson(mean_n);
  detail::fill_uniform(ps.points, count, ps.side, rng);
  return ps;
}

inline PointSet sample_point_set(ProcessKind kind, double n, double density, std::uint64_t seed) {
  if (kind == ProcessKind::binomial) {
    return sample_binomial(static_cast<std::size_t>(std::llround(n)), density, seed);
  }
  return sample_poisson(n, density, seed);
}

// points.csv: id,x,y
inline void write_points_csv(const PointSet& ps, std::ostream& out) {
  out << "id,x,y\n";
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    csv_row(out, {static_cast<unsigned long>(i), ps.points[i].x, ps.points[i].y});
  }
}

}  // namespace nngmrf
