#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace nilband {

using Complex = std::complex<double>;

/// Uniform truncated grid over [-T/2, T/2)^d with q samples per unit length.
/// Samples sit at cell midpoints x_i = -T/2 + (i + 1/2)/q, so the indicator
/// of [-1/2, 1/2)^d covers exactly q^d points and integer translations are
/// exact index shifts.
struct Grid {
  int d = 1;
  double extent = 8.0;  // T, full width of the window
  int q = 16;           // samples per unit length

  Grid() = default;
  Grid(int d_, double extent_, int q_);

  double h() const { return 1.0 / q; }
  int points_per_axis() const { return ppa_; }
  long point_count() const;

  double coordinate(int index) const { return -extent / 2 + (index + 0.5) / q; }
  /// Multi-index (row-major, axis 0 slowest) of a flat index.
  void unflatten(long flat, int* multi) const;
  long flatten(const int* multi) const;
  Eigen::VectorXd point(long flat) const;

  bool operator==(const Grid& other) const {
    return d == other.d && extent == other.extent && q == other.q;
  }

 private:
  int ppa_ = 0;
};

struct GridFunction {
  Grid grid;
  Eigen::VectorXcd values;

  GridFunction() = default;
  explicit GridFunction(const Grid& g) : grid(g), values(Eigen::VectorXcd::Zero(g.point_count())) {}

  /// Riemann-weighted squared norm h^d Σ |v|^2.
  double norm_sq() const;
  double norm() const;
};

/// h^d Σ a conj(b): linear in the first argument, conjugate-linear in the
/// second.
Complex inner_product(const GridFunction& a, const GridFunction& b);

/// Unit-mass indicator of [-1/2, 1/2)^d sampled at midpoints.
GridFunction unit_cube_indicator(const Grid& grid);

/// Flat little-endian complex<double> dump with a 32-byte header plus a JSON
/// manifest at `path` + ".manifest.json".
void write_grid_function(const std::string& path, const GridFunction& f);
GridFunction read_grid_function(const std::string& path);

}  // namespace nilband
