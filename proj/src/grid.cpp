#include "nilband/grid.hpp"

#include "nilband/util.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace nilband {

Grid::Grid(int d_, double extent_, int q_) : d(d_), extent(extent_), q(q_) {
  if (d < 1 || d > 4) throw std::invalid_argument("grid dimension must be in 1..4");
  if (q < 2) throw std::invalid_argument("grid needs q >= 2 samples per unit length");
  double ppa = extent * q;
  ppa_ = static_cast<int>(std::lround(ppa));
  if (ppa_ < 1 || std::abs(ppa - ppa_) > 1e-9)
    throw std::invalid_argument("grid extent times q must be a positive integer");
}

long Grid::point_count() const {
  long count = 1;
  for (int a = 0; a < d; ++a) count *= ppa_;
  return count;
}

void Grid::unflatten(long flat, int* multi) const {
  for (int a = d - 1; a >= 0; --a) {
    multi[a] = static_cast<int>(flat % ppa_);
    flat /= ppa_;
  }
}

long Grid::flatten(const int* multi) const {
  long flat = 0;
  for (int a = 0; a < d; ++a) flat = flat * ppa_ + multi[a];
  return flat;
}

Eigen::VectorXd Grid::point(long flat) const {
  int multi[4];
  unflatten(flat, multi);
  Eigen::VectorXd x(d);
  for (int a = 0; a < d; ++a) x[a] = coordinate(multi[a]);
  return x;
}

double GridFunction::norm_sq() const {
  return values.squaredNorm() * std::pow(grid.h(), grid.d);
}

double GridFunction::norm() const { return std::sqrt(norm_sq()); }

Complex inner_product(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("inner product across mismatched grids");
  // Eigen's dot conjugates its first factor; the convention here conjugates
  // the second.
  return b.values.dot(a.values) * std::pow(a.grid.h(), a.grid.d);
}

GridFunction unit_cube_indicator(const Grid& grid) {
  if (grid.extent < 1.0)
    throw std::invalid_argument("grid must cover the unit cube [-1/2, 1/2)");
  GridFunction f(grid);
  const long count = grid.point_count();
  int multi[4];
  for (long i = 0; i < count; ++i) {
    f.grid.unflatten(i, multi);
    bool inside = true;
    for (int a = 0; a < grid.d; ++a) {
      double x = grid.coordinate(multi[a]);
      if (x < -0.5 || x >= 0.5) inside = false;
    }
    if (inside) f.values[i] = 1.0;
  }
  return f;
}

namespace {

constexpr char kMagic[8] = {'N', 'I', 'L', 'B', 'A', 'N', 'D', 'G'};

struct Header {
  char magic[8];
  std::uint32_t version;
  std::uint32_t d;
  std::uint32_t points_per_axis;
  std::uint32_t reserved;
  double extent;
};
static_assert(sizeof(Header) == 32, "grid dump header must be exactly 32 bytes");

}  // namespace

void write_grid_function(const std::string& path, const GridFunction& f) {
  static_assert(std::endian::native == std::endian::little,
                "grid dumps are defined little-endian");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  Header header{};
  std::memcpy(header.magic, kMagic, sizeof(kMagic));
  header.version = 1;
  header.d = static_cast<std::uint32_t>(f.grid.d);
  header.points_per_axis = static_cast<std::uint32_t>(f.grid.points_per_axis());
  header.reserved = 0;
  header.extent = f.grid.extent;
  out.write(reinterpret_cast<const char*>(&header), sizeof(header));
  out.write(reinterpret_cast<const char*>(f.values.data()),
            static_cast<std::streamsize>(sizeof(Complex) * f.values.size()));
  if (!out) throw std::runtime_error("short write to '" + path + "'");
  out.close();

  nlohmann::ordered_json manifest;
  manifest["file"] = path;
  manifest["dtype"] = "complex128";
  manifest["byte_order"] = "little";
  manifest["d"] = f.grid.d;
  manifest["extent"] = f.grid.extent;
  manifest["q"] = f.grid.q;
  manifest["points_per_axis"] = f.grid.points_per_axis();
  manifest["point_count"] = f.grid.point_count();
  manifest["norm_sq"] = f.norm_sq();
  std::ofstream mout(path + ".manifest.json", std::ios::trunc);
  mout << manifest.dump(2) << "\n";
}

GridFunction read_grid_function(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Header header{};
  in.read(reinterpret_cast<char*>(&header), sizeof(header));
  if (!in || std::memcmp(header.magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("'" + path + "' is not a grid function dump");
  if (header.version != 1) throw std::runtime_error("unsupported grid dump version");
  int ppa = static_cast<int>(header.points_per_axis);
  if (header.extent <= 0 || ppa < 1) throw std::runtime_error("corrupt grid dump header");
  int q = static_cast<int>(std::lround(ppa / header.extent));
  Grid grid(static_cast<int>(header.d), header.extent, q);
  if (grid.points_per_axis() != ppa) throw std::runtime_error("inconsistent grid dump header");
  GridFunction f(grid);
  in.read(reinterpret_cast<char*>(f.values.data()),
          static_cast<std::streamsize>(sizeof(Complex) * f.values.size()));
  if (!in) throw std::runtime_error("short read from '" + path + "'");
  return f;
}

}  // namespace nilband
