#include "nilband/representation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nilband {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Integer index shift of a grid-aligned translation amount, or throws.
int aligned_shift(const Rational& amount, int q) {
  Rational scaled = amount * q;
  if (scaled.get_den() != 1)
    throw std::invalid_argument("translation " + to_string(amount) +
                                " is not aligned to the 1/" + std::to_string(q) + " grid");
  if (!scaled.get_num().fits_slong_p())
    throw std::invalid_argument("translation out of range");
  return static_cast<int>(scaled.get_num().get_si());
}

// Output index range of a shifted copy of v: the translate of v's support
// box clipped to the window. Everything outside is exactly zero, so the
// evaluation loops can skip it.
struct ShiftedBox {
  int lo[4];
  int hi[4];  // exclusive
  bool empty = false;
};

ShiftedBox shifted_support(const GridFunction& v, const int* shift) {
  const Grid& grid = v.grid;
  const int ppa = grid.points_per_axis();
  int lo[4], hi[4];
  for (int a = 0; a < grid.d; ++a) {
    lo[a] = ppa;
    hi[a] = 0;
  }
  int multi[4];
  bool any = false;
  for (long i = 0; i < v.values.size(); ++i) {
    if (v.values[i] == Complex(0.0, 0.0)) continue;
    any = true;
    grid.unflatten(i, multi);
    for (int a = 0; a < grid.d; ++a) {
      lo[a] = std::min(lo[a], multi[a]);
      hi[a] = std::max(hi[a], multi[a] + 1);
    }
  }
  ShiftedBox box;
  if (!any) {
    box.empty = true;
    return box;
  }
  for (int a = 0; a < grid.d; ++a) {
    box.lo[a] = std::max(0, lo[a] + shift[a]);
    box.hi[a] = std::min(ppa, hi[a] + shift[a]);
    if (box.lo[a] >= box.hi[a]) box.empty = true;
  }
  return box;
}

}  // namespace

GridFunction pi_action(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda,
                       const GroupElement& gamma, const GridFunction& v, double eps_trunc) {
  const int d = spec.d(), dz = spec.dim_z();
  if (lambda.size() != dz) throw std::invalid_argument("lambda must have length n - 2d");
  if (v.grid.d != d) throw std::invalid_argument("grid dimension must equal d");
  if (gamma.z.size() != dz || gamma.l.size() != d || gamma.m.size() != d)
    throw std::invalid_argument("group element does not match the spec");

  const Grid& grid = v.grid;
  int shift[4];
  for (int j = 0; j < d; ++j) shift[j] = aligned_shift(gamma.m[j], grid.q);

  // Central character phase.
  double central_phase = 0.0;
  for (int k = 0; k < dz; ++k) central_phase += to_double(gamma.z[k]) * lambda[k];

  // Frequency of the x-linear phase, assembled term by term from the bracket
  // table:  ω_k = -Σ_j l_j λ[X_k, Y_j] - Σ_{j>k} m_j λ[X_k, X_j].
  Eigen::VectorXd omega = Eigen::VectorXd::Zero(d);
  for (int k = 1; k <= d; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= d; ++j) {
      if (gamma.l[j - 1] == 0) continue;
      RationalVector value = spec.bracket_x_y(k, j);
      double pairing = 0.0;
      for (int t = 0; t < dz; ++t)
        if (value[t] != 0) pairing += lambda[t] * to_double(value[t]);
      acc += to_double(gamma.l[j - 1]) * pairing;
    }
    for (int j = k + 1; j <= d; ++j) {
      if (gamma.m[j - 1] == 0) continue;
      RationalVector value = spec.bracket_x_x(k, j);
      double pairing = 0.0;
      for (int t = 0; t < dz; ++t)
        if (value[t] != 0) pairing += lambda[t] * to_double(value[t]);
      acc += to_double(gamma.m[j - 1]) * pairing;
    }
    omega[k - 1] = -acc;
  }

  GridFunction out(grid);
  const Complex central_factor = std::polar(1.0, kTwoPi * central_phase);
  ShiftedBox box = shifted_support(v, shift);
  if (!box.empty) {
    int multi[4];
    for (int a = 0; a < d; ++a) multi[a] = box.lo[a];
    while (true) {
      int src[4];
      for (int a = 0; a < d; ++a) src[a] = multi[a] - shift[a];
      Complex value = v.values[grid.flatten(src)];
      if (value != Complex(0.0, 0.0)) {
        double phase = 0.0;
        for (int a = 0; a < d; ++a) phase += omega[a] * grid.coordinate(multi[a]);
        out.values[grid.flatten(multi)] = central_factor * std::polar(1.0, kTwoPi * phase) * value;
      }
      int pos = d - 1;
      for (; pos >= 0; --pos) {
        if (++multi[pos] < box.hi[pos]) break;
        multi[pos] = box.lo[pos];
      }
      if (pos < 0) break;
    }
  }

  double total = v.norm_sq();
  if (total > 0.0) {
    double lost = total - out.norm_sq();
    if (lost > eps_trunc * total)
      throw std::domain_error("translated support leaves the window: truncated mass fraction " +
                              std::to_string(lost / total));
  }
  return out;
}

GridFunction chirp(const Eigen::MatrixXd& x_lambda, const GridFunction& v, int sign) {
  const int d = v.grid.d;
  if (x_lambda.rows() != d || x_lambda.cols() != d)
    throw std::invalid_argument("X(λ) must be d x d");
  GridFunction out(v.grid);
  const long count = v.grid.point_count();
  int multi[4];
  double coords[4];
  for (long i = 0; i < count; ++i) {
    if (v.values[i] == Complex(0.0, 0.0)) continue;
    v.grid.unflatten(i, multi);
    for (int a = 0; a < d; ++a) coords[a] = v.grid.coordinate(multi[a]);
    double quad = 0.0;
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) quad += x_lambda(a, b) * coords[a] * coords[b];
    out.values[i] = std::polar(1.0, sign * kTwoPi * quad) * v.values[i];
  }
  return out;
}

GridFunction window_phi(const SpectralPoint& sp, const Grid& grid) {
  GridFunction indicator = unit_cube_indicator(grid);
  GridFunction out = chirp(sp.x, indicator, -1);
  out.values *= std::sqrt(std::abs(sp.det_s));
  return out;
}

GridFunction gabor_member(const SpectralPoint& sp, const GridFunction& v,
                          const Eigen::VectorXi& k, const Eigen::VectorXi& l, double eps_trunc) {
  const int d = v.grid.d;
  if (k.size() != d || l.size() != d) throw std::invalid_argument("index dimension mismatch");
  Eigen::VectorXd kd = k.cast<double>(), ld = l.cast<double>();
  Eigen::VectorXd omega = -(sp.s * ld) - (sp.x * kd);

  const Grid& grid = v.grid;
  GridFunction out(grid);
  int shift[4];
  for (int a = 0; a < d; ++a) shift[a] = k[a] * grid.q;
  ShiftedBox box = shifted_support(v, shift);
  if (!box.empty) {
    int multi[4];
    for (int a = 0; a < d; ++a) multi[a] = box.lo[a];
    while (true) {
      int src[4];
      for (int a = 0; a < d; ++a) src[a] = multi[a] - shift[a];
      Complex value = v.values[grid.flatten(src)];
      if (value != Complex(0.0, 0.0)) {
        double phase = 0.0;
        for (int a = 0; a < d; ++a) phase += omega[a] * grid.coordinate(multi[a]);
        out.values[grid.flatten(multi)] = std::polar(1.0, kTwoPi * phase) * value;
      }
      int pos = d - 1;
      for (; pos >= 0; --pos) {
        if (++multi[pos] < box.hi[pos]) break;
        multi[pos] = box.lo[pos];
      }
      if (pos < 0) break;
    }
  }

  double total = v.norm_sq();
  if (total > 0.0) {
    double lost = total - out.norm_sq();
    if (lost > eps_trunc * total)
      throw std::domain_error("gabor member translation leaves the window: lost fraction " +
                              std::to_string(lost / total));
  }
  return out;
}

std::vector<std::pair<GaborIndex, GridFunction>> gabor_system(const SpectralPoint& sp,
                                                              const GridFunction& v, int k_radius,
                                                              int l_radius) {
  const int d = v.grid.d;
  std::vector<std::pair<GaborIndex, GridFunction>> members;
  std::vector<int> digits(2 * d, 0);
  auto radius_at = [&](int pos) { return pos < d ? k_radius : l_radius; };
  for (int pos = 0; pos < 2 * d; ++pos) digits[pos] = -radius_at(pos);
  while (true) {
    GaborIndex index;
    index.k = Eigen::VectorXi(d);
    index.l = Eigen::VectorXi(d);
    for (int a = 0; a < d; ++a) {
      index.k[a] = digits[a];
      index.l[a] = digits[d + a];
    }
    members.emplace_back(index, gabor_member(sp, v, index.k, index.l));
    int pos = 2 * d - 1;
    for (; pos >= 0; --pos) {
      if (++digits[pos] <= radius_at(pos)) break;
      digits[pos] = -radius_at(pos);
    }
    if (pos < 0) break;
  }
  return members;
}

}  // namespace nilband
