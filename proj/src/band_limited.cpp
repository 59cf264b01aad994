#include "nilband/band_limited.hpp"

#include "nilband/util.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace nilband {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double rational_to_double(const Rational& r) { return to_double(r); }

// Integer index shift of a grid-aligned coordinate, or throws.
long aligned_steps(const Rational& amount, int q, const char* what) {
  Rational scaled = amount * q;
  if (scaled.get_den() != 1)
    throw std::invalid_argument(std::string(what) + " coordinate " + to_string(amount) +
                                " is not aligned to the 1/" + std::to_string(q) + " grid");
  return scaled.get_num().get_si();
}

struct SupportBox {
  int lo[4];  // inclusive
  int hi[4];  // exclusive
  bool empty = true;
};

SupportBox support_box(const Grid& grid, const Eigen::VectorXcd& values) {
  SupportBox box;
  for (int a = 0; a < grid.d; ++a) {
    box.lo[a] = grid.points_per_axis();
    box.hi[a] = 0;
  }
  int multi[4];
  for (long i = 0; i < values.size(); ++i) {
    if (values[i] == Complex(0.0, 0.0)) continue;
    box.empty = false;
    grid.unflatten(i, multi);
    for (int a = 0; a < grid.d; ++a) {
      box.lo[a] = std::min(box.lo[a], multi[a]);
      box.hi[a] = std::max(box.hi[a], multi[a] + 1);
    }
  }
  return box;
}

std::vector<SupportBox> fiber_boxes(const Grid& grid, const std::vector<Eigen::VectorXcd>& fibers) {
  std::vector<SupportBox> boxes;
  boxes.reserve(fibers.size());
  for (const auto& fiber : fibers) boxes.push_back(support_box(grid, fiber));
  return boxes;
}

Complex tf_pairing_boxed(const SpectralPoint& sp, const Grid& grid, const Eigen::VectorXcd& vh,
                         const SupportBox& vh_box, const Eigen::VectorXcd& vf,
                         const Eigen::VectorXd& l, const Eigen::VectorXd& m) {
  const int d = grid.d;
  const int ppa = grid.points_per_axis();
  long shift[4];
  for (int a = 0; a < d; ++a) {
    double steps = m[a] * grid.q;
    shift[a] = std::lround(steps);
    if (std::abs(steps - shift[a]) > 1e-9)
      throw std::invalid_argument("translation not aligned to the grid");
  }
  if (vh_box.empty) return Complex(0.0, 0.0);
  Eigen::VectorXd omega = sp.s * l + sp.x * m;

  int lo[4], hi[4];
  for (int a = 0; a < d; ++a) {
    lo[a] = static_cast<int>(std::max<long>(vh_box.lo[a], shift[a]));
    hi[a] = static_cast<int>(std::min<long>(vh_box.hi[a], ppa + shift[a]));
    if (lo[a] >= hi[a]) return Complex(0.0, 0.0);
  }

  Complex acc(0.0, 0.0);
  int idx[4];
  for (int a = 0; a < d; ++a) idx[a] = lo[a];
  while (true) {
    long flat = grid.flatten(idx);
    Complex hv = vh[flat];
    if (hv != Complex(0.0, 0.0)) {
      int src[4];
      for (int a = 0; a < d; ++a) src[a] = idx[a] - static_cast<int>(shift[a]);
      Complex fv = vf[grid.flatten(src)];
      if (fv != Complex(0.0, 0.0)) {
        double phase = 0.0;
        for (int a = 0; a < d; ++a) phase += omega[a] * grid.coordinate(idx[a]);
        acc += hv * std::conj(fv) * std::polar(1.0, kTwoPi * phase);
      }
    }
    int pos = d - 1;
    for (; pos >= 0; --pos) {
      if (++idx[pos] < hi[pos]) break;
      idx[pos] = lo[pos];
    }
    if (pos < 0) break;
  }
  return acc * std::pow(grid.h(), d);
}

}  // namespace

std::shared_ptr<const SpectralQuadrature> make_spectral_quadrature(const LieAlgebraSpec& spec,
                                                                   int q_lambda) {
  if (q_lambda < 2) throw std::invalid_argument("spectral quadrature needs q_lambda >= 2");
  const int dz = spec.dim_z();
  std::uint64_t cells = 1;
  for (int k = 0; k < dz; ++k) {
    cells *= static_cast<std::uint64_t>(q_lambda);
    if (cells > 50'000'000ull) throw std::length_error("spectral quadrature too large");
  }
  auto quad = std::make_shared<SpectralQuadrature>();
  quad->q_lambda = q_lambda;
  const double volume = std::pow(1.0 / q_lambda, dz);
  std::vector<double> mu(cells, 0.0);
  for (std::uint64_t cell = 0; cell < cells; ++cell) {
    RationalVector lambda(dz);
    std::uint64_t rem = cell;
    for (int k = dz - 1; k >= 0; --k) {
      int idx = static_cast<int>(rem % q_lambda);
      rem /= q_lambda;
      lambda[k] = make_rational(2 * idx + 1 - q_lambda, 2 * q_lambda);
    }
    RegionFlags flags = region_flags(spec, lambda);
    if (!flags.in_i) continue;
    Eigen::VectorXd lam(dz);
    for (int k = 0; k < dz; ++k) lam[k] = rational_to_double(lambda[k]);
    SpectralPoint sp = build_spectral_point(spec, lam);
    quad->points.push_back(std::move(sp));
    quad->weights.push_back(volume);
    quad->densities.push_back(std::abs(flags.det_value));
    mu[cell] = volume * std::abs(flags.det_value);
  }
  quad->mu_estimate = pairwise_sum(mu);
  if (quad->points.empty()) throw std::runtime_error("empty spectral quadrature: no cells in I");
  return quad;
}

VectorFieldU constant_indicator_field(const SpectralQuadrature& quad, const Grid& grid) {
  VectorFieldU field;
  field.grid = grid;
  GridFunction chi = unit_cube_indicator(grid);
  double norm = chi.norm();
  Eigen::VectorXcd u = chi.values / norm;
  field.u.assign(quad.size(), u);
  return field;
}

double BandLimitedVector::norm_sq() const {
  std::vector<double> contrib(quad->size(), 0.0);
  const double cell = std::pow(grid.h(), grid.d);
  for (std::size_t k = 0; k < quad->size(); ++k)
    contrib[k] = quad->weights[k] * quad->densities[k] * v[k].squaredNorm() * cell;
  return pairwise_sum(contrib);
}

BandLimitedVector synthesize_admissible_f(const LieAlgebraSpec& spec,
                                          std::shared_ptr<const SpectralQuadrature> quad,
                                          const VectorFieldU& u_field, const Grid& grid) {
  if (!quad || quad->points.empty()) throw std::invalid_argument("empty spectral quadrature");
  if (!(u_field.grid == grid)) throw std::invalid_argument("u-field grid mismatch");
  const double cell = std::pow(grid.h(), grid.d);
  for (const auto& u : u_field.u)
    if (std::abs(u.squaredNorm() * cell - 1.0) > 1e-12)
      throw std::invalid_argument("u-field fibers must be unit vectors");
  (void)spec;
  BandLimitedVector f;
  f.quad = quad;
  f.grid = grid;
  f.v.reserve(quad->size());
  GridFunction chi = unit_cube_indicator(grid);
  for (const auto& sp : quad->points) {
    // v_λ = |det B|^{-1/2} φ(λ) = U(λ) χ, a unit fiber.
    GridFunction fiber = chirp(sp.x, chi, -1);
    f.v.push_back(fiber.values);
  }
  return f;
}

BandLimitedVector make_random_bandlimited(const LieAlgebraSpec& spec,
                                          std::shared_ptr<const SpectralQuadrature> quad,
                                          const Grid& grid, std::uint64_t seed) {
  if (!quad || quad->points.empty()) throw std::invalid_argument("empty spectral quadrature");
  const int d = grid.d, dz = spec.dim_z();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  constexpr int kModes = 3;
  // Smooth cube modes Π_a cos(π x_a) e^{2πi j x_a}; they vanish at the cube
  // boundary so the Γ₁ tails decay quickly.
  std::vector<Eigen::VectorXcd> modes;
  GridFunction chi = unit_cube_indicator(grid);
  for (int j = 0; j < kModes; ++j) {
    Eigen::VectorXcd mode = Eigen::VectorXcd::Zero(grid.point_count());
    int multi[4];
    for (long i = 0; i < grid.point_count(); ++i) {
      if (chi.values[i] == Complex(0.0, 0.0)) continue;
      grid.unflatten(i, multi);
      double envelope = 1.0, phase = 0.0;
      for (int a = 0; a < d; ++a) {
        double x = grid.coordinate(multi[a]);
        envelope *= std::cos(std::numbers::pi * x);
        phase += (j - 1) * x;
      }
      mode[i] = envelope * std::polar(1.0, kTwoPi * phase);
    }
    mode /= std::sqrt(mode.squaredNorm() * std::pow(grid.h(), d));
    modes.push_back(std::move(mode));
  }

  // Random low-order λ-profiles, tapered to vanish on the boundary of K.
  std::vector<std::array<Complex, 3>> coeffs(kModes);
  for (int j = 0; j < kModes; ++j)
    for (int t = 0; t < 3; ++t) coeffs[j][t] = Complex(normal(rng), normal(rng));

  BandLimitedVector g;
  g.quad = quad;
  g.grid = grid;
  g.v.reserve(quad->size());
  for (std::size_t p = 0; p < quad->points.size(); ++p) {
    const auto& sp = quad->points[p];
    double taper = 1.0, s1 = 0.0, s2 = 0.0;
    for (int k = 0; k < dz; ++k) {
      taper *= std::cos(std::numbers::pi * sp.lambda[k]);
      s1 += sp.lambda[k];
      s2 += sp.lambda[k] * sp.lambda[k];
    }
    // Weighting by the Plancherel density keeps the fibers small where the
    // modulation lattice S(λ)Z^d degenerates, so Γ-sums converge at desk
    // scale radii.
    taper *= quad->densities[p] * quad->densities[p];
    Eigen::VectorXcd fiber = Eigen::VectorXcd::Zero(grid.point_count());
    for (int j = 0; j < kModes; ++j) {
      Complex profile = (coeffs[j][0] + coeffs[j][1] * s1 + coeffs[j][2] * s2) * taper;
      fiber += profile * modes[j];
    }
    g.v.push_back(std::move(fiber));
  }
  double norm = std::sqrt(g.norm_sq());
  if (norm > 0)
    for (auto& fiber : g.v) fiber /= norm;
  return g;
}

Complex tf_pairing(const SpectralPoint& sp, const Grid& grid, const Eigen::VectorXcd& vh,
                   const Eigen::VectorXcd& vf, const Eigen::VectorXd& l,
                   const Eigen::VectorXd& m) {
  // The pairing phase is the conjugate of M_{-Sl-Xm}, i.e. +S l + X m.
  return tf_pairing_boxed(sp, grid, vh, support_box(grid, vh), vf, l, m);
}

namespace {

void check_compatible(const BandLimitedVector& h, const BandLimitedVector& f) {
  if (h.quad != f.quad || !(h.grid == f.grid))
    throw std::invalid_argument("band-limited vectors must share quadrature and grid");
}

// Central Fourier phase e^{-2πi <z, λ>}.
Complex central_phase(const Eigen::VectorXd& lambda, const Eigen::VectorXd& z) {
  double phase = 0.0;
  for (Eigen::Index k = 0; k < lambda.size(); ++k) phase -= z[k] * lambda[k];
  return std::polar(1.0, kTwoPi * phase);
}

}  // namespace

Complex coefficient_transform(const BandLimitedVector& h, const BandLimitedVector& f,
                              const GroupElement& x) {
  check_compatible(h, f);
  const auto& quad = *h.quad;
  const int d = h.grid.d, dz = static_cast<int>(quad.points.front().lambda.size());
  if (x.z.size() != dz || x.l.size() != d || x.m.size() != d)
    throw std::invalid_argument("group element does not match the quadrature");
  Eigen::VectorXd zd(dz), ld(d), md(d);
  for (int k = 0; k < dz; ++k) zd[k] = rational_to_double(x.z[k]);
  for (int a = 0; a < d; ++a) {
    ld[a] = rational_to_double(x.l[a]);
    md[a] = rational_to_double(x.m[a]);
    aligned_steps(x.m[a], h.grid.q, "translation");
  }
  Complex acc(0.0, 0.0);
  for (std::size_t k = 0; k < quad.size(); ++k) {
    Complex pairing = tf_pairing(quad.points[k], h.grid, h.v[k], f.v[k], ld, md);
    if (pairing == Complex(0.0, 0.0)) continue;
    acc += quad.weights[k] * quad.densities[k] * central_phase(quad.points[k].lambda, zd) * pairing;
  }
  return acc;
}

std::vector<double> parseval_ratio_curve(const BandLimitedVector& f, const BandLimitedVector& g,
                                         const std::vector<int>& radii) {
  check_compatible(f, g);
  if (radii.empty()) throw std::invalid_argument("need at least one radius");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (radii[i] <= radii[i - 1]) throw std::invalid_argument("radii must be ascending");
  const int rmax = radii.back();
  const auto& quad = *f.quad;
  const int d = f.grid.d, dz = static_cast<int>(quad.points.front().lambda.size());
  const std::size_t nl = quad.size();

  std::vector<double> bucket(rmax + 1, 0.0);
  std::vector<SupportBox> g_boxes = fiber_boxes(g.grid, g.v);

  // Enumerate η = (l, m) in Γ₁ ∩ box; the translated-support shortcut keeps
  // only the m with overlapping windows (an exact zero otherwise).
  std::vector<int> eta(2 * d, -rmax);
  Eigen::VectorXcd c(nl);
  while (true) {
    Eigen::VectorXd ld(d), md(d);
    int eta_radius = 0;
    for (int a = 0; a < d; ++a) {
      ld[a] = eta[a];
      md[a] = eta[d + a];
      eta_radius = std::max({eta_radius, std::abs(eta[a]), std::abs(eta[d + a])});
    }
    bool any = false;
    for (std::size_t k = 0; k < nl; ++k) {
      Complex pairing =
          tf_pairing_boxed(quad.points[k], f.grid, g.v[k], g_boxes[k], f.v[k], ld, md);
      c[k] = quad.weights[k] * quad.densities[k] * pairing;
      if (c[k] != Complex(0.0, 0.0)) any = true;
    }
    if (any) {
      // Central sums as Fourier coefficients over K on the quadrature nodes.
      std::vector<int> zidx(dz, -rmax);
      while (true) {
        int z_radius = 0;
        Eigen::VectorXd z(dz);
        for (int k = 0; k < dz; ++k) {
          z[k] = zidx[k];
          z_radius = std::max(z_radius, std::abs(zidx[k]));
        }
        Complex hat(0.0, 0.0);
        for (std::size_t k = 0; k < nl; ++k)
          hat += central_phase(quad.points[k].lambda, z) * c[k];
        bucket[std::max(eta_radius, z_radius)] += std::norm(hat);
        int pos = dz - 1;
        for (; pos >= 0; --pos) {
          if (++zidx[pos] <= rmax) break;
          zidx[pos] = -rmax;
        }
        if (pos < 0) break;
      }
    }
    int pos = 2 * d - 1;
    for (; pos >= 0; --pos) {
      if (++eta[pos] <= rmax) break;
      eta[pos] = -rmax;
    }
    if (pos < 0) break;
  }

  const double denom = g.norm_sq();
  std::vector<double> curve;
  curve.reserve(radii.size());
  double acc = 0.0;
  int r = 0;
  for (int target : radii) {
    for (; r <= target; ++r) acc += bucket[r];
    curve.push_back(acc / denom);
  }
  return curve;
}

double parseval_lgamma_check(const BandLimitedVector& f, const BandLimitedVector& g, int radius) {
  return parseval_ratio_curve(f, g, {radius}).back();
}

PointKey point_key(const GroupElement& x, int q) {
  PointKey key;
  key.reserve(x.z.size() + x.l.size() + x.m.size());
  for (Eigen::Index k = 0; k < x.z.size(); ++k) key.push_back(aligned_steps(x.z[k], q, "central"));
  for (Eigen::Index k = 0; k < x.l.size(); ++k) key.push_back(aligned_steps(x.l[k], q, "l"));
  for (Eigen::Index k = 0; k < x.m.size(); ++k) key.push_back(aligned_steps(x.m[k], q, "m"));
  return key;
}

namespace {

// Shared pairing cache: the (l, m) part of the transform is reused across
// every central coordinate, which is where the sinc-table work concentrates.
class CoefficientEvaluator {
 public:
  CoefficientEvaluator(const BandLimitedVector& h, const BandLimitedVector& f)
      : h_(h), f_(f), boxes_(fiber_boxes(h.grid, h.v)) {
    check_compatible(h, f);
  }

  Complex eval(const GroupElement& x) {
    const auto& quad = *h_.quad;
    const int d = h_.grid.d;
    const int dz = static_cast<int>(quad.points.front().lambda.size());
    PointKey lm_key;
    for (Eigen::Index k = 0; k < x.l.size(); ++k)
      lm_key.push_back(aligned_steps(x.l[k], h_.grid.q, "l"));
    for (Eigen::Index k = 0; k < x.m.size(); ++k)
      lm_key.push_back(aligned_steps(x.m[k], h_.grid.q, "m"));
    auto it = cache_.find(lm_key);
    if (it == cache_.end()) {
      Eigen::VectorXd ld(d), md(d);
      for (int a = 0; a < d; ++a) {
        ld[a] = rational_to_double(x.l[a]);
        md[a] = rational_to_double(x.m[a]);
      }
      Eigen::VectorXcd c(quad.size());
      for (std::size_t k = 0; k < quad.size(); ++k)
        c[k] = quad.weights[k] * quad.densities[k] *
               tf_pairing_boxed(quad.points[k], h_.grid, h_.v[k], boxes_[k], f_.v[k], ld, md);
      it = cache_.emplace(std::move(lm_key), std::move(c)).first;
    }
    Eigen::VectorXd zd(dz);
    for (int k = 0; k < dz; ++k) zd[k] = rational_to_double(x.z[k]);
    Complex acc(0.0, 0.0);
    for (std::size_t k = 0; k < quad.size(); ++k) {
      if (it->second[k] == Complex(0.0, 0.0)) continue;
      acc += central_phase(quad.points[k].lambda, zd) * it->second[k];
    }
    return acc;
  }

 private:
  const BandLimitedVector& h_;
  const BandLimitedVector& f_;
  std::vector<SupportBox> boxes_;
  std::map<PointKey, Eigen::VectorXcd> cache_;
};

}  // namespace

SincTable build_sinc_table(const BandLimitedVector& f, const std::vector<GroupElement>& points) {
  SincTable table;
  table.q = f.grid.q;
  CoefficientEvaluator eval(f, f);
  for (const auto& x : points) table.values.emplace(point_key(x, table.q), eval.eval(x));
  return table;
}

Complex reconstruct(const LieAlgebraSpec& spec,
                    const std::map<PointKey, Complex>& samples_on_gamma, const SincTable& sinc,
                    const GroupElement& x, int radius) {
  const int d = spec.d(), dz = spec.dim_z();
  const int n = spec.n();
  Complex acc(0.0, 0.0);
  std::vector<int> digits(n, -radius);
  while (true) {
    GroupElement gamma = identity_element(spec);
    for (int t = 0; t < dz; ++t) gamma.z[dz - 1 - t] = digits[t];
    for (int t = 0; t < d; ++t) gamma.l[d - 1 - t] = digits[dz + t];
    for (int t = 0; t < d; ++t) gamma.m[d - 1 - t] = digits[dz + d + t];
    auto sample = samples_on_gamma.find(point_key(gamma, sinc.q));
    if (sample == samples_on_gamma.end())
      throw std::invalid_argument("missing sample at a Γ point inside the box");
    if (sample->second != Complex(0.0, 0.0)) {
      GroupElement shifted = group_multiply(spec, group_inverse(spec, gamma), x);
      auto value = sinc.values.find(point_key(shifted, sinc.q));
      if (value == sinc.values.end())
        throw std::invalid_argument("missing sinc value at a required point");
      acc += sample->second * value->second;
    }
    int pos = n - 1;
    for (; pos >= 0; --pos) {
      if (++digits[pos] <= radius) break;
      digits[pos] = -radius;
    }
    if (pos < 0) break;
  }
  return acc;
}

ReconstructionReport reconstruction_error(const LieAlgebraSpec& spec, const BandLimitedVector& h,
                                          const BandLimitedVector& f,
                                          const std::vector<int>& radii,
                                          const std::vector<GroupElement>& probes) {
  check_compatible(h, f);
  if (radii.empty() || probes.empty())
    throw std::invalid_argument("need at least one radius and one probe");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (radii[i] <= radii[i - 1]) throw std::invalid_argument("radii must be ascending");
  const int rmax = radii.back();
  const int d = spec.d(), dz = spec.dim_z(), n = spec.n();
  const int q = h.grid.q;

  // Samples of V_f h on Γ ∩ box(rmax).
  CoefficientEvaluator eval_h(h, f);
  std::map<PointKey, Complex> samples;
  std::vector<GroupElement> gammas;
  {
    std::vector<int> digits(n, -rmax);
    while (true) {
      GroupElement gamma = identity_element(spec);
      for (int t = 0; t < dz; ++t) gamma.z[dz - 1 - t] = digits[t];
      for (int t = 0; t < d; ++t) gamma.l[d - 1 - t] = digits[dz + t];
      for (int t = 0; t < d; ++t) gamma.m[d - 1 - t] = digits[dz + d + t];
      samples.emplace(point_key(gamma, q), eval_h.eval(gamma));
      gammas.push_back(std::move(gamma));
      int pos = n - 1;
      for (; pos >= 0; --pos) {
        if (++digits[pos] <= rmax) break;
        digits[pos] = -rmax;
      }
      if (pos < 0) break;
    }
  }

  // Sinc table at every γ^{-1} x that a nonzero sample can touch.
  CoefficientEvaluator eval_f(f, f);
  SincTable sinc;
  sinc.q = q;
  for (const auto& gamma : gammas) {
    if (samples.at(point_key(gamma, q)) == Complex(0.0, 0.0)) continue;
    GroupElement inv = group_inverse(spec, gamma);
    for (const auto& x : probes) {
      GroupElement shifted = group_multiply(spec, inv, x);
      PointKey key = point_key(shifted, q);
      if (!sinc.values.count(key)) sinc.values.emplace(std::move(key), eval_f.eval(shifted));
    }
  }

  // Probe truth values.
  std::vector<Complex> truth(probes.size());
  for (std::size_t p = 0; p < probes.size(); ++p) truth[p] = eval_h.eval(probes[p]);

  ReconstructionReport report;
  report.radii = radii;
  for (int target : radii) {
    double err_sq = 0.0, ref_sq = 0.0;
    for (std::size_t p = 0; p < probes.size(); ++p) {
      Complex rec = reconstruct(spec, samples, sinc, probes[p], target);
      err_sq += std::norm(truth[p] - rec);
      ref_sq += std::norm(truth[p]);
    }
    report.rel_l2_error.push_back(ref_sq > 0 ? std::sqrt(err_sq / ref_sq) : 0.0);
  }
  return report;
}

namespace {

// Closed-form Dirichlet sum Σ_{t=-R}^{R} e^{-2πi t ν}, 1-periodic in ν.
double dirichlet_window(double nu, int radius) {
  double frac = nu - std::round(nu);
  double denom = std::sin(std::numbers::pi * frac);
  if (std::abs(denom) < 1e-12) return 2.0 * radius + 1.0;
  return std::sin((2 * radius + 1) * std::numbers::pi * frac) / denom;
}

}  // namespace

IsometryReport isometry_check(const BandLimitedVector& h, const BandLimitedVector& f,
                              const IsometryParams& params) {
  check_compatible(h, f);
  const auto& quad = *h.quad;
  const int d = h.grid.d, q = h.grid.q;
  const int dz = static_cast<int>(quad.points.front().lambda.size());
  const std::size_t nl = quad.size();
  if (dz != 1)
    throw std::invalid_argument("isometry_check supports one central dimension");

  // C(k, k') = Σ_{|z| <= Rz} e^{-2πi z (λ_k - λ_k')}, the exact z-sum.
  Eigen::MatrixXd csum(nl, nl);
  for (std::size_t a = 0; a < nl; ++a)
    for (std::size_t b = 0; b < nl; ++b)
      csum(a, b) = dirichlet_window(quad.points[a].lambda[0] - quad.points[b].lambda[0],
                                    params.z_radius);

  const int nm = 2 * q - 1;  // m in (1/q)Z ∩ (-1, 1)
  const int nlat = 2 * params.l_radius + 1;
  const double cell = std::pow(1.0 / q, d);
  double sampled = 0.0;

  if (d == 1) {
    std::vector<SupportBox> h_boxes = fiber_boxes(h.grid, h.v);
    Eigen::MatrixXcd u(nlat, nl);
    for (int mi = 0; mi < nm; ++mi) {
      Eigen::VectorXd m(1), l(1);
      m[0] = static_cast<double>(mi - (q - 1)) / q;
      for (int li = 0; li < nlat; ++li) {
        l[0] = li - params.l_radius;
        for (std::size_t k = 0; k < nl; ++k)
          u(li, k) = quad.weights[k] * quad.densities[k] *
                     tf_pairing_boxed(quad.points[k], h.grid, h.v[k], h_boxes[k], f.v[k], l, m);
      }
      Eigen::MatrixXcd gram = u.adjoint() * u;  // gram(k,k') = Σ_l conj(u_k) u_k'
      sampled += cell * (csum.array() * gram.conjugate().array()).sum().real();
    }
  } else if (d == 2) {
    // Separable fast path: requires diagonal S and h proportional to f
    // fiberwise, which the synthesized f and its scalar multiples satisfy.
    const double cellh = std::pow(h.grid.h(), d);
    std::vector<Complex> prop(nl);
    for (std::size_t k = 0; k < nl; ++k) {
      const auto& sp = quad.points[k];
      if (std::abs(sp.s(0, 1)) > 1e-12 || std::abs(sp.s(1, 0)) > 1e-12)
        throw std::invalid_argument("separable isometry path needs diagonal S(λ)");
      if (std::abs(sp.s(0, 0) - sp.s(1, 1)) > 1e-12)
        throw std::invalid_argument("separable isometry path needs scalar S(λ)");
      double fn = f.v[k].squaredNorm() * cellh;
      Complex a = f.v[k].dot(h.v[k]) * cellh / fn;  // <h, f>/||f||²
      if ((h.v[k] - a * f.v[k]).norm() > 1e-8 * (h.v[k].norm() + 1e-30))
        throw std::invalid_argument("separable isometry path needs h proportional to f");
      prop[k] = a;
    }

    // 1-D overlap transforms T_k(κ; m') = h Σ_x e^{2πi λ_k κ x} χ(x) χ(x-m')
    // on the 1/q frequency lattice κ.
    const int krange = (params.l_radius + 2) * q;  // κ q in [-krange, krange]
    const double hstep = h.grid.h();
    const int base = static_cast<int>(std::lround((h.grid.extent / 2 - 0.5) * q));
    std::vector<Eigen::MatrixXcd> tables(nl);  // (2 krange + 1) x nm
    for (std::size_t k = 0; k < nl; ++k) {
      const double lam = quad.points[k].lambda[0];
      Eigen::MatrixXcd t(2 * krange + 1, nm);
      for (int mi = 0; mi < nm; ++mi) {
        int ms = mi - (q - 1);  // m' q
        int start = base + std::max(0, ms);
        int len = q - std::abs(ms);
        for (int ki = 0; ki <= 2 * krange; ++ki) {
          double kappa = static_cast<double>(ki - krange) / q;
          double freq = lam * kappa * hstep;
          Complex step = std::polar(1.0, kTwoPi * freq);
          Complex cur = std::polar(1.0, kTwoPi * lam * kappa *
                                            h.grid.coordinate(start));
          Complex acc(0.0, 0.0);
          for (int t2 = 0; t2 < len; ++t2) {
            acc += cur;
            cur *= step;
          }
          t(ki, mi) = acc * hstep;
        }
      }
      tables[k] = std::move(t);
    }

    Eigen::MatrixXcd u1(nlat, nl), u2(nlat, nl);
    for (int m1i = 0; m1i < nm; ++m1i) {
      int m1s = m1i - (q - 1);  // m1 q
      double m1 = static_cast<double>(m1s) / q;
      for (int m2i = 0; m2i < nm; ++m2i) {
        int m2s = m2i - (q - 1);
        double m2 = static_cast<double>(m2s) / q;
        for (std::size_t k = 0; k < nl; ++k) {
          const double lam = quad.points[k].lambda[0];
          Complex chirp_const = std::polar(1.0, kTwoPi * lam * m1 * m2);
          Complex front = prop[k] * quad.weights[k] * quad.densities[k] * chirp_const;
          for (int li = 0; li < nlat; ++li) {
            int l1 = li - params.l_radius;
            u1(li, k) = tables[k](l1 * q + krange, m1i);
            int l2 = li - params.l_radius;
            u2(li, k) = front * tables[k](l2 * q - m1s + krange, m2i);
          }
        }
        Eigen::MatrixXcd g1 = u1.adjoint() * u1;
        Eigen::MatrixXcd g2 = u2.adjoint() * u2;
        sampled += cell *
                   (csum.array() * g1.conjugate().array() * g2.conjugate().array()).sum().real();
      }
    }
  } else {
    throw std::invalid_argument("isometry_check supports d = 1 and d = 2");
  }

  IsometryReport report;
  report.params = params;
  report.spectral_norm_sq = h.norm_sq();
  report.sampled_sum = sampled;
  report.rel_error = std::abs(report.sampled_sum - report.spectral_norm_sq) /
                     std::max(report.spectral_norm_sq, 1e-300);
  return report;
}

}  // namespace nilband
