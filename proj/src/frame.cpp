#include "nilband/frame.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace nilband {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::VectorXcd seeded_unit_vector(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = Complex(normal(rng), normal(rng));
  v /= v.norm();
  return v;
}

struct ExtremalEstimate {
  double lower = 0.0;
  double upper = 0.0;
  int iterations = 0;
  bool converged = false;
};

using ApplyFn = std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)>;

ExtremalEstimate power_iteration_bounds(const ApplyFn& apply, Eigen::Index dim,
                                        const FrameBoundsOptions& options) {
  ExtremalEstimate est;
  Eigen::VectorXcd x = seeded_unit_vector(dim, options.seed);
  Eigen::VectorXcd y(dim);

  double upper = 0.0, prev = -1.0;
  int used = 0;
  bool converged = false;
  for (int it = 0; it < options.iterations; ++it) {
    apply(x, y);
    upper = std::real(x.dot(y));
    ++used;
    if (std::abs(upper - prev) <= options.tolerance * std::max(1.0, std::abs(upper))) {
      converged = true;
      break;
    }
    prev = upper;
    double norm = y.norm();
    if (norm == 0.0) {
      upper = 0.0;
      converged = true;
      break;
    }
    x = y / norm;
  }

  // Smallest eigenvalue from power iteration on (B + δ) I - S.
  double shift = upper + options.shift_delta * std::max(1.0, upper);
  x = seeded_unit_vector(dim, options.seed + 1);
  double mu = 0.0;
  prev = -1.0;
  bool converged_low = false;
  for (int it = 0; it < options.iterations; ++it) {
    apply(x, y);
    y = shift * x - y;
    mu = std::real(x.dot(y));
    ++used;
    if (std::abs(mu - prev) <= options.tolerance * std::max(1.0, std::abs(mu))) {
      converged_low = true;
      break;
    }
    prev = mu;
    double norm = y.norm();
    if (norm == 0.0) break;
    x = y / norm;
  }
  est.lower = std::max(0.0, shift - mu);
  est.upper = upper;
  est.iterations = used;
  est.converged = converged && converged_low;
  return est;
}

ExtremalEstimate lanczos_bounds(const ApplyFn& apply, Eigen::Index dim,
                                const FrameBoundsOptions& options) {
  ExtremalEstimate est;
  const int m = static_cast<int>(std::min<Eigen::Index>(options.iterations, dim));
  std::vector<Eigen::VectorXcd> basis;
  basis.reserve(m);
  std::vector<double> alpha, beta;

  Eigen::VectorXcd v = seeded_unit_vector(dim, options.seed);
  Eigen::VectorXcd w(dim);
  basis.push_back(v);
  double prev_low = -1.0, prev_high = -1.0;

  for (int j = 0; j < m; ++j) {
    apply(basis[j], w);
    double a = std::real(basis[j].dot(w));
    alpha.push_back(a);
    w -= a * basis[j];
    if (j > 0) w -= beta[j - 1] * basis[j - 1];
    // Full reorthogonalization keeps the Ritz extremes honest on clustered
    // spectra.
    for (const auto& u : basis) w -= u.dot(w) * u;
    double b = w.norm();
    est.iterations = j + 1;

    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(j + 1, j + 1);
    for (int i = 0; i <= j; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 <= j) {
        t(i, i + 1) = beta[i];
        t(i + 1, i) = beta[i];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(t);
    double low = eig.eigenvalues().minCoeff();
    double high = eig.eigenvalues().maxCoeff();

    if (b <= 1e-13) {
      est.lower = std::max(0.0, low);
      est.upper = high;
      est.converged = true;
      return est;
    }
    if (j >= 8 && std::abs(low - prev_low) <= options.tolerance * std::max(1.0, std::abs(low)) &&
        std::abs(high - prev_high) <= options.tolerance * std::max(1.0, std::abs(high))) {
      est.lower = std::max(0.0, low);
      est.upper = high;
      est.converged = true;
      return est;
    }
    prev_low = low;
    prev_high = high;
    est.lower = std::max(0.0, low);
    est.upper = high;

    if (j + 1 < m) {
      beta.push_back(b);
      basis.push_back(w / b);
    }
  }
  est.converged = false;
  return est;
}

FrameVerdict classify(double lower, double upper, double tau) {
  if (std::max(std::abs(lower - 1.0), std::abs(upper - 1.0)) <= tau) return FrameVerdict::Parseval;
  if (lower >= 0.5) return FrameVerdict::Frame;
  return FrameVerdict::NotFrameEvidence;
}

}  // namespace

std::string to_string(FrameVerdict verdict) {
  switch (verdict) {
    case FrameVerdict::Parseval:
      return "parseval";
    case FrameVerdict::Frame:
      return "frame";
    case FrameVerdict::NotFrameEvidence:
      return "not_frame_evidence";
  }
  return "unknown";
}

GridFunction frame_operator_apply(const std::vector<GridFunction>& family, const GridFunction& v) {
  if (family.empty()) throw std::invalid_argument("frame operator needs a nonempty family");
  for (const auto& f : family)
    if (!(f.grid == v.grid)) throw std::invalid_argument("family/vector grid mismatch");
  GridFunction out(v.grid);
  for (const auto& f : family) out.values += inner_product(v, f) * f.values;
  return out;
}

FrameReport frame_bounds(const ApplyFn& apply, Eigen::Index dim,
                         const FrameBoundsOptions& options) {
  ExtremalEstimate est = options.method == EigMethod::PowerIteration
                             ? power_iteration_bounds(apply, dim, options)
                             : lanczos_bounds(apply, dim, options);
  FrameReport report;
  report.lower = est.lower;
  report.upper = est.upper;
  report.iterations_used = est.iterations;
  report.converged = est.converged;
  report.tau_parseval = options.tau_parseval;
  report.verdict = classify(est.lower, est.upper, options.tau_parseval);
  return report;
}

FrameReport frame_bounds(const std::vector<GridFunction>& family,
                         const FrameBoundsOptions& options) {
  if (family.empty()) throw std::invalid_argument("frame_bounds needs a nonempty family");
  const Grid grid = family.front().grid;
  const double weight = std::pow(grid.h(), grid.d);
  Eigen::Index dim = grid.point_count();
  auto apply = [&family, weight](const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
    y.setZero(x.size());
    for (const auto& f : family) {
      Complex coeff = f.values.dot(x) * weight;
      y += coeff * f.values;
    }
  };
  FrameReport report = frame_bounds(apply, dim, options);
  report.family_size = family.size();
  report.grid_desc = "d=" + std::to_string(grid.d) + " T=" + std::to_string(grid.extent) +
                     " q=" + std::to_string(grid.q);
  report.lower_wide = report.lower;
  report.upper_wide = report.upper;
  return report;
}

GaborFrameOperator::GaborFrameOperator(const SpectralPoint& sp, const Grid& grid,
                                       const GridFunction& window,
                                       const GaborFrameOptions& options)
    : grid_(grid), d_(grid.d) {
  if (!(window.grid == grid)) throw std::invalid_argument("window grid mismatch");
  const int q = grid.q;
  const int ppa = grid.points_per_axis();
  weight_ = std::pow(grid.h(), d_);

  double core_radius = options.core_radius > 0 ? options.core_radius : grid.extent / 4.0;

  // Core box indices.
  const long count = grid.point_count();
  int multi[4];
  for (long i = 0; i < count; ++i) {
    grid.unflatten(i, multi);
    bool inside = true;
    for (int a = 0; a < d_; ++a) {
      double x = grid.coordinate(multi[a]);
      if (x < -core_radius || x >= core_radius) inside = false;
    }
    if (inside) core_.push_back(i);
  }

  // Translations: every k whose translated cube meets the core box (and fits
  // inside the window).
  int k_limit = options.k_radius > 0
                    ? options.k_radius
                    : static_cast<int>(std::floor(core_radius + 0.5)) + 1;
  std::vector<Eigen::VectorXi> translations;
  std::vector<int> digits(d_, -k_limit);
  while (true) {
    Eigen::VectorXi k(d_);
    for (int a = 0; a < d_; ++a) k[a] = digits[a];
    bool meets_core = true, fits_window = true;
    for (int a = 0; a < d_; ++a) {
      double lo = k[a] - 0.5, hi = k[a] + 0.5;
      if (hi <= -core_radius || lo >= core_radius) meets_core = false;
      if (lo < -grid.extent / 2 - 1e-12 || hi > grid.extent / 2 + 1e-12) fits_window = false;
    }
    if (meets_core && fits_window) translations.push_back(k);
    int pos = d_ - 1;
    for (; pos >= 0; --pos) {
      if (++digits[pos] <= k_limit) break;
      digits[pos] = -k_limit;
    }
    if (pos < 0) break;
  }

  // Modulations: one alias period of S(λ) Z^d on the frequency torus. The
  // per-axis window is flat on most of [seam - q/2, seam + q/2] and falls off
  // with raised-cosine ramps of width `taper_width`; the q-shifted copies sum
  // to one, so the tapered truncation tiles the torus exactly.
  {
    const double tau = std::max(0.0, options.taper_width);
    auto axis_weight = [&](double u) -> double {
      double t = u - options.seam_offset;
      double edge = q / 2.0;
      double mag = std::abs(t);
      if (tau == 0.0) return (t >= -edge && t < edge) ? 1.0 : 0.0;
      if (mag <= edge - tau / 2) return 1.0;
      if (mag >= edge + tau / 2) return 0.0;
      return 0.5 * (1.0 + std::cos(std::numbers::pi * (mag - edge + tau / 2) / tau));
    };
    Eigen::MatrixXd s_inv = sp.s.inverse();
    double reach_limit = q / 2.0 + tau / 2 + std::abs(options.seam_offset);
    Eigen::VectorXi bound(d_);
    for (int a = 0; a < d_; ++a) {
      double reach = 0.0;
      for (int b = 0; b < d_; ++b) reach += std::abs(s_inv(a, b)) * reach_limit;
      bound[a] = static_cast<int>(std::ceil(reach)) + 1;
    }
    std::vector<int> ld(d_);
    for (int a = 0; a < d_; ++a) ld[a] = -bound[a];
    while (true) {
      Eigen::VectorXd l(d_);
      for (int a = 0; a < d_; ++a) l[a] = ld[a];
      Eigen::VectorXd u = sp.s * l;
      double w = 1.0;
      for (int a = 0; a < d_; ++a) w *= axis_weight(u[a]);
      if (w > 0.0) {
        modulations_.push_back(u);
        mod_weights_.push_back(w);
      }
      int pos = d_ - 1;
      for (; pos >= 0; --pos) {
        if (++ld[pos] <= bound[pos]) break;
        ld[pos] = -bound[pos];
      }
      if (pos < 0) break;
    }
    if (modulations_.empty()) throw std::runtime_error("empty modulation window");
  }

  // Difference kernel K(Δ) = Σ_l e^{2πi (S l)·Δ} on the support stencil; the
  // per-translate structure is identical, so one table serves every k.
  const int stencil = 2 * q - 1;
  long stencil_count = 1;
  for (int a = 0; a < d_; ++a) stencil_count *= stencil;
  Eigen::VectorXcd table = Eigen::VectorXcd::Zero(stencil_count);
  {
    const double h = grid.h();
    std::vector<Eigen::VectorXcd> axis_phase(d_, Eigen::VectorXcd(stencil));
    for (std::size_t mod = 0; mod < modulations_.size(); ++mod) {
      const auto& u = modulations_[mod];
      for (int a = 0; a < d_; ++a) {
        // phases e^{2πi u_a Δ_a h} for Δ_a in [-(q-1), q-1]
        Complex step = std::polar(1.0, kTwoPi * u[a] * h);
        Complex cur = std::polar(1.0, -kTwoPi * u[a] * h * (q - 1));
        for (int t = 0; t < stencil; ++t) {
          axis_phase[a][t] = cur;
          cur *= step;
        }
      }
      const double w = mod_weights_[mod];
      int idx[4];
      for (long s = 0; s < stencil_count; ++s) {
        long rem = s;
        for (int a = d_ - 1; a >= 0; --a) {
          idx[a] = static_cast<int>(rem % stencil);
          rem /= stencil;
        }
        Complex prod = axis_phase[0][idx[0]];
        for (int a = 1; a < d_; ++a) prod *= axis_phase[a][idx[a]];
        table[s] += w * prod;
      }
    }
  }

  // Dense kernel matrix on the support-relative grid (shared by all k).
  long support_size = 1;
  for (int a = 0; a < d_; ++a) support_size *= q;
  kernel_.resize(support_size, support_size);
  {
    int ma[4], mb[4];
    for (long a = 0; a < support_size; ++a) {
      long rem = a;
      for (int t = d_ - 1; t >= 0; --t) {
        ma[t] = static_cast<int>(rem % q);
        rem /= q;
      }
      for (long b = 0; b < support_size; ++b) {
        rem = b;
        for (int t = d_ - 1; t >= 0; --t) {
          mb[t] = static_cast<int>(rem % q);
          rem /= q;
        }
        long s = 0;
        for (int t = 0; t < d_; ++t) s = s * stencil + (mb[t] - ma[t] + q - 1);
        kernel_(a, b) = table[s];
      }
    }
  }

  // Per-translate support lists and window samples g_k = M_{-X k} T_k φ.
  for (const auto& k : translations) {
    std::vector<long> support;
    support.reserve(support_size);
    Eigen::VectorXcd g(support_size);
    Eigen::VectorXd chirp_freq = sp.x * k.cast<double>();
    // First grid index of the cube k + [-1/2, 1/2) per axis.
    int base[4];
    bool ok = true;
    for (int a = 0; a < d_; ++a) {
      double start = k[a] - 0.5;
      double offset = (start + grid.extent / 2) * q;
      base[a] = static_cast<int>(std::lround(offset));
      if (base[a] < 0 || base[a] + q > ppa) ok = false;
    }
    if (!ok) continue;
    long pos = 0;
    int rel[4];
    for (long s = 0; s < support_size; ++s) {
      long rem = s;
      for (int t = d_ - 1; t >= 0; --t) {
        rel[t] = static_cast<int>(rem % q);
        rem /= q;
      }
      int full[4];
      double phase = 0.0;
      for (int t = 0; t < d_; ++t) {
        full[t] = base[t] + rel[t];
        phase -= chirp_freq[t] * grid.coordinate(full[t]);
      }
      long flat = grid.flatten(full);
      support.push_back(flat);
      // window translated by k: φ(x - k) is an exact index shift of k q.
      int shifted[4];
      bool in_window = true;
      for (int t = 0; t < d_; ++t) {
        shifted[t] = full[t] - k[t] * q;
        if (shifted[t] < 0 || shifted[t] >= ppa) in_window = false;
      }
      Complex w = in_window ? window.values[grid.flatten(shifted)] : Complex(0, 0);
      g[pos++] = std::polar(1.0, kTwoPi * phase) * w;
    }
    supports_.push_back(std::move(support));
    windows_.push_back(std::move(g));
  }
}

std::size_t GaborFrameOperator::member_count() const {
  return supports_.size() * modulations_.size();
}

void GaborFrameOperator::apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const {
  y.setZero(grid_.point_count());
  for (std::size_t t = 0; t < supports_.size(); ++t) {
    const auto& support = supports_[t];
    const auto& g = windows_[t];
    Eigen::VectorXcd u(support.size());
    for (std::size_t s = 0; s < support.size(); ++s)
      u[s] = x[support[s]] * std::conj(g[s]);
    Eigen::VectorXcd tvec = kernel_ * u;
    for (std::size_t s = 0; s < support.size(); ++s)
      y[support[s]] += weight_ * g[s] * tvec[s];
  }
}

void GaborFrameOperator::apply_core(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const {
  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(grid_.point_count());
  for (std::size_t i = 0; i < core_.size(); ++i) full[core_[i]] = x[i];
  Eigen::VectorXcd out;
  apply(full, out);
  y.resize(core_.size());
  for (std::size_t i = 0; i < core_.size(); ++i) y[i] = out[core_[i]];
}

FrameReport parseval_certify(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda,
                             const Grid& grid, const FrameBoundsOptions& bounds_options,
                             const GaborFrameOptions& gabor_options) {
  RegionFlags flags = region_flags(spec, lambda);
  if (!flags.in_i)
    throw std::invalid_argument("parseval_certify requires lambda in I = E ∩ K ∩ Q");
  SpectralPoint sp = build_spectral_point(spec, lambda);
  GridFunction phi = window_phi(sp, grid);

  GaborFrameOperator op(sp, grid, phi, gabor_options);
  auto apply = [&op](const Eigen::VectorXcd& x, Eigen::VectorXcd& y) { op.apply_core(x, y); };
  FrameReport report = frame_bounds(apply, op.dim(), bounds_options);
  report.family_size = op.member_count();
  report.grid_desc = "d=" + std::to_string(grid.d) + " T=" + std::to_string(grid.extent) +
                     " q=" + std::to_string(grid.q);

  GaborFrameOptions wide = gabor_options;
  wide.k_radius = (gabor_options.k_radius > 0
                       ? gabor_options.k_radius
                       : static_cast<int>(std::floor((gabor_options.core_radius > 0
                                                          ? gabor_options.core_radius
                                                          : grid.extent / 4.0) +
                                                     0.5)) +
                             1) +
                  2;
  GaborFrameOperator op_wide(sp, grid, phi, wide);
  auto apply_wide = [&op_wide](const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
    op_wide.apply_core(x, y);
  };
  FrameReport wide_report = frame_bounds(apply_wide, op_wide.dim(), bounds_options);
  report.lower_wide = wide_report.lower;
  report.upper_wide = wide_report.upper;
  return report;
}

double span_residual(const std::vector<GridFunction>& family, const GridFunction& v) {
  if (family.empty()) throw std::invalid_argument("span_residual needs a nonempty family");
  const Eigen::Index n = static_cast<Eigen::Index>(family.size());
  Eigen::MatrixXcd gram(n, n);
  Eigen::VectorXcd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    rhs[i] = inner_product(v, family[i]);
    for (Eigen::Index j = 0; j < n; ++j) gram(i, j) = inner_product(family[j], family[i]);
  }
  double ridge = 1e-12 * std::max(1.0, std::abs(gram.trace()) / n);
  gram.diagonal().array() += ridge;
  Eigen::VectorXcd coeff = gram.ldlt().solve(rhs);
  double norm_sq = v.norm_sq();
  if (norm_sq == 0.0) return 0.0;
  Complex corr = coeff.dot(rhs);  // Σ conj(c_i) <v, f_i>
  double residual_sq = norm_sq - 2.0 * std::real(corr);
  Eigen::VectorXcd gc = gram * coeff;
  residual_sq += std::real(coeff.dot(gc));
  residual_sq = std::max(0.0, residual_sq);
  return std::sqrt(residual_sq / norm_sq);
}

double intertwining_regression(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda,
                               const GridFunction& v, int radius) {
  const int d = spec.d();
  SpectralPoint sp = build_spectral_point(spec, lambda);
  double worst = 0.0;
  std::vector<int> digits(2 * d, -radius);
  while (true) {
    Eigen::VectorXi l(d), m(d);
    for (int a = 0; a < d; ++a) {
      l[a] = digits[a];
      m[a] = digits[d + a];
    }
    GroupElement gamma = identity_element(spec);
    for (int a = 0; a < d; ++a) {
      gamma.l[a] = l[a];
      gamma.m[a] = m[a];
    }
    GridFunction lhs = pi_action(spec, lambda, gamma, v);
    GridFunction rhs = gabor_member(sp, v, m, l);
    worst = std::max(worst, (lhs.values - rhs.values).cwiseAbs().maxCoeff());
    int pos = 2 * d - 1;
    for (; pos >= 0; --pos) {
      if (++digits[pos] <= radius) break;
      digits[pos] = -radius;
    }
    if (pos < 0) break;
  }
  return worst;
}

}  // namespace nilband
