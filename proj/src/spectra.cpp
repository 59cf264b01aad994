#include "nilband/spectra.hpp"

#include "nilband/util.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <random>
#include <stdexcept>

namespace nilband {

SpectralPoint build_spectral_point(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda) {
  if (lambda.size() != spec.dim_z())
    throw std::invalid_argument("lambda must have length n - 2d");
  SpectralPoint sp;
  sp.lambda = lambda;
  sp.s = s_matrix<double>(spec, lambda);
  sp.x = x_matrix<double>(spec, lambda);
  sp.b = b_matrix<double>(spec, lambda);
  sp.det_s = sp.s.determinant();
  return sp;
}

Eigen::MatrixXd m_matrix(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda) {
  const int n = spec.n(), dz = spec.dim_z();
  if (lambda.size() != dz) throw std::invalid_argument("lambda must have length n - 2d");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [pair, value] : spec.table()) {
    double acc = 0.0;
    for (int k = 0; k < dz; ++k)
      if (value[k] != 0) acc += lambda[k] * to_double(value[k]);
    m(pair.first, pair.second) = acc;
    m(pair.second, pair.first) = -acc;
  }
  return m;
}

RationalMatrix m_matrix_exact(const LieAlgebraSpec& spec, const RationalVector& lambda) {
  const int n = spec.n(), dz = spec.dim_z();
  if (lambda.size() != dz) throw std::invalid_argument("lambda must have length n - 2d");
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = 0;
  for (const auto& [pair, value] : spec.table()) {
    Rational acc = 0;
    for (int k = 0; k < dz; ++k)
      if (value[k] != 0) acc += lambda[k] * value[k];
    m(pair.first, pair.second) = acc;
    m(pair.second, pair.first) = -acc;
  }
  return m;
}

namespace {

int svd_rank(const Eigen::MatrixXd& a, double tau_rank) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  double cut = tau_rank * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  return rank;
}

}  // namespace

int m_nullity(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda, double tau_rank) {
  Eigen::MatrixXd m = m_matrix(spec, lambda);
  return spec.n() - svd_rank(m, tau_rank);
}

int m_nullity_exact(const LieAlgebraSpec& spec, const RationalVector& lambda) {
  return spec.n() - exact_rank(m_matrix_exact(spec, lambda));
}

std::set<int> jump_indices(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda,
                           double tau_rank) {
  const int n = spec.n();
  Eigen::MatrixXd m = m_matrix(spec, lambda);

  // Orthonormal basis of n(λ) = nullspace(M(λ)).
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cut = (sv.size() && sv(0) > 0) ? tau_rank * sv(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  Eigen::MatrixXd nullspace = svd.matrixV().rightCols(n - rank);

  // k jumps iff appending e_k to [N | e_1..e_{k-1}] raises the rank.
  std::set<int> jumps;
  Eigen::MatrixXd stacked(n, nullspace.cols() + n);
  stacked.leftCols(nullspace.cols()) = nullspace;
  int prev_rank = svd_rank(nullspace, tau_rank);
  for (int k = 1; k <= n; ++k) {
    Eigen::VectorXd unit = Eigen::VectorXd::Zero(n);
    unit[k - 1] = 1.0;
    stacked.col(nullspace.cols() + k - 1) = unit;
    int r = svd_rank(stacked.leftCols(nullspace.cols() + k), tau_rank);
    if (r > prev_rank) jumps.insert(k);
    prev_rank = r;
  }
  return jumps;
}

RegionFlags region_flags(const LieAlgebraSpec& spec, const RationalVector& lambda) {
  const int dz = spec.dim_z(), d = spec.d();
  if (lambda.size() != dz) throw std::invalid_argument("lambda must have length n - 2d");
  RegionFlags flags;

  Rational half(1, 2);
  flags.in_k = true;
  for (int k = 0; k < dz; ++k) {
    Rational mag = lambda[k] < 0 ? Rational(-lambda[k]) : Rational(lambda[k]);
    if (mag > half) flags.in_k = false;
  }

  RationalMatrix s = s_matrix<Rational>(spec, lambda);
  Rational det = exact_determinant(s);
  Rational det_mag = det < 0 ? Rational(-det) : det;
  flags.det_value = to_double(det);
  flags.in_e = (det != 0) && (det_mag <= 1);

  // Max absolute row sum of S(λ)^T = max absolute column sum of S(λ).
  Rational norm = 0;
  for (int j = 0; j < d; ++j) {
    Rational col_sum = 0;
    for (int i = 0; i < d; ++i) col_sum += s(i, j) < 0 ? Rational(-s(i, j)) : s(i, j);
    if (col_sum > norm) norm = col_sum;
  }
  flags.norm_value = to_double(norm);
  flags.in_q = norm < 1;

  flags.in_i = flags.in_e && flags.in_k && flags.in_q;
  return flags;
}

RegionFlags region_flags(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda) {
  const int dz = spec.dim_z(), d = spec.d();
  if (lambda.size() != dz) throw std::invalid_argument("lambda must have length n - 2d");
  RegionFlags flags;
  flags.in_k = (lambda.cwiseAbs().maxCoeff() <= 0.5);
  Eigen::MatrixXd s = s_matrix<double>(spec, lambda);
  double det = s.determinant();
  flags.det_value = det;
  flags.in_e = (det != 0.0) && (std::abs(det) <= 1.0);
  double norm = 0.0;
  for (int j = 0; j < d; ++j) norm = std::max(norm, s.col(j).cwiseAbs().sum());
  flags.norm_value = norm;
  flags.in_q = norm < 1.0;
  flags.in_i = flags.in_e && flags.in_k && flags.in_q;
  return flags;
}

double plancherel_density(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda) {
  return std::abs(s_matrix<double>(spec, lambda).determinant());
}

MeasureResult measure_of_I(const LieAlgebraSpec& spec, int q) {
  if (q < 2) throw std::invalid_argument("measure_of_I needs q >= 2");
  const int dz = spec.dim_z();
  const CentralPolynomial det_poly = spec.det_s_polynomial();
  std::uint64_t cells = 1;
  for (int k = 0; k < dz; ++k) {
    cells *= static_cast<std::uint64_t>(q);
    if (cells > 200'000'000ull) throw std::length_error("quadrature grid too large");
  }
  const double cell_volume = std::pow(1.0 / q, dz);

  std::vector<double> m_contrib(cells, 0.0), mu_contrib(cells, 0.0);
  parallel_for(cells, [&](std::uint64_t cell) {
    RationalVector lambda(dz);
    std::uint64_t rem = cell;
    for (int k = dz - 1; k >= 0; --k) {
      int idx = static_cast<int>(rem % q);
      rem /= q;
      // Midpoint of cell idx on [-1/2, 1/2]: (2 idx + 1 - q) / (2q).
      lambda[k] = make_rational(2 * idx + 1 - q, 2 * q);
    }
    // Midpoints are rational, so membership is exact; the only float is the
    // density value itself.
    Rational det = det_poly.evaluate_exact(lambda);
    if (det == 0) return;
    Rational det_mag = det < 0 ? Rational(-det) : det;
    if (det_mag > 1) return;
    RegionFlags flags = region_flags(spec, lambda);
    if (!flags.in_i) return;
    m_contrib[cell] = cell_volume;
    mu_contrib[cell] = cell_volume * std::abs(to_double(det));
  });

  MeasureResult out;
  out.q = q;
  out.lebesgue_m = pairwise_sum(m_contrib);
  out.mu = pairwise_sum(mu_contrib);
  return out;
}

PackingCertificate packing_certificate(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda,
                                       int trials, std::uint64_t seed) {
  RegionFlags flags = region_flags(spec, lambda);
  if (!flags.in_q)
    throw std::invalid_argument("packing_certificate requires lambda in Q (norm " +
                                std::to_string(flags.norm_value) + " >= 1)");
  const int d = spec.d();
  Eigen::MatrixXd st = s_matrix<double>(spec, lambda).transpose();

  PackingCertificate cert;
  cert.trials = trials;
  cert.pass = true;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-0.5, 0.5);
  const double tol = 1e-9;

  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXd sigma1(d), sigma2(d);
    for (int i = 0; i < d; ++i) {
      sigma1[i] = unif(rng);
      sigma2[i] = unif(rng);
    }
    if ((sigma1 - sigma2).cwiseAbs().maxCoeff() < 1e-12) continue;
    // σ1 - σ2 ∈ S^{-T} Z^d iff S^T (σ1 - σ2) is a nonzero integer vector.
    Eigen::VectorXd image = st * (sigma1 - sigma2);
    bool integral = true;
    Eigen::VectorXi nearest(d);
    for (int i = 0; i < d; ++i) {
      nearest[i] = static_cast<int>(std::lround(image[i]));
      if (std::abs(image[i] - nearest[i]) > tol) integral = false;
    }
    if (integral && nearest.cwiseAbs().maxCoeff() > 0) {
      cert.pass = false;
      cert.witness = PackingWitness{sigma1, sigma2, nearest};
      return cert;
    }
  }
  return cert;
}

}  // namespace nilband
