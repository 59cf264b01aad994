#pragma once

#include "nilband/group.hpp"
#include "nilband/lie_algebra.hpp"
#include "nilband/polynomial.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace nilband {

template <class Scalar>
inline Scalar scalar_cast(const Rational& r) {
  return static_cast<Scalar>(to_double(r));
}
template <>
inline Rational scalar_cast<Rational>(const Rational& r) {
  return r;
}

/// The matrices attached to a point λ of the cross-section:
///   S(λ)_ij = λ[X_i, Y_j],   X(λ)_ij = λ[X_i, X_j] (i < j, strictly upper),
///   B(λ) = [[1, 0], [-X(λ), -S(λ)]].
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> s_matrix(
    const LieAlgebraSpec& spec, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& lambda) {
  const int d = spec.d();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> s(d, d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      RationalVector value = spec.bracket_x_y(i, j);
      Scalar acc = Scalar(0);
      for (int k = 0; k < spec.dim_z(); ++k)
        if (value[k] != 0) acc += lambda[k] * scalar_cast<Scalar>(value[k]);
      s(i - 1, j - 1) = acc;
    }
  return s;
}

template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> x_matrix(
    const LieAlgebraSpec& spec, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& lambda) {
  const int d = spec.d();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> x =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(d, d);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      RationalVector value = spec.bracket_x_x(i, j);
      Scalar acc = Scalar(0);
      for (int k = 0; k < spec.dim_z(); ++k)
        if (value[k] != 0) acc += lambda[k] * scalar_cast<Scalar>(value[k]);
      x(i - 1, j - 1) = acc;
    }
  return x;
}

template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> b_matrix(
    const LieAlgebraSpec& spec, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& lambda) {
  const int d = spec.d();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> b =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(2 * d, 2 * d);
  for (int i = 0; i < d; ++i) b(i, i) = Scalar(1);
  b.block(d, 0, d, d) = -x_matrix(spec, lambda);
  b.block(d, d, d, d) = -s_matrix(spec, lambda);
  return b;
}

struct SpectralPoint {
  Eigen::VectorXd lambda;
  Eigen::MatrixXd s;
  Eigen::MatrixXd x;
  Eigen::MatrixXd b;
  double det_s = 0.0;
};

SpectralPoint build_spectral_point(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda);

/// M(λ)_ij = λ[B_i, B_j] over the full basis (λ extended by zero off z*).
Eigen::MatrixXd m_matrix(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda);
RationalMatrix m_matrix_exact(const LieAlgebraSpec& spec, const RationalVector& lambda);

/// Nullspace dimension with the scale-aware cut τ = tau_rank · σ_max.
int m_nullity(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda,
              double tau_rank = 1e-9);
int m_nullity_exact(const LieAlgebraSpec& spec, const RationalVector& lambda);

/// Jump indices e(λ) = {k : n_k ⊄ n_{k-1} + n(λ)}, 1-based over the flag of
/// ideals spanned by the fixed basis.
std::set<int> jump_indices(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda,
                           double tau_rank = 1e-9);

struct RegionFlags {
  bool in_e = false;
  bool in_k = false;
  bool in_q = false;
  bool in_i = false;
  double det_value = 0.0;
  double norm_value = 0.0;  // max absolute row sum of S(λ)^T
};

/// Exact membership at a rational λ: in_K iff every coordinate lies in
/// [-1/2, 1/2]; in_E iff 0 < |det S| <= 1; in_Q iff the max row sum of
/// S(λ)^T is < 1; I = E ∩ K ∩ Q.
RegionFlags region_flags(const LieAlgebraSpec& spec, const RationalVector& lambda);
RegionFlags region_flags(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda);

double plancherel_density(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda);

struct MeasureResult {
  double lebesgue_m = 0.0;
  double mu = 0.0;
  int q = 0;
};

/// Midpoint rule on the uniform q^(n-2d) grid over K = [-1/2, 1/2]^(n-2d);
/// cell centers are rational so the region flags are exact. Deterministic
/// pairwise summation regardless of thread count.
MeasureResult measure_of_I(const LieAlgebraSpec& spec, int q);

struct PackingWitness {
  Eigen::VectorXd sigma1;
  Eigen::VectorXd sigma2;
  Eigen::VectorXi lattice_index;
};

struct PackingCertificate {
  bool pass = false;
  int trials = 0;
  std::optional<PackingWitness> witness;
};

/// Randomized check that [-1/2, 1/2)^d packs for S(λ)^{-T} Z^d: samples
/// σ1 ≠ σ2 from the cube and searches lattice points in a bounding box for a
/// collision σ1 - σ2 ∈ S(λ)^{-T} Z^d. Precondition: λ ∈ Q.
PackingCertificate packing_certificate(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda,
                                       int trials, std::uint64_t seed = 12345);

}  // namespace nilband
