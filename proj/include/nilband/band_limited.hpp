#pragma once

#include "nilband/frame.hpp"
#include "nilband/grid.hpp"
#include "nilband/group.hpp"
#include "nilband/representation.hpp"
#include "nilband/spectra.hpp"

#include <map>
#include <memory>
#include <vector>

namespace nilband {

/// Midpoint cells of K = [-1/2, 1/2]^(n-2d) whose centers lie in I, with the
/// cell volume as weight. Together with the cached S/X/B matrices this is the
/// discretization of the direct integral over I.
struct SpectralQuadrature {
  int q_lambda = 0;
  std::vector<SpectralPoint> points;   // cell centers, in_I only
  std::vector<double> weights;         // cell volumes
  std::vector<double> densities;       // |det S| at the centers
  double mu_estimate = 0.0;            // Σ w |det S|, the μ(I) quadrature

  std::size_t size() const { return points.size(); }
};

std::shared_ptr<const SpectralQuadrature> make_spectral_quadrature(const LieAlgebraSpec& spec,
                                                                   int q_lambda);

/// Measurable field of unit vectors u_λ over the quadrature.
struct VectorFieldU {
  Grid grid;
  std::vector<Eigen::VectorXcd> u;
};

/// u_λ = normalized indicator of [-1/2, 1/2)^d, constant in λ.
VectorFieldU constant_indicator_field(const SpectralQuadrature& quad, const Grid& grid);

/// Element of the discretized H_{u,I}: the left factors v_λ of the rank-one
/// fields v_λ ⊗ u_λ over a shared quadrature.
struct BandLimitedVector {
  std::shared_ptr<const SpectralQuadrature> quad;
  Grid grid;
  std::vector<Eigen::VectorXcd> v;  // one per quadrature point

  /// Σ_λ w ||v_λ||² |det S(λ)| — the Plancherel norm of the rank-one field.
  double norm_sq() const;
};

/// Pf(λ) = |det B(λ)|^{-1/2} φ(λ) ⊗ u_λ, i.e. v_λ = U(λ) χ. Each fiber has
/// unit norm, so ||f||² equals the μ(I) quadrature.
BandLimitedVector synthesize_admissible_f(const LieAlgebraSpec& spec,
                                          std::shared_ptr<const SpectralQuadrature> quad,
                                          const VectorFieldU& u_field, const Grid& grid);

/// Random element with smooth fibers: a few separable cube modes with
/// λ-profiles that vanish on the boundary of K. Deterministic in `seed`.
BandLimitedVector make_random_bandlimited(const LieAlgebraSpec& spec,
                                          std::shared_ptr<const SpectralQuadrature> quad,
                                          const Grid& grid, std::uint64_t seed);

/// <v_h, M_{-S l - X m} T_m v_f> on the grid; m must be grid aligned. Exact
/// zero when the translated supports do not meet.
Complex tf_pairing(const SpectralPoint& sp, const Grid& grid, const Eigen::VectorXcd& vh,
                   const Eigen::VectorXcd& vf, const Eigen::VectorXd& l, const Eigen::VectorXd& m);

/// V_f h (x) = <h, L(x) f> evaluated in the Plancherel domain:
///   Σ_λ w e^{-2πi <z, λ>} <v_λ^h, π_λ(0, l, m) v_λ^f> |det S(λ)|.
Complex coefficient_transform(const BandLimitedVector& h, const BandLimitedVector& f,
                              const GroupElement& x);

/// Σ_{γ in Γ, |γ|_∞ <= R} |<g, L(γ) f>|² / ||g||² for each R in `radii`
/// (ascending). The central sum is evaluated as Fourier coefficients over K
/// on the shared quadrature nodes; the Γ₁ sum is direct.
std::vector<double> parseval_ratio_curve(const BandLimitedVector& f, const BandLimitedVector& g,
                                         const std::vector<int>& radii);

double parseval_lgamma_check(const BandLimitedVector& f, const BandLimitedVector& g, int radius);

/// Keys are coordinates scaled by the grid resolution, so only 1/q-aligned
/// points are representable.
using PointKey = std::vector<long>;
PointKey point_key(const GroupElement& x, int q);

struct SincTable {
  int q = 0;
  std::map<PointKey, Complex> values;
};

/// s = V_f f tabulated at every γ^{-1} x needed by the reconstruction driver.
SincTable build_sinc_table(const BandLimitedVector& f, const std::vector<GroupElement>& points);

/// Σ_{γ in box(R)} h(γ) s(γ^{-1} x). Throws when the table lacks a point.
Complex reconstruct(const LieAlgebraSpec& spec,
                    const std::map<PointKey, Complex>& samples_on_gamma, const SincTable& sinc,
                    const GroupElement& x, int radius);

struct ReconstructionReport {
  std::vector<int> radii;
  std::vector<double> rel_l2_error;  // per radius, over the probe set
};

/// Samples V_f h on Γ ∩ box(R), reconstructs at the probes through the sinc
/// expansion and reports the relative l² error curve.
ReconstructionReport reconstruction_error(const LieAlgebraSpec& spec, const BandLimitedVector& h,
                                          const BandLimitedVector& f,
                                          const std::vector<int>& radii,
                                          const std::vector<GroupElement>& probes);

struct IsometryParams {
  int z_radius = 8;
  int l_radius = 16;
};

struct IsometryReport {
  double spectral_norm_sq = 0.0;
  double sampled_sum = 0.0;
  double rel_error = 0.0;
  IsometryParams params;
};

/// Compares the spectral norm ||h||² against the group-side Riemann sum
/// Σ_x |V_f h(x)|² over the grid-aligned x-set
///   z ∈ Z^{n-2d} ∩ [-Rz, Rz], l ∈ Z^d ∩ [-Rl, Rl], m ∈ (1/q) Z^d ∩ (-1, 1),
/// with cell volume (1/q)^d. d = 1 is evaluated directly; d = 2 requires a
/// diagonal S(λ) and h proportional to f fiberwise (the separable fast path).
IsometryReport isometry_check(const BandLimitedVector& h, const BandLimitedVector& f,
                              const IsometryParams& params = {});

}  // namespace nilband
