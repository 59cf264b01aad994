#pragma once

#include "nilband/grid.hpp"
#include "nilband/group.hpp"
#include "nilband/spectra.hpp"

#include <utility>
#include <vector>

namespace nilband {

/// Relative mass (fraction of ||v||^2) a translation is allowed to push past
/// the window edge before pi_action reports a support overflow.
inline constexpr double kDefaultTruncationTolerance = 1e-10;

/// The irreducible representation at λ acting on the grid discretization of
/// L²(R^d):
///   (π_λ(γ) v)(x) = e^{2πi Σ_j z_j λ(Z_j)}
///                 · e^{-2πi Σ_{j,k} x_k l_j λ[X_k, Y_j]}
///                 · e^{-2πi λ(Σ_{j>r} m_j x_r [X_r, X_j])} · v(x - m).
/// Phases are assembled straight from the bracket table. The translation m
/// must be grid aligned (m_j q integral); mass pushed outside the window
/// beyond eps_trunc raises std::domain_error.
GridFunction pi_action(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda,
                       const GroupElement& gamma, const GridFunction& v,
                       double eps_trunc = kDefaultTruncationTolerance);

/// Chirp U v (t) = e^{-2πi <t, X(λ) t>} v(t); `sign` = +1 gives the inverse.
GridFunction chirp(const Eigen::MatrixXd& x_lambda, const GridFunction& v, int sign = -1);

/// φ(λ) = |det S(λ)|^{1/2} U χ_{[-1/2,1/2)^d} sampled at midpoints.
GridFunction window_phi(const SpectralPoint& sp, const Grid& grid);

struct GaborIndex {
  Eigen::VectorXi k;  // translation
  Eigen::VectorXi l;  // modulation index, pre-multiplication by B(λ)
};

/// Time-frequency shift M_ω T_k v with ω = -S(λ) l - X(λ) k, the normal form
/// of the lattice points B(λ)(k, l).
GridFunction gabor_member(const SpectralPoint& sp, const GridFunction& v,
                          const Eigen::VectorXi& k, const Eigen::VectorXi& l,
                          double eps_trunc = kDefaultTruncationTolerance);

/// Every member with |k_j| <= k_radius, |l_j| <= l_radius.
std::vector<std::pair<GaborIndex, GridFunction>> gabor_system(const SpectralPoint& sp,
                                                              const GridFunction& v, int k_radius,
                                                              int l_radius);

}  // namespace nilband
