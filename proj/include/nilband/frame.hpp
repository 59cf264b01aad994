#pragma once

#include "nilband/grid.hpp"
#include "nilband/representation.hpp"
#include "nilband/spectra.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nilband {

/// S v = Σ_n <v, f_n> f_n with Riemann-weighted inner products; direct
/// summation over an explicit family.
GridFunction frame_operator_apply(const std::vector<GridFunction>& family, const GridFunction& v);

enum class FrameVerdict { Parseval, Frame, NotFrameEvidence };

std::string to_string(FrameVerdict verdict);

struct FrameReport {
  double lower = 0.0;  // A
  double upper = 0.0;  // B
  std::size_t family_size = 0;
  std::string grid_desc;
  FrameVerdict verdict = FrameVerdict::NotFrameEvidence;
  int iterations_used = 0;
  bool converged = false;
  double tau_parseval = 2e-2;
  // Truncation-radius sensitivity: same bounds with the translation box
  // widened by two.
  double lower_wide = 0.0;
  double upper_wide = 0.0;
};

enum class EigMethod { PowerIteration, Lanczos };

struct FrameBoundsOptions {
  EigMethod method = EigMethod::Lanczos;
  int iterations = 160;
  std::uint64_t seed = 20130501;
  double shift_delta = 0.25;
  double tolerance = 1e-10;
  double tau_parseval = 2e-2;
};

/// Extremal eigenvalue estimates of a Hermitian PSD operator on C^dim
/// (power iteration for B, then power on (B+δ)I - S for A; or a Krylov
/// variant of the same scheme). Deterministic seeding.
FrameReport frame_bounds(const std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)>& apply,
                         Eigen::Index dim, const FrameBoundsOptions& options = {});

/// Frame bounds of an explicit family on its full grid.
FrameReport frame_bounds(const std::vector<GridFunction>& family,
                         const FrameBoundsOptions& options = {});

struct GaborFrameOptions {
  double core_radius = -1.0;  // default extent/4
  int k_radius = -1;          // default: every translate meeting the core box
  // Frequency window: modulations l with S(λ) l inside one alias period
  // [seam_offset - q/2, seam_offset + q/2] per axis, with raised-cosine end
  // weights over `taper_width` frequency units. The tapered copies of the
  // window tile the torus exactly, so the weighting keeps the truncated sum
  // an unbiased estimate of the full one; taper_width = 0 gives the plain
  // hard cutoff.
  double seam_offset = 0.5;
  double taper_width = 2.0;
};

/// The frame operator of G(φ, B(λ)Z^{2d}) truncated to translations meeting
/// a core box and one alias period of modulations, restricted to grid
/// functions supported in the core box. The modulation sums are evaluated
/// through closed-form difference kernels, which is an exact regrouping of
/// the member sum.
class GaborFrameOperator {
 public:
  GaborFrameOperator(const SpectralPoint& sp, const Grid& grid, const GridFunction& window,
                     const GaborFrameOptions& options = {});

  /// y = P S P x on full-grid vectors (P = core restriction).
  void apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(core_.size()); }
  const std::vector<long>& core_indices() const { return core_; }
  std::size_t member_count() const;
  int translation_count() const { return static_cast<int>(supports_.size()); }
  std::size_t modulation_count() const { return modulations_.size(); }

  /// Apply restricted to core coordinates (compact vectors of size dim()).
  void apply_core(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;

 private:
  Grid grid_;
  int d_;
  std::vector<long> core_;                    // flat indices of the core box
  std::vector<std::vector<long>> supports_;   // per-translate flat indices
  std::vector<Eigen::VectorXcd> windows_;     // g_k on its support
  std::vector<Eigen::VectorXd> modulations_;  // the points S(λ) l of the window
  std::vector<double> mod_weights_;           // taper weights per modulation
  Eigen::MatrixXcd kernel_;                   // K(x_b - x_a) on the support stencil
  double weight_ = 0.0;                       // h^d
};

/// Builds the Lemma-"pf" window system at λ and estimates its frame bounds on
/// the core box, including the widened-box sensitivity pass.
/// Precondition: λ ∈ I.
FrameReport parseval_certify(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda,
                             const Grid& grid, const FrameBoundsOptions& bounds_options = {},
                             const GaborFrameOptions& gabor_options = {});

/// Relative residual ||v - P_span v|| / ||v|| against the span of a family
/// (normal equations with a tiny ridge).
double span_residual(const std::vector<GridFunction>& family, const GridFunction& v);

/// Max pointwise deviation between π_λ(Γ1) v and the Gabor system
/// G(v, B(λ)Z^{2d}) under the index correspondence (l, m) -> (k=m, l).
double intertwining_regression(const LieAlgebraSpec& spec, const Eigen::VectorXd& lambda,
                               const GridFunction& v, int radius);

}  // namespace nilband
