#pragma once

#include "nilband/lie_algebra.hpp"
#include "nilband/rational.hpp"

#include <cstdint>
#include <vector>

namespace nilband {

/// Point of N in exponential coordinates of the second kind, ordered as the
/// discrete-set product: exp(z_{n-2d} Z_{n-2d})...exp(z_1 Z_1) exp(l_d Y_d)...
/// exp(l_1 Y_1) exp(m_d X_d)...exp(m_1 X_1). Component k of `z` is the
/// coefficient of Z_{k+1}, and similarly for `l`, `m`.
struct GroupElement {
  RationalVector z;
  RationalVector l;
  RationalVector m;

  bool operator==(const GroupElement& other) const {
    if (z.size() != other.z.size() || l.size() != other.l.size() || m.size() != other.m.size())
      return false;
    for (Eigen::Index i = 0; i < z.size(); ++i)
      if (z[i] != other.z[i]) return false;
    for (Eigen::Index i = 0; i < l.size(); ++i)
      if (l[i] != other.l[i]) return false;
    for (Eigen::Index i = 0; i < m.size(); ++i)
      if (m[i] != other.m[i]) return false;
    return true;
  }
};

GroupElement identity_element(const LieAlgebraSpec& spec);

GroupElement make_element(const LieAlgebraSpec& spec, const RationalVector& z,
                          const RationalVector& l, const RationalVector& m);

/// Step-2 product in second-kind coordinates: l and m add componentwise; the
/// central part picks up the commutation corrections
///   z'' = z + z' + Σ_{j,k} m_j l'_k [X_j, Y_k] + Σ_{i<j} m_i m'_j [X_i, X_j].
GroupElement group_multiply(const LieAlgebraSpec& spec, const GroupElement& g,
                            const GroupElement& h);

GroupElement group_inverse(const LieAlgebraSpec& spec, const GroupElement& g);

/// All γ in Γ with integer coordinates in [-R, R]^n, lexicographic in the
/// product order (z_{n-2d}, ..., z_1, l_d, ..., l_1, m_d, ..., m_1).
/// Throws std::length_error when (2R+1)^n exceeds `cap`.
std::vector<GroupElement> gamma_enumerate(const LieAlgebraSpec& spec, int radius,
                                          std::uint64_t cap = 10'000'000);

/// Enumerates the product set with permuted exponential factors:
/// exp(Z Z_{σz(dz)})...exp(Z Y_{σy(d)})...exp(Z X_{σx(d)})...exp(Z X_{σx(1)}),
/// returning canonical second-kind coordinates. Permutations are 1-based
/// images, e.g. σx = {2,1} swaps X1 and X2.
std::vector<GroupElement> gamma_enumerate_permuted(const LieAlgebraSpec& spec, int radius,
                                                   const std::vector<int>& sigma_z,
                                                   const std::vector<int>& sigma_y,
                                                   const std::vector<int>& sigma_x,
                                                   std::uint64_t cap = 10'000'000);

}  // namespace nilband
