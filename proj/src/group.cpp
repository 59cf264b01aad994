#include "nilband/group.hpp"

#include <cmath>
#include <stdexcept>

namespace nilband {

GroupElement identity_element(const LieAlgebraSpec& spec) {
  return {rational_zero_vector(spec.dim_z()), rational_zero_vector(spec.d()),
          rational_zero_vector(spec.d())};
}

GroupElement make_element(const LieAlgebraSpec& spec, const RationalVector& z,
                          const RationalVector& l, const RationalVector& m) {
  if (z.size() != spec.dim_z() || l.size() != spec.d() || m.size() != spec.d())
    throw std::invalid_argument("group element coordinate sizes do not match the spec");
  return {z, l, m};
}

GroupElement group_multiply(const LieAlgebraSpec& spec, const GroupElement& g,
                            const GroupElement& h) {
  const int d = spec.d(), dz = spec.dim_z();
  GroupElement out = identity_element(spec);
  for (int k = 0; k < dz; ++k) out.z[k] = g.z[k] + h.z[k];
  for (int j = 0; j < d; ++j) {
    out.l[j] = g.l[j] + h.l[j];
    out.m[j] = g.m[j] + h.m[j];
  }
  // Moving X(g.m) across Y(h.l): each swap exp(m_j X_j) exp(l'_k Y_k) emits
  // exp(m_j l'_k [X_j, Y_k]).
  for (int j = 1; j <= d; ++j) {
    if (g.m[j - 1] == 0) continue;
    for (int k = 1; k <= d; ++k) {
      if (h.l[k - 1] == 0) continue;
      RationalVector value = spec.bracket_x_y(j, k);
      Rational coeff = g.m[j - 1] * h.l[k - 1];
      for (int t = 0; t < dz; ++t) out.z[t] += coeff * value[t];
    }
  }
  // Merging the two ordered X products: moving exp(m'_j X_j) left across
  // exp(m_i X_i) for i < j emits exp(m_i m'_j [X_i, X_j]).
  for (int i = 1; i <= d; ++i) {
    if (g.m[i - 1] == 0) continue;
    for (int j = i + 1; j <= d; ++j) {
      if (h.m[j - 1] == 0) continue;
      RationalVector value = spec.bracket_x_x(i, j);
      Rational coeff = g.m[i - 1] * h.m[j - 1];
      for (int t = 0; t < dz; ++t) out.z[t] += coeff * value[t];
    }
  }
  return out;
}

GroupElement group_inverse(const LieAlgebraSpec& spec, const GroupElement& g) {
  const int d = spec.d(), dz = spec.dim_z();
  GroupElement out;
  out.z = RationalVector(-g.z);
  out.l = RationalVector(-g.l);
  out.m = RationalVector(-g.m);
  for (int j = 1; j <= d; ++j) {
    if (g.m[j - 1] == 0) continue;
    for (int k = 1; k <= d; ++k) {
      if (g.l[k - 1] == 0) continue;
      RationalVector value = spec.bracket_x_y(j, k);
      Rational coeff = g.m[j - 1] * g.l[k - 1];
      for (int t = 0; t < dz; ++t) out.z[t] += coeff * value[t];
    }
  }
  for (int i = 1; i <= d; ++i) {
    if (g.m[i - 1] == 0) continue;
    for (int j = i + 1; j <= d; ++j) {
      if (g.m[j - 1] == 0) continue;
      RationalVector value = spec.bracket_x_x(i, j);
      Rational coeff = g.m[i - 1] * g.m[j - 1];
      for (int t = 0; t < dz; ++t) out.z[t] += coeff * value[t];
    }
  }
  return out;
}

namespace {

std::uint64_t box_count(int n, int radius, std::uint64_t cap) {
  std::uint64_t count = 1;
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(radius) + 1;
  for (int i = 0; i < n; ++i) {
    if (count > cap / side + 1) return cap + 1;
    count *= side;
    if (count > cap) return cap + 1;
  }
  return count;
}

}  // namespace

std::vector<GroupElement> gamma_enumerate(const LieAlgebraSpec& spec, int radius,
                                          std::uint64_t cap) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  const int n = spec.n(), d = spec.d(), dz = spec.dim_z();
  std::uint64_t count = box_count(n, radius, cap);
  if (count > cap)
    throw std::length_error("gamma enumeration exceeds cap of " + std::to_string(cap) +
                            " elements");
  std::vector<GroupElement> out;
  out.reserve(count);
  // Odometer over the product order (z_{dz},...,z_1, l_d,...,l_1, m_d,...,m_1).
  std::vector<int> digits(n, -radius);
  const int side = 2 * radius + 1;
  for (std::uint64_t it = 0; it < count; ++it) {
    GroupElement g = identity_element(spec);
    for (int t = 0; t < dz; ++t) g.z[dz - 1 - t] = digits[t];
    for (int t = 0; t < d; ++t) g.l[d - 1 - t] = digits[dz + t];
    for (int t = 0; t < d; ++t) g.m[d - 1 - t] = digits[dz + d + t];
    out.push_back(std::move(g));
    for (int pos = n - 1; pos >= 0; --pos) {
      if (++digits[pos] <= radius) break;
      digits[pos] = -radius;
    }
  }
  (void)side;
  return out;
}

std::vector<GroupElement> gamma_enumerate_permuted(const LieAlgebraSpec& spec, int radius,
                                                   const std::vector<int>& sigma_z,
                                                   const std::vector<int>& sigma_y,
                                                   const std::vector<int>& sigma_x,
                                                   std::uint64_t cap) {
  const int n = spec.n(), d = spec.d(), dz = spec.dim_z();
  if (static_cast<int>(sigma_z.size()) != dz || static_cast<int>(sigma_y.size()) != d ||
      static_cast<int>(sigma_x.size()) != d)
    throw std::invalid_argument("permutation sizes must match (dim z, d, d)");
  std::uint64_t count = box_count(n, radius, cap);
  if (count > cap)
    throw std::length_error("gamma enumeration exceeds cap of " + std::to_string(cap) +
                            " elements");

  auto single = [&](char kind, int paper_index, const Rational& coeff) {
    GroupElement g = identity_element(spec);
    if (kind == 'Z')
      g.z[paper_index - 1] = coeff;
    else if (kind == 'Y')
      g.l[paper_index - 1] = coeff;
    else
      g.m[paper_index - 1] = coeff;
    return g;
  };

  std::vector<GroupElement> out;
  out.reserve(count);
  std::vector<int> digits(n, -radius);
  for (std::uint64_t it = 0; it < count; ++it) {
    GroupElement g = identity_element(spec);
    int pos = 0;
    for (int t = dz - 1; t >= 0; --t, ++pos)
      g = group_multiply(spec, g, single('Z', sigma_z[t], digits[pos]));
    for (int t = d - 1; t >= 0; --t, ++pos)
      g = group_multiply(spec, g, single('Y', sigma_y[t], digits[pos]));
    for (int t = d - 1; t >= 0; --t, ++pos)
      g = group_multiply(spec, g, single('X', sigma_x[t], digits[pos]));
    out.push_back(std::move(g));
    for (int p = n - 1; p >= 0; --p) {
      if (++digits[p] <= radius) break;
      digits[p] = -radius;
    }
  }
  return out;
}

}  // namespace nilband
