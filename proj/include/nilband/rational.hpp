#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace Eigen {

// Exact rational scalar support, so Matrix<mpq_class> works for the exact
// elimination paths.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace nilband {

using Rational = mpq_class;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization); throws
/// std::invalid_argument on anything else.
Rational rational_from_string(const std::string& text);

/// Canonical "p" or "p/q" form, bit-exact round trip with the parser.
std::string to_string(const Rational& value);

/// mpq_class(p, q) does not reduce; GMP comparisons require canonical form.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& value) { return value.get_d(); }

inline RationalVector rational_zero_vector(Eigen::Index size) {
  RationalVector v(size);
  for (Eigen::Index i = 0; i < size; ++i) v[i] = 0;
  return v;
}

inline bool is_zero(const RationalVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

/// Exact rank by Gaussian elimination over the rationals.
int exact_rank(RationalMatrix a);

/// Exact determinant of a square rational matrix (elimination with pivoting).
Rational exact_determinant(RationalMatrix a);

}  // namespace nilband
