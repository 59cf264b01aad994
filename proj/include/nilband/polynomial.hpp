#pragma once

#include "nilband/rational.hpp"

#include <Eigen/Core>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nilband {

/// Exact multivariate polynomial in the central variables λ1..λk with
/// rational coefficients. Terms are kept in a sorted sparse map and zero
/// coefficients are never stored.
class CentralPolynomial {
 public:
  using Exponent = std::vector<int>;

  CentralPolynomial() : nvars_(0) {}
  explicit CentralPolynomial(int nvars) : nvars_(nvars) {}

  static CentralPolynomial constant(int nvars, const Rational& c);
  static CentralPolynomial variable(int nvars, int index);  // λ_{index+1}
  /// Degree-one form  Σ_k coeffs[k] · λ_{k+1}.
  static CentralPolynomial linear_form(const RationalVector& coeffs);

  int variable_count() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  /// Max total degree of stored terms; -1 for the zero polynomial.
  int degree() const;

  void add_term(const Exponent& exponent, const Rational& coeff);

  CentralPolynomial operator+(const CentralPolynomial& other) const;
  CentralPolynomial operator-(const CentralPolynomial& other) const;
  CentralPolynomial operator*(const CentralPolynomial& other) const;
  CentralPolynomial operator-() const;
  bool operator==(const CentralPolynomial& other) const = default;

  double evaluate(const Eigen::VectorXd& lambda) const;
  Rational evaluate_exact(const RationalVector& lambda) const;

  /// Canonical printing, graded-lex with the highest-degree terms first,
  /// e.g. "λ1^2 - λ2^2".
  std::string to_string() const;

 private:
  int nvars_;
  std::map<Exponent, Rational> terms_;
};

struct HomogeneityReport {
  enum class Kind { Zero, Homogeneous, NotHomogeneous };
  Kind kind = Kind::Zero;
  int degree = -1;  // meaningful only when homogeneous

  bool homogeneous_of_degree(int d) const {
    return kind == Kind::Homogeneous && degree == d;
  }
};

/// Exact determinant of a square matrix whose entries are central linear
/// forms (row-major `entries`, size dim*dim). Cofactor expansion; exact.
CentralPolynomial det_of_central_matrix(const std::vector<CentralPolynomial>& entries, int dim);

HomogeneityReport homogeneity_degree(const CentralPolynomial& p);

inline bool is_nontrivial(const CentralPolynomial& p) { return !p.is_zero(); }

}  // namespace nilband
