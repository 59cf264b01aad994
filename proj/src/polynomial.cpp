#include "nilband/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nilband {

CentralPolynomial CentralPolynomial::constant(int nvars, const Rational& c) {
  CentralPolynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

CentralPolynomial CentralPolynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  CentralPolynomial p(nvars);
  Exponent e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

CentralPolynomial CentralPolynomial::linear_form(const RationalVector& coeffs) {
  CentralPolynomial p(static_cast<int>(coeffs.size()));
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    Exponent e(coeffs.size(), 0);
    e[k] = 1;
    p.add_term(e, coeffs[k]);
  }
  return p;
}

int CentralPolynomial::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_)
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

void CentralPolynomial::add_term(const Exponent& exponent, const Rational& coeff) {
  if (static_cast<int>(exponent.size()) != nvars_)
    throw std::invalid_argument("exponent length mismatch");
  if (coeff == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

CentralPolynomial CentralPolynomial::operator+(const CentralPolynomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("variable count mismatch");
  CentralPolynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

CentralPolynomial CentralPolynomial::operator-(const CentralPolynomial& other) const {
  return *this + (-other);
}

CentralPolynomial CentralPolynomial::operator-() const {
  CentralPolynomial out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

CentralPolynomial CentralPolynomial::operator*(const CentralPolynomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("variable count mismatch");
  CentralPolynomial out(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponent e(nvars_);
      for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

double CentralPolynomial::evaluate(const Eigen::VectorXd& lambda) const {
  if (lambda.size() != nvars_) throw std::invalid_argument("evaluation point length mismatch");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = to_double(c);
    for (int k = 0; k < nvars_; ++k)
      for (int p = 0; p < e[k]; ++p) t *= lambda[k];
    sum += t;
  }
  return sum;
}

Rational CentralPolynomial::evaluate_exact(const RationalVector& lambda) const {
  if (lambda.size() != nvars_) throw std::invalid_argument("evaluation point length mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < nvars_; ++k)
      for (int p = 0; p < e[k]; ++p) t *= lambda[k];
    sum += t;
  }
  return sum;
}

std::string CentralPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Graded-lex: higher total degree first, then lexicographically larger
  // exponent first.
  std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool any_var = std::any_of(e.begin(), e.end(), [](int p) { return p > 0; });
    bool print_coeff = !any_var || mag != 1;
    if (print_coeff) out << nilband::to_string(mag);
    bool need_dot = print_coeff;
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (need_dot) out << "*";
      out << "λ" << (k + 1);
      if (e[k] > 1) out << "^" << e[k];
      need_dot = true;
    }
  }
  return out.str();
}

CentralPolynomial det_of_central_matrix(const std::vector<CentralPolynomial>& entries, int dim) {
  if (dim <= 0 || entries.size() != static_cast<std::size_t>(dim) * dim)
    throw std::invalid_argument("det_of_central_matrix expects a square matrix");
  const int nvars = entries.front().variable_count();

  // Cofactor expansion along the first remaining row; `cols` tracks the
  // surviving column set.
  std::vector<int> cols(dim);
  for (int j = 0; j < dim; ++j) cols[j] = j;
  auto at = [&](int r, int c) -> const CentralPolynomial& { return entries[r * dim + c]; };

  std::function<CentralPolynomial(int, std::vector<int>&)> minor_det =
      [&](int row, std::vector<int>& live) -> CentralPolynomial {
    if (live.size() == 1) return at(row, live[0]);
    CentralPolynomial acc(nvars);
    for (std::size_t j = 0; j < live.size(); ++j) {
      int col = live[j];
      if (at(row, col).is_zero()) continue;
      std::vector<int> rest;
      rest.reserve(live.size() - 1);
      for (std::size_t t = 0; t < live.size(); ++t)
        if (t != j) rest.push_back(live[t]);
      CentralPolynomial sub = minor_det(row + 1, rest);
      CentralPolynomial contrib = at(row, col) * sub;
      acc = (j % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
  };
  return minor_det(0, cols);
}

HomogeneityReport homogeneity_degree(const CentralPolynomial& p) {
  HomogeneityReport report;
  if (p.is_zero()) {
    report.kind = HomogeneityReport::Kind::Zero;
    return report;
  }
  int deg = -1;
  for (const auto& [e, c] : p.terms()) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (deg < 0) deg = d;
    if (d != deg) {
      report.kind = HomogeneityReport::Kind::NotHomogeneous;
      return report;
    }
  }
  report.kind = HomogeneityReport::Kind::Homogeneous;
  report.degree = deg;
  return report;
}

}  // namespace nilband
