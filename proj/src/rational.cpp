#include "nilband/rational.hpp"

#include <cctype>

namespace nilband {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = text.find('/');
  auto check_int = [&](std::size_t lo, std::size_t hi) {
    if (lo >= hi) return false;
    std::size_t i = lo;
    if (text[i] == '-' || text[i] == '+') ++i;
    if (i >= hi) return false;
    for (; i < hi; ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    return true;
  };
  bool ok = (slash == std::string::npos)
                ? check_int(0, text.size())
                : check_int(0, slash) && check_int(slash + 1, text.size());
  if (!ok) throw std::invalid_argument("malformed rational literal '" + text + "'");
  Rational value;
  if (value.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  if (slash != std::string::npos && mpz_sgn(mpq_denref(value.get_mpq_t())) == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

int exact_rank(RationalMatrix a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      if (a(r, col) == 0) continue;
      Rational factor = a(r, col) / a(row, col);
      for (Eigen::Index c = col; c < cols; ++c) a(r, c) -= factor * a(row, c);
    }
    ++row;
    ++rank;
  }
  return rank;
}

Rational exact_determinant(RationalMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Eigen::Index n = a.rows();
  Rational det = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rational factor = a(r, col) / a(col, col);
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

}  // namespace nilband
