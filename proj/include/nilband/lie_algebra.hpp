#pragma once

#include "nilband/polynomial.hpp"
#include "nilband/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilband {

/// Config/parse failure with the byte offset of the offending input when known.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what, std::size_t byte = std::string::npos)
      : std::runtime_error(byte == std::string::npos
                               ? what
                               : what + " (at byte " + std::to_string(byte) + ")"),
        byte_offset(byte) {}
  std::size_t byte_offset;
};

/// Structure constants of n = z ⊕ b ⊕ a in the ordered basis
///   B1..Bn = (Z_{n-2d}, ..., Z1, Y_d, ..., Y1, X_d, ..., X1).
/// Only brackets with values in span(Z1..Z_{n-2d}) are representable; the
/// table stores unordered pairs i<j of global basis indices (0-based), so
/// antisymmetry is implicit.
class LieAlgebraSpec {
 public:
  LieAlgebraSpec(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  int dim_z() const { return n_ - 2 * d_; }

  // Global 0-based index of a named basis vector (1-based math index).
  int index_of_z(int k) const;  // Z_k -> dim_z - k
  int index_of_y(int j) const;  // Y_j -> dim_z + d - j
  int index_of_x(int i) const;  // X_i -> n - i
  std::string basis_name(int global_index) const;

  /// Registers [B_i, B_j] = value (i < j global). Throws on duplicates.
  void set_bracket(int i, int j, const RationalVector& value);

  /// [B_i, B_j] as a central coefficient vector; handles both orders and
  /// returns zero for untabulated pairs.
  RationalVector basis_bracket(int i, int j) const;

  /// Paper-convention brackets, 1-based indices.
  RationalVector bracket_x_y(int i, int j) const;  // [X_i, Y_j]
  RationalVector bracket_x_x(int i, int j) const;  // [X_i, X_j]

  const std::map<std::pair<int, int>, RationalVector>& table() const { return table_; }

  /// det S as an exact polynomial in λ1..λ_{n-2d}, S_ij = [X_i, Y_j].
  CentralPolynomial det_s_polynomial() const;

 private:
  int n_;
  int d_;
  std::map<std::pair<int, int>, RationalVector> table_;
};

/// Parses the JSON spec format
///   {"n": int, "d": int, "brackets": [{"left": "Xi", "right": "Yj"|"Xj",
///    "value": {"Zk": "p/q", ...}}, ...]}
/// Throws ParseError with a byte position for syntax errors and descriptive
/// messages for dimension mismatches, out-of-range indices, non-central or
/// non-representable brackets.
LieAlgebraSpec parse_spec(const std::string& config_text);
LieAlgebraSpec parse_spec_file(const std::string& path);

/// Bilinear antisymmetric extension of the bracket table; u, v are
/// coefficient vectors over B1..Bn, the result lives in the center.
RationalVector bracket(const LieAlgebraSpec& spec, const RationalVector& u,
                       const RationalVector& v);

struct CheckResult {
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  CheckResult jacobi;
  CheckResult center_is_z;
  CheckResult zb_maximal_commutative;
  CheckResult ab_in_z;
  CheckResult dets_nontrivial;
  CheckResult dets_homogeneous;
  CentralPolynomial det_s;
  bool pass = false;
};

/// Condition checks: Jacobi on all basis triples (exact), center == z,
/// maximality of z ⊕ b (rank of S as a matrix of central vectors), and the
/// det S nontriviality/homogeneity certificates from the polynomial module.
ValidationReport validate(const LieAlgebraSpec& spec);

}  // namespace nilband
