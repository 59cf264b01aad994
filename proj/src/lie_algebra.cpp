#include "nilband/lie_algebra.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace nilband {

LieAlgebraSpec::LieAlgebraSpec(int n, int d) : n_(n), d_(d) {
  if (n < 1 || d < 1) throw ParseError("n and d must be positive");
  if (n - 2 * d < 1)
    throw ParseError("dimension mismatch: need n - 2d >= 1, got n=" + std::to_string(n) +
                     ", d=" + std::to_string(d));
}

int LieAlgebraSpec::index_of_z(int k) const {
  if (k < 1 || k > dim_z()) throw ParseError("Z index out of range: " + std::to_string(k));
  return dim_z() - k;
}

int LieAlgebraSpec::index_of_y(int j) const {
  if (j < 1 || j > d_) throw ParseError("Y index out of range: " + std::to_string(j));
  return dim_z() + d_ - j;
}

int LieAlgebraSpec::index_of_x(int i) const {
  if (i < 1 || i > d_) throw ParseError("X index out of range: " + std::to_string(i));
  return n_ - i;
}

std::string LieAlgebraSpec::basis_name(int g) const {
  if (g < 0 || g >= n_) throw std::out_of_range("basis index");
  if (g < dim_z()) return "Z" + std::to_string(dim_z() - g);
  if (g < dim_z() + d_) return "Y" + std::to_string(dim_z() + d_ - g);
  return "X" + std::to_string(n_ - g);
}

void LieAlgebraSpec::set_bracket(int i, int j, const RationalVector& value) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || i >= j)
    throw ParseError("bad bracket pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (value.size() != dim_z()) throw ParseError("bracket value has wrong central dimension");
  if (table_.count({i, j}))
    throw ParseError("duplicate bracket [" + basis_name(i) + "," + basis_name(j) + "]");
  if (is_zero(value)) return;
  table_.emplace(std::make_pair(i, j), value);
}

RationalVector LieAlgebraSpec::basis_bracket(int i, int j) const {
  if (i == j) return rational_zero_vector(dim_z());
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = table_.find({i, j});
  if (it == table_.end()) return rational_zero_vector(dim_z());
  return flip ? RationalVector(-it->second) : it->second;
}

RationalVector LieAlgebraSpec::bracket_x_y(int i, int j) const {
  return basis_bracket(index_of_x(i), index_of_y(j));
}

RationalVector LieAlgebraSpec::bracket_x_x(int i, int j) const {
  return basis_bracket(index_of_x(i), index_of_x(j));
}

CentralPolynomial LieAlgebraSpec::det_s_polynomial() const {
  std::vector<CentralPolynomial> entries;
  entries.reserve(static_cast<std::size_t>(d_) * d_);
  for (int i = 1; i <= d_; ++i)
    for (int j = 1; j <= d_; ++j)
      entries.push_back(CentralPolynomial::linear_form(bracket_x_y(i, j)));
  return det_of_central_matrix(entries, d_);
}

namespace {

// "X3" -> ('X', 3); rejects anything else.
std::pair<char, int> parse_basis_name(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'X' && name[0] != 'Y' && name[0] != 'Z'))
    throw ParseError("invalid basis name '" + name + "'");
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw ParseError("invalid basis name '" + name + "'");
  return {name[0], std::stoi(name.substr(1))};
}

}  // namespace

LieAlgebraSpec parse_spec(const std::string& config_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(config_text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("syntax error: ") + err.what(), err.byte);
  }
  if (!doc.is_object()) throw ParseError("top-level value must be an object");
  if (!doc.contains("n") || !doc.contains("d"))
    throw ParseError("missing required fields 'n' and 'd'");
  if (!doc["n"].is_number_integer() || !doc["d"].is_number_integer())
    throw ParseError("'n' and 'd' must be integers");

  LieAlgebraSpec spec(doc["n"].get<int>(), doc["d"].get<int>());
  const int d = spec.d();

  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) throw ParseError("'brackets' must be an array");
    for (const auto& entry : doc["brackets"]) {
      if (!entry.is_object() || !entry.contains("left") || !entry.contains("right") ||
          !entry.contains("value"))
        throw ParseError("each bracket needs 'left', 'right' and 'value'");
      auto [lk, li] = parse_basis_name(entry["left"].get<std::string>());
      auto [rk, ri] = parse_basis_name(entry["right"].get<std::string>());
      if (lk == 'Z' || rk == 'Z')
        throw ParseError("bracket with a central factor is identically zero and not representable");
      if (lk == 'Y')
        throw ParseError("non-representable bracket [" + entry["left"].get<std::string>() + "," +
                         entry["right"].get<std::string>() + "]: b must be commutative");
      if (li < 1 || li > d || ri < 1 || ri > d)
        throw ParseError("bracket index out of range in [" + entry["left"].get<std::string>() +
                         "," + entry["right"].get<std::string>() + "]");
      if (!entry["value"].is_object()) throw ParseError("bracket 'value' must be an object");
      RationalVector central = rational_zero_vector(spec.dim_z());
      for (const auto& [key, val] : entry["value"].items()) {
        auto [ck, ci] = parse_basis_name(key);
        if (ck != 'Z')
          throw ParseError("non-central bracket value component '" + key + "'");
        if (ci < 1 || ci > spec.dim_z())
          throw ParseError("central index out of range in value component '" + key + "'");
        if (!val.is_string())
          throw ParseError("rational values must be strings, got " + val.dump());
        central[ci - 1] = rational_from_string(val.get<std::string>());
      }
      // Normalize to global-index storage (i < j in the B ordering).
      if (rk == 'Y') {
        // [X_li, Y_ri] = value; globally Y comes before X, so flip the sign.
        spec.set_bracket(spec.index_of_y(ri), spec.index_of_x(li), RationalVector(-central));
      } else {
        if (li == ri)
          throw ParseError("bracket [X" + std::to_string(li) + ",X" + std::to_string(ri) +
                           "] is identically zero; remove it");
        if (li > ri)
          throw ParseError("store X-X brackets with ascending indices: [X" + std::to_string(ri) +
                           ",X" + std::to_string(li) + "]");
        // [X_li, X_ri] with li < ri; globally X_ri comes first.
        spec.set_bracket(spec.index_of_x(ri), spec.index_of_x(li), RationalVector(-central));
      }
    }
  }
  return spec;
}

LieAlgebraSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

RationalVector bracket(const LieAlgebraSpec& spec, const RationalVector& u,
                       const RationalVector& v) {
  if (u.size() != spec.n() || v.size() != spec.n())
    throw std::invalid_argument("bracket arguments must have length n");
  RationalVector out = rational_zero_vector(spec.dim_z());
  for (const auto& [pair, value] : spec.table()) {
    auto [i, j] = pair;
    Rational coeff = u[i] * v[j] - u[j] * v[i];
    if (coeff == 0) continue;
    for (int k = 0; k < spec.dim_z(); ++k) out[k] += coeff * value[k];
  }
  return out;
}

ValidationReport validate(const LieAlgebraSpec& spec) {
  ValidationReport report;
  const int n = spec.n(), d = spec.d(), dz = spec.dim_z();

  // Jacobi: all brackets are central and the center kills everything, so each
  // double bracket must vanish identically. Asserted exactly.
  {
    bool ok = true;
    std::string detail = "all double brackets vanish";
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        for (int k = j + 1; k < n && ok; ++k) {
          auto embed = [&](const RationalVector& central) {
            RationalVector full = rational_zero_vector(n);
            for (int t = 0; t < dz; ++t) full[t] = central[dz - 1 - t];
            return full;
          };
          auto unit = [&](int g) {
            RationalVector e = rational_zero_vector(n);
            e[g] = 1;
            return e;
          };
          RationalVector s1 = bracket(spec, embed(spec.basis_bracket(i, j)), unit(k));
          RationalVector s2 = bracket(spec, embed(spec.basis_bracket(j, k)), unit(i));
          RationalVector s3 = bracket(spec, embed(spec.basis_bracket(k, i)), unit(j));
          RationalVector sum = s1;
          for (int t = 0; t < dz; ++t) sum[t] += s2[t] + s3[t];
          if (!is_zero(sum)) {
            ok = false;
            detail = "Jacobi fails on (" + spec.basis_name(i) + "," + spec.basis_name(j) + "," +
                     spec.basis_name(k) + ")";
          }
        }
    report.jacobi = {ok, detail};
  }

  // Center check: the kernel of v -> [v, .] must be exactly z. Stack the
  // pairing against every basis vector and compute the exact nullity.
  {
    RationalMatrix pairing(n * dz, n);
    for (Eigen::Index r = 0; r < pairing.rows(); ++r)
      for (Eigen::Index c = 0; c < pairing.cols(); ++c) pairing(r, c) = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        RationalVector value = spec.basis_bracket(i, j);
        for (int k = 0; k < dz; ++k) pairing(j * dz + k, i) = value[k];
      }
    int nullity = n - exact_rank(pairing);
    bool ok = (nullity == dz);
    report.center_is_z = {ok, ok ? "center has dimension " + std::to_string(dz)
                                 : "center has dimension " + std::to_string(nullity) +
                                       ", expected " + std::to_string(dz)};
  }

  // Maximality of z+b: no nonzero A in a with [A, b] = 0, i.e. the map
  // a -> ([A, Y_1], ..., [A, Y_d]) is injective. Rank of S as a matrix of
  // central vectors.
  {
    RationalMatrix stacked(d * dz, d);
    for (Eigen::Index r = 0; r < stacked.rows(); ++r)
      for (Eigen::Index c = 0; c < stacked.cols(); ++c) stacked(r, c) = 0;
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) {
        RationalVector value = spec.bracket_x_y(i, j);
        for (int k = 0; k < dz; ++k) stacked((j - 1) * dz + k, i - 1) = value[k];
      }
    int rank = exact_rank(stacked);
    bool ok = (rank == d);
    report.zb_maximal_commutative = {
        ok, ok ? "no element of a commutes with all of b"
               : "an element of a commutes with all of b (rank " + std::to_string(rank) + " < " +
                     std::to_string(d) + ")"};
  }

  // [a, b] in z holds by the storage codomain; recorded for completeness.
  report.ab_in_z = {true, "bracket table is valued in span(Z1..Z" + std::to_string(dz) + ")"};

  report.det_s = spec.det_s_polynomial();
  report.dets_nontrivial = {is_nontrivial(report.det_s),
                            is_nontrivial(report.det_s) ? "det S has " +
                                                              std::to_string(report.det_s.term_count()) +
                                                              " terms"
                                                        : "det S is identically zero"};
  HomogeneityReport hom = homogeneity_degree(report.det_s);
  bool hom_ok = hom.homogeneous_of_degree(d);
  std::string hom_detail;
  switch (hom.kind) {
    case HomogeneityReport::Kind::Zero:
      hom_detail = "det S is the zero polynomial";
      break;
    case HomogeneityReport::Kind::NotHomogeneous:
      hom_detail = "det S is not homogeneous";
      break;
    case HomogeneityReport::Kind::Homogeneous:
      hom_detail = "det S is homogeneous of degree " + std::to_string(hom.degree);
      break;
  }
  report.dets_homogeneous = {hom_ok, hom_detail};

  report.pass = report.jacobi.pass && report.center_is_z.pass &&
                report.zb_maximal_commutative.pass && report.ab_in_z.pass &&
                report.dets_nontrivial.pass && report.dets_homogeneous.pass;
  return report;
}

}  // namespace nilband
