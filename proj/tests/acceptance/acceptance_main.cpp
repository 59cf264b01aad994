// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code next to each check.

#include "nilband/band_limited.hpp"
#include "nilband/frame.hpp"
#include "nilband/grid.hpp"
#include "nilband/group.hpp"
#include "nilband/lie_algebra.hpp"
#include "nilband/polynomial.hpp"
#include "nilband/representation.hpp"
#include "nilband/spectra.hpp"
#include "nilband/util.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace nilband;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

  void expect(bool ok, const std::string& detail) {
    if (!ok) {
      failed_details_.push_back(detail);
    }
  }

  void note(const std::string& text) { notes_.push_back(text); }

  ~Criterion() {
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
    bool ok = failed_details_.empty();
    if (!ok) ++g_failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number_ << ": " << title_ << " ("
              << format_double(elapsed.count()) << " s)\n";
    for (const auto& note : notes_) std::cout << "       " << note << "\n";
    for (const auto& detail : failed_details_) std::cout << "       FAILED: " << detail << "\n";
    std::cout.flush();
  }

 private:
  int number_;
  std::string title_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> failed_details_;
  std::vector<std::string> notes_;
};

std::string fixture_path(const std::string& name) {
  const char* dir = std::getenv("NILBAND_FIXTURES");
  return std::string(dir ? dir : "fixtures") + "/" + name + ".json";
}

LieAlgebraSpec fixture(const std::string& name) { return parse_spec_file(fixture_path(name)); }

CentralPolynomial poly_from_terms(
    int nvars, const std::vector<std::pair<std::vector<int>, std::string>>& terms) {
  CentralPolynomial p(nvars);
  for (const auto& [e, c] : terms) p.add_term(e, rational_from_string(c));
  return p;
}

RationalVector random_rational_vector(int size, std::mt19937_64& rng, int denom_cap = 7,
                                      int num_cap = 9) {
  RationalVector v(size);
  std::uniform_int_distribution<int> num(-num_cap, num_cap), den(1, denom_cap);
  for (int i = 0; i < size; ++i) v[i] = make_rational(num(rng), den(rng));
  return v;
}

GridFunction random_cube_function(const Grid& grid, std::uint64_t seed) {
  GridFunction v = unit_cube_indicator(grid);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (long i = 0; i < v.values.size(); ++i)
    if (v.values[i] != Complex(0.0, 0.0)) v.values[i] = Complex(normal(rng), normal(rng));
  return v;
}

// Quadrature points of I where S(λ) is strictly diagonally dominant (the
// numerically well-resolved representation points for the truncated window
// system), ordered by descending |det S|.
std::vector<Eigen::VectorXd> frame_test_points(const LieAlgebraSpec& spec, int q_lambda,
                                               std::size_t count) {
  auto quad = make_spectral_quadrature(spec, q_lambda);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < quad->size(); ++i) {
    const Eigen::MatrixXd& s = quad->points[i].s;
    bool dominant = true;
    for (int r = 0; r < s.rows(); ++r) {
      double off = s.row(r).cwiseAbs().sum() - std::abs(s(r, r));
      if (std::abs(s(r, r)) <= off) dominant = false;
    }
    if (dominant) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return quad->densities[a] > quad->densities[b];
  });
  std::vector<Eigen::VectorXd> points;
  for (std::size_t i = 0; i < order.size() && points.size() < count; ++i)
    points.push_back(quad->points[order[i]].lambda);
  return points;
}

void criterion_1() {
  Criterion c(1, "symbolic det S regressions (exact)");
  LieAlgebraSpec ex1 = fixture("example1");
  CentralPolynomial det1 = ex1.det_s_polynomial();
  CentralPolynomial want1 = poly_from_terms(2, {{{2, 0}, "1"}, {{0, 2}, "-1"}});
  c.expect(det1 == want1, "example1 det S != λ1^2 - λ2^2, got " + det1.to_string());

  LieAlgebraSpec ex2 = fixture("example2");
  CentralPolynomial det2 = ex2.det_s_polynomial();
  CentralPolynomial want2 = poly_from_terms(3, {{{2, 0, 1}, "1"},
                                                {{1, 2, 0}, "1"},
                                                {{0, 3, 0}, "1"},
                                                {{0, 2, 1}, "1"},
                                                {{0, 1, 2}, "-1"},
                                                {{0, 0, 3}, "1"}});
  c.expect(det2 == want2,
           "example2 det S != λ1^2λ3 + λ1λ2^2 + λ2^3 + λ2^2λ3 - λ2λ3^2 + λ3^3, got " +
               det2.to_string());
  c.note("example1: " + det1.to_string() + "; example2: " + det2.to_string());
}

void criterion_2() {
  Criterion c(2, "B(λ) of the 7-dim example matches the displayed matrix at 100 rational λ");
  LieAlgebraSpec spec = fixture("dim7_gabor");
  std::mt19937_64 rng(20130502);
  bool all = true;
  for (int trial = 0; trial < 100 && all; ++trial) {
    RationalVector lambda = random_rational_vector(3, rng);
    RationalMatrix b = b_matrix<Rational>(spec, lambda);
    // Rows (1,0,0,0), (0,1,0,0), (0,-λ3,-λ1,-λ2), (0,0,-λ2,-λ1).
    RationalMatrix want(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) want(i, j) = 0;
    want(0, 0) = 1;
    want(1, 1) = 1;
    want(2, 1) = -lambda[2];
    want(2, 2) = -lambda[0];
    want(2, 3) = -lambda[1];
    want(3, 2) = -lambda[1];
    want(3, 3) = -lambda[0];
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (b(i, j) != want(i, j)) all = false;
  }
  c.expect(all, "an entry of B(λ) differs from the displayed affine form");
}

void criterion_3() {
  Criterion c(3, "intertwining π_λ(Γ1)v = G(v, B(λ)Z^{2d}), box radius 3, ≤ 1e-11");
  const double tol = 1e-11;
  {
    LieAlgebraSpec spec = fixture("heisenberg");
    Grid grid(1, 8, 16);
    GridFunction v = random_cube_function(grid, 101);
    Eigen::VectorXd lambda(1);
    lambda << 0.375;
    double dev = intertwining_regression(spec, lambda, v, 3);
    c.expect(dev <= tol, "heisenberg deviation " + format_double(dev));
    c.note("heisenberg max deviation " + format_double(dev));
  }
  {
    LieAlgebraSpec spec = fixture("example1");
    Grid grid(2, 8, 8);
    GridFunction v = random_cube_function(grid, 102);
    Eigen::VectorXd lambda(2);
    lambda << 1.0 / 3.0, 0.25;
    double dev = intertwining_regression(spec, lambda, v, 3);
    c.expect(dev <= tol, "example1 deviation " + format_double(dev));
    c.note("example1 max deviation " + format_double(dev));
  }
  {
    LieAlgebraSpec spec = fixture("example2");
    Grid grid(3, 8, 2);
    GridFunction v = random_cube_function(grid, 103);
    Eigen::VectorXd lambda(3);
    lambda << 0.2, 1.0 / 7.0, 1.0 / 9.0;
    double dev = intertwining_regression(spec, lambda, v, 3);
    c.expect(dev <= tol, "example2 deviation " + format_double(dev));
    c.note("example2 max deviation " + format_double(dev));
  }
}

void criterion_4() {
  Criterion c(4, "Parseval window bounds: ≤ 2e-2 at default grid, ≤ 5e-3 at doubled grid");
  struct Case {
    const char* name;
    int q_lambda;
  };
  const std::vector<Case> cases = {
      {"heisenberg", 64}, {"dim5", 64}, {"example1", 16}, {"dim7_gabor", 8}, {"dim7_region", 8}};
  for (const auto& [name, q_lambda] : cases) {
    LieAlgebraSpec spec = fixture(name);
    std::vector<Eigen::VectorXd> points = frame_test_points(spec, q_lambda, 10);
    if (points.size() < 10) {
      c.expect(false, std::string(name) + ": fewer than 10 quadrature points in I");
      continue;
    }
    double worst_default = 0.0, worst_doubled = 0.0;
    std::vector<double> devs_default(points.size()), devs_doubled(points.size());
    parallel_for(points.size(), [&](std::uint64_t i) {
      Grid coarse(spec.d(), 4, 16), fine(spec.d(), 4, 32);
      FrameBoundsOptions opts;
      opts.iterations = 120;
      FrameReport a = parseval_certify(spec, points[i], coarse, opts);
      FrameReport b = parseval_certify(spec, points[i], fine, opts);
      devs_default[i] = std::max(std::abs(a.lower - 1.0), std::abs(a.upper - 1.0));
      devs_doubled[i] = std::max(std::abs(b.lower - 1.0), std::abs(b.upper - 1.0));
    });
    for (std::size_t i = 0; i < points.size(); ++i) {
      worst_default = std::max(worst_default, devs_default[i]);
      worst_doubled = std::max(worst_doubled, devs_doubled[i]);
    }
    c.expect(worst_default <= 2e-2, std::string(name) + " default-grid deviation " +
                                        format_double(worst_default) + " > 2e-2");
    c.expect(worst_doubled <= 5e-3, std::string(name) + " doubled-grid deviation " +
                                        format_double(worst_doubled) + " > 5e-3");
    c.note(std::string(name) + ": 10 pts, worst default " + format_double(worst_default) +
           ", doubled " + format_double(worst_doubled));
  }
}

void criterion_5() {
  Criterion c(5, "density falsification: |det B| ≥ 2 family fails totality (residual ≥ 0.1)");
  LieAlgebraSpec spec = fixture("heisenberg");
  Eigen::VectorXd lambda(1);
  lambda << 2.0;  // |det B(λ)| = 2, outside E
  Grid grid(1, 8, 16);
  SpectralPoint sp = build_spectral_point(spec, lambda);
  GridFunction phi = window_phi(sp, grid);
  std::vector<GridFunction> family;
  for (int k = -2; k <= 2; ++k)
    for (int l = -4; l <= 4; ++l) {
      Eigen::VectorXi kv(1), lv(1);
      kv << k;
      lv << l;
      family.push_back(gabor_member(sp, phi, kv, lv));
    }
  // Probe at a frequency in the gap of the modulation lattice 2Z.
  GridFunction probe = unit_cube_indicator(grid);
  for (long i = 0; i < probe.values.size(); ++i)
    if (probe.values[i] != Complex(0.0, 0.0)) {
      double x = grid.point(i)[0];
      probe.values[i] = std::polar(1.0, 2.0 * std::numbers::pi * x);
    }
  double residual = span_residual(family, probe);
  c.expect(residual >= 0.1, "span residual " + format_double(residual) + " < 0.1");
  c.note("span residual " + format_double(residual) + " with family of " +
         std::to_string(family.size()));

  FrameBoundsOptions opts;
  GaborFrameOptions gopts;
  FrameReport report = frame_bounds(family, opts);
  c.expect(report.lower <= 0.3,
           "lower frame bound estimate " + format_double(report.lower) + " > 0.3");
  c.note("frame bound estimates A=" + format_double(report.lower) +
         " B=" + format_double(report.upper));
  (void)gopts;
}

void criterion_6() {
  Criterion c(6, "norm identity ||f||² = μ(I) within 1e-2, converging under q_λ doubling");
  struct Case {
    const char* name;
    double target;
  };
  for (const auto& [name, target] : std::vector<Case>{{"heisenberg", 0.25}, {"dim5", 1.0 / 12}}) {
    LieAlgebraSpec spec = fixture(name);
    Grid grid(spec.d(), 8, 16);
    auto quad64 = make_spectral_quadrature(spec, 64);
    auto quad128 = make_spectral_quadrature(spec, 128);
    VectorFieldU u64 = constant_indicator_field(*quad64, grid);
    VectorFieldU u128 = constant_indicator_field(*quad128, grid);
    BandLimitedVector f64 = synthesize_admissible_f(spec, quad64, u64, grid);
    BandLimitedVector f128 = synthesize_admissible_f(spec, quad128, u128, grid);
    MeasureResult independent = measure_of_I(spec, 4096);
    double n64 = f64.norm_sq(), n128 = f128.norm_sq();
    c.expect(std::abs(n64 - independent.mu) / independent.mu <= 1e-2,
             std::string(name) + " ||f||² vs μ(I) off: " + format_double(n64) + " vs " +
                 format_double(independent.mu));
    c.expect(std::abs(n64 - target) / target <= 1e-2,
             std::string(name) + " ||f||² off target: " + format_double(n64));
    c.expect(std::abs(n128 - independent.mu) <= std::abs(n64 - independent.mu) + 1e-12,
             std::string(name) + " no convergence under q_λ doubling");
    c.note(std::string(name) + ": ||f||²(64) = " + format_double(n64) + ", μ(I) quadrature = " +
           format_double(independent.mu) + ", target " + format_double(target));
  }
}

void criterion_7() {
  Criterion c(7, "L(Γ)f Parseval ratio ≥ 0.95 at R=8, monotone in R (Heisenberg, 10 random g)");
  LieAlgebraSpec spec = fixture("heisenberg");
  Grid grid(1, 8, 16);
  auto quad = make_spectral_quadrature(spec, 64);
  VectorFieldU u = constant_indicator_field(*quad, grid);
  BandLimitedVector f = synthesize_admissible_f(spec, quad, u, grid);
  const std::vector<int> radii = {2, 4, 6, 8};
  double worst = 1.0;
  for (int trial = 0; trial < 10; ++trial) {
    BandLimitedVector g = make_random_bandlimited(spec, quad, grid, 500 + trial);
    std::vector<double> curve = parseval_ratio_curve(f, g, radii);
    for (std::size_t i = 1; i < curve.size(); ++i)
      c.expect(curve[i] >= curve[i - 1] - 1e-12,
               "ratio not monotone for seed " + std::to_string(500 + trial));
    worst = std::min(worst, curve.back());
    c.expect(curve.back() >= 0.95, "ratio at R=8 is " + format_double(curve.back()) +
                                       " for seed " + std::to_string(500 + trial));
  }
  c.note("worst ratio at R=8 over 10 g: " + format_double(worst));
}

std::vector<GroupElement> heisenberg_probes(const LieAlgebraSpec& spec) {
  std::vector<GroupElement> probes;
  auto add = [&](Rational z, Rational l, Rational m) {
    GroupElement g = identity_element(spec);
    g.z[0] = z;
    g.l[0] = l;
    g.m[0] = m;
    probes.push_back(g);
  };
  // Γ points first, then off-lattice points with 1/q-aligned coordinates.
  add(1, 0, 0);
  add(0, 2, 0);
  add(-1, 1, 0);
  add(Rational(1, 2), 0, 0);
  add(Rational(3, 2), -1, 0);
  add(Rational(1, 4), Rational(1, 2), 0);
  add(Rational(-3, 4), Rational(5, 4), Rational(1, 4));
  add(Rational(5, 2), Rational(-7, 4), Rational(1, 2));
  add(Rational(1, 8), Rational(13, 4), Rational(-1, 4));
  add(Rational(-9, 8), Rational(1, 4), Rational(3, 4));
  return probes;
}

void criterion_8() {
  Criterion c(8, "sampling reconstruction error nonincreasing, ≤ 5e-2 (heis) / ≤ 1e-1 (dim5)");
  const std::vector<int> radii = {2, 4, 6, 8};
  {
    LieAlgebraSpec spec = fixture("heisenberg");
    Grid grid(1, 8, 16);
    auto quad = make_spectral_quadrature(spec, 64);
    VectorFieldU u = constant_indicator_field(*quad, grid);
    BandLimitedVector f = synthesize_admissible_f(spec, quad, u, grid);
    ReconstructionReport report =
        reconstruction_error(spec, f, f, radii, heisenberg_probes(spec));
    for (std::size_t i = 1; i < report.rel_l2_error.size(); ++i)
      c.expect(report.rel_l2_error[i] <= report.rel_l2_error[i - 1] + 1e-12,
               "heisenberg error curve not nonincreasing");
    c.expect(report.rel_l2_error.back() <= 5e-2,
             "heisenberg error at R=8: " + format_double(report.rel_l2_error.back()));
    std::string curve;
    for (double e : report.rel_l2_error) curve += format_double(e) + " ";
    c.note("heisenberg error curve: " + curve);
  }
  {
    LieAlgebraSpec spec = fixture("dim5");
    Grid grid(2, 8, 16);
    auto quad = make_spectral_quadrature(spec, 64);
    VectorFieldU u = constant_indicator_field(*quad, grid);
    BandLimitedVector f = synthesize_admissible_f(spec, quad, u, grid);
    std::vector<GroupElement> probes;
    auto add = [&](Rational z, Rational l1, Rational l2, Rational m1, Rational m2) {
      GroupElement g = identity_element(spec);
      g.z[0] = z;
      g.l[0] = l1;
      g.l[1] = l2;
      g.m[0] = m1;
      g.m[1] = m2;
      probes.push_back(g);
    };
    add(1, 0, 0, 0, 0);
    add(0, 1, -1, 0, 0);
    add(Rational(1, 2), 0, 0, 0, 0);
    add(Rational(1, 4), Rational(1, 2), 1, 0, 0);
    add(Rational(-3, 4), Rational(3, 4), Rational(-1, 2), Rational(1, 4), 0);
    add(Rational(3, 2), Rational(-5, 4), Rational(1, 4), 0, Rational(1, 2));
    add(Rational(1, 8), 2, Rational(7, 4), Rational(-1, 4), Rational(1, 4));
    ReconstructionReport report = reconstruction_error(spec, f, f, radii, probes);
    for (std::size_t i = 1; i < report.rel_l2_error.size(); ++i)
      c.expect(report.rel_l2_error[i] <= report.rel_l2_error[i - 1] + 1e-12,
               "dim5 error curve not nonincreasing");
    c.expect(report.rel_l2_error.back() <= 1e-1,
             "dim5 error at R=8: " + format_double(report.rel_l2_error.back()));
    std::string curve;
    for (double e : report.rel_l2_error) curve += format_double(e) + " ";
    c.note("dim5 error curve: " + curve);
  }
}

void criterion_9() {
  Criterion c(9, "isometry of V_f: spectral vs sampled norm within 5e-2, improving under refinement");
  // Refinement doubles the spatial resolution together with the l-box so the
  // modulation reach stays at the grid Nyquist.
  {
    LieAlgebraSpec spec = fixture("heisenberg");
    double e[2];
    for (int level = 0; level < 2; ++level) {
      Grid grid(1, 8, 16 << level);
      auto quad = make_spectral_quadrature(spec, 64);
      VectorFieldU u = constant_indicator_field(*quad, grid);
      BandLimitedVector h = make_random_bandlimited(spec, quad, grid, 321);
      BandLimitedVector f = synthesize_admissible_f(spec, quad, u, grid);
      IsometryReport r = isometry_check(h, f, IsometryParams{8 << level, 16 << level});
      e[level] = r.rel_error;
    }
    c.expect(e[0] <= 5e-2, "heisenberg level-1 error " + format_double(e[0]));
    c.expect(e[1] <= e[0] + 1e-6, "heisenberg not improving under refinement");
    c.note("heisenberg rel errors: " + format_double(e[0]) + " -> " + format_double(e[1]));
  }
  {
    LieAlgebraSpec spec = fixture("dim5");
    double e[2];
    for (int level = 0; level < 2; ++level) {
      Grid grid(2, 8, 16 << level);
      auto quad = make_spectral_quadrature(spec, 64);
      VectorFieldU u = constant_indicator_field(*quad, grid);
      BandLimitedVector f = synthesize_admissible_f(spec, quad, u, grid);
      // h = a(λ) f with a vanishing smoothly at the degenerate set and at ∂K,
      // weighted by the square root of the Plancherel density.
      BandLimitedVector h = f;
      for (std::size_t k = 0; k < quad->size(); ++k)
        h.v[k] = (std::sin(2.0 * std::numbers::pi * quad->points[k].lambda[0]) *
                  std::sqrt(quad->densities[k])) *
                 f.v[k];
      IsometryReport r = isometry_check(h, f, IsometryParams{8 << level, 16 << level});
      e[level] = r.rel_error;
    }
    c.expect(e[0] <= 5e-2, "dim5 level-1 error " + format_double(e[0]));
    c.expect(e[1] <= e[0] + 1e-6, "dim5 not improving under refinement");
    c.note("dim5 rel errors: " + format_double(e[0]) + " -> " + format_double(e[1]));
  }
}

void criterion_10() {
  Criterion c(10, "structural suite: associativity, Jacobi, nullity, jump indices, Γ ordering");
  const std::vector<std::string> names = {"heisenberg", "dim5",        "example1", "dim7_gabor",
                                          "dim7_region", "dim8_region", "example2"};
  std::mt19937_64 rng(20130503);
  for (const auto& name : names) {
    LieAlgebraSpec spec = fixture(name);
    ValidationReport report = validate(spec);
    c.expect(report.pass, name + " fails validation");

    // Associativity, exact, 1000 random rational triples per fixture.
    bool assoc = true;
    for (int trial = 0; trial < 1000 && assoc; ++trial) {
      auto mk = [&] {
        GroupElement g = identity_element(spec);
        g.z = random_rational_vector(spec.dim_z(), rng, 5, 6);
        g.l = random_rational_vector(spec.d(), rng, 5, 6);
        g.m = random_rational_vector(spec.d(), rng, 5, 6);
        return g;
      };
      GroupElement a = mk(), b = mk(), cc = mk();
      GroupElement left = group_multiply(spec, group_multiply(spec, a, b), cc);
      GroupElement right = group_multiply(spec, a, group_multiply(spec, b, cc));
      if (!(left == right)) assoc = false;
    }
    c.expect(assoc, name + " associativity fails");

    // Nullity and jump indices at random λ with det S != 0.
    const CentralPolynomial det = spec.det_s_polynomial();
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    int checked = 0;
    bool spectra_ok = true;
    while (checked < 1000 && spectra_ok) {
      Eigen::VectorXd lambda(spec.dim_z());
      for (int k = 0; k < spec.dim_z(); ++k) lambda[k] = unif(rng);
      if (std::abs(det.evaluate(lambda)) < 1e-3) continue;
      ++checked;
      if (m_nullity(spec, lambda) != spec.dim_z()) spectra_ok = false;
      std::set<int> jumps = jump_indices(spec, lambda);
      std::set<int> expect;
      for (int k = spec.dim_z() + 1; k <= spec.n(); ++k) expect.insert(k);
      if (jumps != expect) spectra_ok = false;
    }
    c.expect(spectra_ok, name + " nullity/jump indices fail at a generic λ");
  }

  // Γ ordering: permuting the X factors changes the point set on example1;
  // permuting Z and Y factors does not.
  LieAlgebraSpec ex1 = fixture("example1");
  auto key = [&](const GroupElement& g) {
    std::ostringstream out;
    for (int k = 0; k < ex1.dim_z(); ++k) out << to_string(g.z[k]) << ",";
    for (int k = 0; k < ex1.d(); ++k) out << to_string(g.l[k]) << ",";
    for (int k = 0; k < ex1.d(); ++k) out << to_string(g.m[k]) << ",";
    return out.str();
  };
  auto as_set = [&](const std::vector<GroupElement>& list) {
    std::set<std::string> set;
    for (const auto& g : list) set.insert(key(g));
    return set;
  };
  auto base = as_set(gamma_enumerate(ex1, 1));
  auto x_swapped = as_set(gamma_enumerate_permuted(ex1, 1, {1, 2}, {1, 2}, {2, 1}));
  auto zy_swapped = as_set(gamma_enumerate_permuted(ex1, 1, {2, 1}, {2, 1}, {1, 2}));
  c.expect(base != x_swapped, "X-order permutation does not change Γ as a set");
  c.expect(base == zy_swapped, "Z/Y-order permutation changes Γ as a set");
  c.expect(base.size() == 729, "example1 Γ with R=1 should have 729 elements");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criteria failed\n";
  return 1;
}
