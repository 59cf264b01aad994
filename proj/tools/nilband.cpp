#include "nilband/band_limited.hpp"
#include "nilband/frame.hpp"
#include "nilband/grid.hpp"
#include "nilband/group.hpp"
#include "nilband/lie_algebra.hpp"
#include "nilband/polynomial.hpp"
#include "nilband/representation.hpp"
#include "nilband/spectra.hpp"
#include "nilband/util.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::ordered_json;
using namespace nilband;

ordered_json report_header(const std::string& command, const std::string& spec_path,
                           std::uint64_t seed) {
  ordered_json doc;
  doc["tool"] = "nilband";
  doc["version"] = kVersion;
  doc["command"] = command;
  doc["spec"] = spec_path;
  doc["seed"] = seed;
  doc["threads"] = thread_count();
  return doc;
}

// Reports print doubles through a fixed shortest-round-trip formatter so the
// bytes do not depend on locale or thread count.
ordered_json num(double value) { return ordered_json::parse(format_double(value)); }

Eigen::VectorXd parse_lambda_csv(const std::string& text, int expected) {
  std::vector<double> parts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    parts.push_back(std::stod(item));
  }
  if (static_cast<int>(parts.size()) != expected)
    throw CLI::ValidationError("--lambda", "expected " + std::to_string(expected) +
                                               " comma-separated values");
  Eigen::VectorXd lambda(expected);
  for (int i = 0; i < expected; ++i) lambda[i] = parts[i];
  return lambda;
}

Grid parse_grid_arg(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--grid", "expected T,Q");
  double extent = std::stod(text.substr(0, comma));
  int q = std::stoi(text.substr(comma + 1));
  return Grid(1, extent, q);  // dimension patched by the caller
}

std::string flags_csv_row(const Eigen::VectorXd& lambda, const RegionFlags& flags) {
  std::string row;
  for (Eigen::Index k = 0; k < lambda.size(); ++k) row += format_double(lambda[k]) + ",";
  row += format_double(flags.det_value) + "," + format_double(flags.norm_value) + "," +
         std::to_string(flags.in_e ? 1 : 0) + "," + std::to_string(flags.in_k ? 1 : 0) + "," +
         std::to_string(flags.in_q ? 1 : 0) + "," + std::to_string(flags.in_i ? 1 : 0);
  return row;
}

ordered_json check_json(const CheckResult& check) {
  ordered_json doc;
  doc["pass"] = check.pass;
  doc["detail"] = check.detail;
  return doc;
}

std::vector<GroupElement> default_probes(const LieAlgebraSpec& spec, int q) {
  // Deterministic 1/q-aligned probes: a couple of Γ points plus off-lattice
  // points in every coordinate block.
  std::vector<GroupElement> probes;
  const int d = spec.d(), dz = spec.dim_z();
  auto make = [&](std::initializer_list<Rational> z, std::initializer_list<Rational> l,
                  std::initializer_list<Rational> m) {
    GroupElement g = identity_element(spec);
    int i = 0;
    for (const auto& v : z)
      if (i < dz) g.z[i++] = v;
    i = 0;
    for (const auto& v : l)
      if (i < d) g.l[i++] = v;
    i = 0;
    for (const auto& v : m)
      if (i < d) g.m[i++] = v;
    return g;
  };
  Rational half(1, 2), quarter(1, 4), eighth = Rational(1, 4) / 2;
  Rational hq(1, q);
  probes.push_back(make({1}, {}, {}));
  probes.push_back(make({0}, {1}, {}));
  probes.push_back(make({1, -1}, {2, 1}, {}));
  probes.push_back(make({half}, {}, {}));
  probes.push_back(make({-half, half}, {quarter}, {}));
  probes.push_back(make({quarter}, {half, -half}, {hq * 2}));
  probes.push_back(make({half + 1}, {-half}, {quarter}));
  probes.push_back(make({eighth}, {half + 2}, {-quarter, quarter}));
  probes.push_back(make({-quarter, eighth}, {1 + quarter}, {half}));
  probes.push_back(make({3 * half}, {-2 - half}, {hq}));
  return probes;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Band-limited sampling toolkit for a class of step-2 nilpotent Lie groups"};
  app.require_subcommand(1);
  app.fallthrough(true);

  int threads = 0;
  std::uint64_t seed = 12345;
  app.add_option("--threads", threads, "worker threads (overrides NILBAND_THREADS)");
  app.add_option("--seed", seed, "seed recorded in every report");

  std::string spec_path;
  std::string lambda_csv;
  std::string grid_arg = "8,16";
  std::string out_arg;
  int q_grid = 16;
  int q_lambda = 64;
  int box_radius = 3;
  bool sweep = false;
  std::string method = "lanczos";
  int iterations = 160;
  double tau = 2e-2;
  double tol = 1e-11;
  std::vector<int> r_list;

  auto* validate_cmd = app.add_subcommand("validate", "structure-constant checks and det S");
  validate_cmd->add_option("spec", spec_path, "algebra spec file")->required();

  auto* detpoly_cmd = app.add_subcommand("detpoly", "symbolic det S(λ)");
  detpoly_cmd->add_option("spec", spec_path)->required();

  auto* region_cmd = app.add_subcommand("region", "CSV of region flags over the λ grid");
  region_cmd->add_option("spec", spec_path)->required();
  region_cmd->add_option("--q", q_grid, "grid resolution per axis");

  auto* measure_cmd = app.add_subcommand("measure", "quadrature of m(I) and μ(I)");
  measure_cmd->add_option("spec", spec_path)->required();
  measure_cmd->add_option("--q", q_grid, "grid resolution per axis");

  auto* frame_cmd = app.add_subcommand("frame-check", "frame bounds of the window system");
  frame_cmd->add_option("spec", spec_path)->required();
  frame_cmd->add_option("--lambda", lambda_csv, "λ as comma-separated values");
  frame_cmd->add_flag("--sweep", sweep, "sweep the λ quadrature grid of I");
  frame_cmd->add_option("--q", q_lambda, "λ quadrature resolution for --sweep");
  frame_cmd->add_option("--grid", grid_arg, "grid as T,Q");
  frame_cmd->add_option("--method", method, "power|lanczos");
  frame_cmd->add_option("--iters", iterations, "eigenvalue iterations");
  frame_cmd->add_option("--tau", tau, "Parseval certification tolerance");

  auto* intertwine_cmd = app.add_subcommand("intertwine", "π_λ(Γ1) vs Gabor-system regression");
  intertwine_cmd->add_option("spec", spec_path)->required();
  intertwine_cmd->add_option("--lambda", lambda_csv)->required();
  intertwine_cmd->add_option("--grid", grid_arg, "grid as T,Q");
  intertwine_cmd->add_option("--box", box_radius, "index box radius");
  intertwine_cmd->add_option("--tol", tol, "pass threshold on the max deviation");

  auto* sample_cmd = app.add_subcommand("sample-reconstruct", "sampling-space run report");
  sample_cmd->add_option("spec", spec_path)->required();
  sample_cmd->add_option("--R", r_list, "radius schedule")->required()->expected(-1);
  sample_cmd->add_option("--q-lambda", q_lambda, "λ quadrature resolution");
  sample_cmd->add_option("--grid", grid_arg, "grid as T,Q");
  sample_cmd->add_option("--out", out_arg, "output directory for the CSV error curve");

  auto* dump_cmd = app.add_subcommand("dump-window", "binary dump of φ(λ)");
  dump_cmd->add_option("spec", spec_path)->required();
  dump_cmd->add_option("--lambda", lambda_csv)->required();
  dump_cmd->add_option("--grid", grid_arg, "grid as T,Q");
  dump_cmd->add_option("--out", out_arg, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return 2;
  }
  if (threads > 0) set_thread_count(threads);

  LieAlgebraSpec spec = parse_spec_file(spec_path);
  const int d = spec.d(), dz = spec.dim_z();

  if (validate_cmd->parsed()) {
    ValidationReport report = validate(spec);
    ordered_json doc = report_header("validate", spec_path, seed);
    doc["n"] = spec.n();
    doc["d"] = spec.d();
    ordered_json checks;
    checks["jacobi"] = check_json(report.jacobi);
    checks["center_is_z"] = check_json(report.center_is_z);
    checks["zb_maximal_commutative"] = check_json(report.zb_maximal_commutative);
    checks["ab_in_z"] = check_json(report.ab_in_z);
    checks["detS_nontrivial"] = check_json(report.dets_nontrivial);
    checks["detS_homogeneous"] = check_json(report.dets_homogeneous);
    doc["checks"] = checks;
    doc["det_S"] = report.det_s.to_string();
    doc["pass"] = report.pass;
    std::cout << doc.dump(2) << "\n";
    return report.pass ? 0 : 1;
  }

  if (detpoly_cmd->parsed()) {
    CentralPolynomial det = spec.det_s_polynomial();
    HomogeneityReport hom = homogeneity_degree(det);
    ordered_json doc = report_header("detpoly", spec_path, seed);
    doc["det_S"] = det.to_string();
    doc["term_count"] = det.term_count();
    doc["degree"] = det.degree();
    doc["nontrivial"] = is_nontrivial(det);
    doc["homogeneous"] = hom.kind == HomogeneityReport::Kind::Zero
                             ? ordered_json("zero")
                             : ordered_json(hom.kind == HomogeneityReport::Kind::Homogeneous);
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  if (region_cmd->parsed()) {
    std::string header;
    for (int k = 1; k <= dz; ++k) header += "lambda_" + std::to_string(k) + ",";
    std::cout << header << "det,norm,in_E,in_K,in_Q,in_I\n";
    std::uint64_t cells = 1;
    for (int k = 0; k < dz; ++k) cells *= static_cast<std::uint64_t>(q_grid);
    for (std::uint64_t cell = 0; cell < cells; ++cell) {
      RationalVector lambda(dz);
      Eigen::VectorXd lam(dz);
      std::uint64_t rem = cell;
      for (int k = dz - 1; k >= 0; --k) {
        int idx = static_cast<int>(rem % q_grid);
        rem /= q_grid;
        lambda[k] = make_rational(2 * idx + 1 - q_grid, 2 * q_grid);
        lam[k] = to_double(lambda[k]);
      }
      RegionFlags flags = region_flags(spec, lambda);
      std::cout << flags_csv_row(lam, flags) << "\n";
    }
    return 0;
  }

  if (measure_cmd->parsed()) {
    MeasureResult result = measure_of_I(spec, q_grid);
    ordered_json doc = report_header("measure", spec_path, seed);
    doc["q"] = result.q;
    doc["m_I"] = num(result.lebesgue_m);
    doc["mu_I"] = num(result.mu);
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  FrameBoundsOptions bounds_options;
  bounds_options.iterations = iterations;
  bounds_options.tau_parseval = tau;
  bounds_options.seed = seed;
  bounds_options.method = method == "power" ? EigMethod::PowerIteration : EigMethod::Lanczos;

  if (frame_cmd->parsed()) {
    Grid proto = parse_grid_arg(grid_arg);
    Grid grid(d, proto.extent, proto.q);
    if (sweep) {
      auto quad = make_spectral_quadrature(spec, q_lambda);
      std::string header;
      for (int k = 1; k <= dz; ++k) header += "lambda_" + std::to_string(k) + ",";
      std::cout << header << "A,B,verdict\n";
      bool all_parseval = true;
      for (const auto& sp : quad->points) {
        FrameReport report = parseval_certify(spec, sp.lambda, grid, bounds_options);
        all_parseval = all_parseval && report.verdict == FrameVerdict::Parseval;
        std::string row;
        for (int k = 0; k < dz; ++k) row += format_double(sp.lambda[k]) + ",";
        std::cout << row << format_double(report.lower) << "," << format_double(report.upper)
                  << "," << to_string(report.verdict) << "\n";
      }
      return all_parseval ? 0 : 1;
    }
    Eigen::VectorXd lambda = parse_lambda_csv(lambda_csv, dz);
    FrameReport report = parseval_certify(spec, lambda, grid, bounds_options);
    ordered_json doc = report_header("frame-check", spec_path, seed);
    doc["lambda"] = std::vector<double>(lambda.data(), lambda.data() + lambda.size());
    doc["grid"] = report.grid_desc;
    doc["A"] = num(report.lower);
    doc["B"] = num(report.upper);
    doc["A_wide_box"] = num(report.lower_wide);
    doc["B_wide_box"] = num(report.upper_wide);
    doc["family_size"] = report.family_size;
    doc["iterations"] = report.iterations_used;
    doc["converged"] = report.converged;
    doc["tau_parseval"] = num(report.tau_parseval);
    doc["verdict"] = to_string(report.verdict);
    std::cout << doc.dump(2) << "\n";
    return report.verdict == FrameVerdict::Parseval ? 0 : 1;
  }

  if (intertwine_cmd->parsed()) {
    Eigen::VectorXd lambda = parse_lambda_csv(lambda_csv, dz);
    Grid proto = parse_grid_arg(grid_arg);
    Grid grid(d, proto.extent, proto.q);
    GridFunction v = unit_cube_indicator(grid);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (long i = 0; i < v.values.size(); ++i)
      if (v.values[i] != Complex(0.0, 0.0)) v.values[i] = Complex(normal(rng), normal(rng));
    double deviation = intertwining_regression(spec, lambda, v, box_radius);
    ordered_json doc = report_header("intertwine", spec_path, seed);
    doc["lambda"] = std::vector<double>(lambda.data(), lambda.data() + lambda.size());
    doc["box_radius"] = box_radius;
    doc["max_deviation"] = num(deviation);
    doc["tol"] = num(tol);
    doc["pass"] = deviation <= tol;
    std::cout << doc.dump(2) << "\n";
    return deviation <= tol ? 0 : 1;
  }

  if (sample_cmd->parsed()) {
    Grid proto = parse_grid_arg(grid_arg);
    Grid grid(d, proto.extent, proto.q);
    std::sort(r_list.begin(), r_list.end());
    auto quad = make_spectral_quadrature(spec, q_lambda);
    VectorFieldU u_field = constant_indicator_field(*quad, grid);
    BandLimitedVector f = synthesize_admissible_f(spec, quad, u_field, grid);
    BandLimitedVector g = make_random_bandlimited(spec, quad, grid, seed);

    ordered_json doc = report_header("sample-reconstruct", spec_path, seed);
    doc["q_lambda"] = q_lambda;
    doc["grid"] = "d=" + std::to_string(d) + " T=" + format_double(grid.extent) +
                  " q=" + std::to_string(grid.q);
    doc["norm_f_sq"] = num(f.norm_sq());
    doc["mu_I"] = num(quad->mu_estimate);

    std::vector<double> ratios = parseval_ratio_curve(f, g, r_list);
    ordered_json ratio_json;
    for (std::size_t i = 0; i < r_list.size(); ++i)
      ratio_json[std::to_string(r_list[i])] = num(ratios[i]);
    doc["parseval_ratio"] = ratio_json;

    ReconstructionReport recon =
        reconstruction_error(spec, f, f, r_list, default_probes(spec, grid.q));
    ordered_json err_json;
    for (std::size_t i = 0; i < recon.radii.size(); ++i)
      err_json[std::to_string(recon.radii[i])] = num(recon.rel_l2_error[i]);
    doc["reconstruction_error"] = err_json;
    std::cout << doc.dump(2) << "\n";

    if (!out_arg.empty()) {
      std::filesystem::create_directories(out_arg);
      std::ofstream csv(std::filesystem::path(out_arg) / "reconstruction_error.csv",
                        std::ios::trunc);
      csv << "R,parseval_ratio,rel_l2_error\n";
      for (std::size_t i = 0; i < recon.radii.size(); ++i)
        csv << recon.radii[i] << "," << format_double(ratios[i]) << ","
            << format_double(recon.rel_l2_error[i]) << "\n";
    }
    return 0;
  }

  if (dump_cmd->parsed()) {
    Eigen::VectorXd lambda = parse_lambda_csv(lambda_csv, dz);
    Grid proto = parse_grid_arg(grid_arg);
    Grid grid(d, proto.extent, proto.q);
    SpectralPoint sp = build_spectral_point(spec, lambda);
    write_grid_function(out_arg, window_phi(sp, grid));
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const nilband::ParseError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 2;
  } catch (const CLI::Error& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
