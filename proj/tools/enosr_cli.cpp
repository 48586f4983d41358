#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "enosr/csv.hpp"

namespace {

using namespace enosr;

Mode parse_mode(const std::string& name) {
  if (name == "lagrange") return Mode::FixedLagrange;
  if (name == "eno") return Mode::Eno;
  if (name == "enosr") return Mode::EnoSr;
  throw InvalidMode("unknown mode '" + name + "'");
}

Samples load_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open '" + path + "'");
  return read_samples_csv(in);
}

std::vector<double> load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open '" + path + "'");
  const Grid g = read_grid_csv(in);
  return {g.nodes().begin(), g.nodes().end()};
}

// Writes to the file when given, stdout otherwise.
void emit(const std::optional<std::string>& out_path, const std::string& content) {
  if (out_path) {
    std::ofstream out(*out_path);
    if (!out) throw CsvError("cannot open '" + *out_path + "' for writing");
    out << content;
  } else {
    std::cout << content;
  }
}

int run_detect(const std::string& input, std::size_t m, std::optional<double> mu) {
  const Samples s = load_samples(input);
  std::cout << "labels: " << label_intervals(s, m).to_string() << "\n";
  const Interpolant interp = build_interpolant(s, m, Mode::EnoSr);
  const std::optional<double> psi = interp.corner_estimate();
  std::cout << "psi: " << (psi ? format_double(*psi) : "none") << "\n";
  if (mu) std::cout << "e: " << (psi ? format_double(std::abs(*mu - *psi)) : "none") << "\n";
  return 0;
}

int run_interp(const std::string& input, std::size_t m, const std::string& mode_name,
               const std::optional<std::string>& eval_at, std::optional<std::size_t> dense,
               const std::optional<std::string>& out_path) {
  const Samples s = load_samples(input);
  const Interpolant interp = build_interpolant(s, m, parse_mode(mode_name));

  std::vector<double> xs;
  if (eval_at) {
    xs = load_points(*eval_at);
  } else {
    const std::size_t n = *dense;
    if (n < 2) throw CsvError("--dense needs at least 2 points");
    xs.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      xs[i] = interp.domain_lo() +
              (interp.domain_hi() - interp.domain_lo()) * (static_cast<double>(i) / (n - 1));
  }
  std::vector<double> ys(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = interp(xs[i]);

  std::ostringstream body;
  write_xy_csv(body, xs, ys);
  emit(out_path, body.str());
  return 0;
}

int run_converge(const std::vector<double>& ds, std::size_t m, std::size_t levels,
                 std::size_t n0, double sigma, std::uint64_t seed, const std::string& mode_name,
                 const std::optional<std::string>& out_path) {
  const Mode mode = parse_mode(mode_name);
  const Grid base = generate_quasi_uniform(n0, -1.0, 1.0, sigma, seed);
  std::ostringstream body;
  write_convergence_header(body);
  for (double d : ds) {
    const auto rows = convergence_study(make_fd(d), base, levels, m, mode);
    write_convergence_rows(body, d, rows);
  }
  emit(out_path, body.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ENO-SR interpolation of univariate point values on quasi-uniform grids"};
  app.require_subcommand(1);

  auto* detect = app.add_subcommand("detect", "label intervals and locate the corner");
  std::string detect_input;
  std::size_t detect_m = 4;
  double detect_mu = 0.0;
  detect->add_option("--input", detect_input, "samples CSV (header x,f)")->required();
  detect->add_option("--m", detect_m, "interpolation order");
  auto* mu_opt = detect->add_option("--mu", detect_mu, "true corner location, enables e output");

  auto* interp = app.add_subcommand("interp", "evaluate an interpolant");
  std::string interp_input, interp_mode = "enosr";
  std::size_t interp_m = 4;
  std::string eval_at;
  std::size_t dense = 0;
  std::string interp_out;
  interp->add_option("--input", interp_input, "samples CSV (header x,f)")->required();
  interp->add_option("--m", interp_m, "interpolation order");
  interp->add_option("--mode", interp_mode, "lagrange|eno|enosr")
      ->check(CLI::IsMember({"lagrange", "eno", "enosr"}));
  auto* eval_opt = interp->add_option("--eval-at", eval_at, "nodes CSV (header x) to evaluate at");
  auto* dense_opt = interp->add_option("--dense", dense, "evaluate at N equispaced points");
  auto* interp_out_opt = interp->add_option("--out", interp_out, "output CSV path");
  eval_opt->excludes(dense_opt);

  auto* converge = app.add_subcommand("converge", "dyadic refinement study");
  std::vector<double> ds{4.0};
  std::size_t conv_m = 4, levels = 7, n0 = 21;
  double sigma = 1.4;
  std::uint64_t seed = 7;
  std::string function = "fd", conv_mode = "enosr", conv_out;
  converge->add_option("--function", function, "test family (fd)")
      ->check(CLI::IsMember({"fd"}));
  converge->add_option("--d", ds, "corner strengths")->delimiter(',');
  converge->add_option("--m", conv_m, "interpolation order");
  converge->add_option("--levels", levels, "refinement levels");
  converge->add_option("--n0", n0, "intervals in the base grid");
  converge->add_option("--sigma", sigma, "spacing ratio target of the base grid");
  converge->add_option("--seed", seed, "base grid seed");
  converge->add_option("--mode", conv_mode, "lagrange|eno|enosr")
      ->check(CLI::IsMember({"lagrange", "eno", "enosr"}));
  auto* conv_out_opt = converge->add_option("--out", conv_out, "output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (detect->parsed()) {
      return run_detect(detect_input, detect_m,
                        mu_opt->count() ? std::optional<double>(detect_mu) : std::nullopt);
    }
    if (interp->parsed()) {
      if (!eval_opt->count() && !dense_opt->count()) {
        std::cerr << "interp: one of --eval-at or --dense is required\n";
        return 1;
      }
      return run_interp(interp_input, interp_m, interp_mode,
                        eval_opt->count() ? std::optional<std::string>(eval_at) : std::nullopt,
                        dense_opt->count() ? std::optional<std::size_t>(dense) : std::nullopt,
                        interp_out_opt->count() ? std::optional<std::string>(interp_out)
                                                : std::nullopt);
    }
    if (converge->parsed()) {
      return run_converge(ds, conv_m, levels, n0, sigma, seed, conv_mode,
                          conv_out_opt->count() ? std::optional<std::string>(conv_out)
                                                : std::nullopt);
    }
  } catch (const enosr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
