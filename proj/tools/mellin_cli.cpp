// Batch front door: symbol assembly and Fredholm analysis, operator identity
// verification, and closed-form vs quadrature transform comparison.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mellin/assemble.hpp"
#include "mellin/errors.hpp"
#include "mellin/fredholm.hpp"
#include "mellin/io.hpp"
#include "mellin/oracle.hpp"
#include "mellin/symbol.hpp"

namespace fs = std::filesystem;
using namespace mellin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNonElliptic = 2;

Complex parse_complex_flag(const std::string& s) {
  std::istringstream is(s);
  Real re = 0.0, im = 0.0;
  char comma = 0;
  if (!(is >> re)) throw InputError("expected re,im in '" + s + "'");
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) throw InputError("expected re,im in '" + s + "'");
  }
  return Complex(re, im);
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << content;
}

fs::path resolve_out(const std::string& out, const char* default_name) {
  fs::path p(out.empty() ? "." : out);
  if (p.extension() == ".json" || p.extension() == ".csv") return p;
  return p / default_name;
}

int run_analyze(const std::string& spec_path, const std::string& out_dir, int grid_override,
                Real tol_override) {
  std::ifstream in(spec_path);
  if (!in) throw InputError("cannot read spec file " + spec_path);
  Json j = Json::parse(in);
  AnalysisSpec spec = analysis_spec_from_json(j);
  if (grid_override > 0) spec.n_per_leg = grid_override;
  if (tol_override > 0.0) spec.tolerances.tol_ell = tol_override;

  auto grid = rectangle_grid(spec.n_per_leg);
  SymbolField field = spec.bessel ? assemble_symbol_bessel(spec.expression, spec.space.p,
                                                           spec.space.s, grid)
                                  : assemble_symbol_lp(spec.expression, spec.space.p, grid);
  FredholmReport rep = analyze_field(field, spec.tolerances);

  fs::path dir(out_dir.empty() ? "." : out_dir);
  fs::create_directories(dir);
  write_file(dir / "report.json", report_to_json(rep).dump(2) + "\n");
  write_file(dir / "symbol_trace.csv", symbol_trace_csv(field));
  return rep.elliptic ? kExitOk : kExitNonElliptic;
}

int run_verify(const std::string& case_name, Complex c, Real s, Complex gamma, int n,
               Real window, const std::string& out) {
  LabConfig cfg;
  if (n > 0) cfg.n = n;
  if (window > 0.0) cfg.window = window;
  IdentityCheckResult res;
  Real threshold;
  const bool integer_s = (s == std::floor(s)) && s >= 0.0;
  if (case_name == "commutation") {
    res = check_commutation(c, s, gamma, cfg);
    threshold = integer_s ? 1e-8 : 5e-3;
  } else if (case_name == "lifting-k1") {
    res = check_lifting(LiftingKind::SinglePole, c, s, gamma, cfg);
    threshold = integer_s ? 1e-6 : 5e-3;
  } else if (case_name == "lifting-k2") {
    res = check_lifting(LiftingKind::DoublePole, c, s, gamma, cfg);
    threshold = integer_s ? 1e-5 : 5e-3;
  } else if (case_name == "zbeta") {
    MeromorphicKernel k =
        (c == Complex(0.0, 0.0)) ? make_power_pole(Complex(-1.0, 0.0), 1) : make_power_pole(c, 1);
    res = check_mellin_vs_zbeta(k, n > 0 ? n : (1 << 11));
    threshold = 1e-6;
  } else {
    throw InputError("unknown case '" + case_name + "'");
  }
  Json params{{"case", case_name}, {"c", to_json(c)}, {"s", s},
              {"gamma", to_json(gamma)}, {"threshold", threshold}};
  write_file(resolve_out(out, "result.json"),
             identity_result_to_json(res, params).dump(2) + "\n");
  std::cout << case_name << ": rel_residual = " << res.rel_residual
            << " (threshold " << threshold << ")\n";
  return res.rel_residual <= threshold ? kExitOk : kExitInput;
}

int run_oracle(const std::string& kernel_path, Real beta, Real xi_min, Real xi_max, int n,
               const std::string& out) {
  std::ifstream in(kernel_path);
  if (!in) throw InputError("cannot read kernel file " + kernel_path);
  MeromorphicKernel k = kernel_from_json(Json::parse(in));
  auto rep = validate_admissible(k);
  if (!rep.admissible) {
    std::string why;
    for (const auto& v : rep.violations) why += (why.empty() ? "" : "; ") + v;
    throw InputError("kernel is not admissible: " + why);
  }
  if (n < 2) throw InputError("need at least 2 sample points");

  std::ostringstream csv;
  csv << "xi,re_closed,im_closed,re_oracle,im_oracle,abs_err\n";
  csv.precision(17);
  Real max_err = 0.0;
  for (int i = 0; i < n; ++i) {
    Real xi = xi_min + (xi_max - xi_min) * Real(i) / Real(n - 1);
    Complex closed = mellin_symbol(k, beta, xi);
    Complex oracle = mellin_symbol_oracle(k, beta, xi);
    Real err = std::abs(closed - oracle);
    max_err = std::max(max_err, err);
    csv << xi << ',' << closed.real() << ',' << closed.imag() << ',' << oracle.real()
        << ',' << oracle.imag() << ',' << err << '\n';
  }
  write_file(resolve_out(out, "symbols.csv"), csv.str());
  std::cout << "max |closed - oracle| = " << max_err << "\n";
  return max_err <= 1e-8 ? kExitOk : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbol calculus for Mellin/Fourier convolution operators on the half-line"};
  app.require_subcommand(1);

  std::string out_dir = ".";
  unsigned seed = 0;
  Real tol_ell = -1.0;
  int grid_n = -1;
  app.add_option("--out", out_dir, "output directory or file");
  app.add_option("--seed", seed, "seed for randomized trials");
  app.add_option("--tol-ell", tol_ell, "ellipticity tolerance override");
  app.add_option("--grid", grid_n, "rectangle points per leg");

  auto* analyze = app.add_subcommand("analyze", "assemble a symbol and report Fredholm data");
  std::string spec_path;
  analyze->add_option("spec", spec_path, "analysis spec JSON")->required();

  auto* verify = app.add_subcommand("verify-identities", "check an operator identity");
  std::string case_name, c_flag = "0,1", gamma_flag;
  Real s_flag = 1.0, window = -1.0;
  int n_flag = -1;
  verify->add_option("--case", case_name, "commutation|lifting-k1|lifting-k2|zbeta")
      ->required();
  verify->add_option("--c", c_flag, "pole location re,im");
  verify->add_option("--s", s_flag, "smoothness order");
  verify->add_option("--gamma", gamma_flag, "potential parameter re,im");
  verify->add_option("--n", n_flag, "grid size (power of two)");
  verify->add_option("--window", window, "half width of the sampling window");

  auto* oracle = app.add_subcommand("oracle", "closed-form vs quadrature transform table");
  std::string kernel_path;
  Real beta = 0.5, xi_min = -8.0, xi_max = 8.0;
  int oracle_n = 161;
  oracle->add_option("--kernel", kernel_path, "kernel JSON file")->required();
  oracle->add_option("--beta", beta, "line parameter in (0,1)");
  oracle->add_option("--xi-min", xi_min, "lowest sample");
  oracle->add_option("--xi-max", xi_max, "highest sample");
  oracle->add_option("--n", oracle_n, "number of samples");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(spec_path, out_dir, grid_n, tol_ell);
    if (*verify) {
      Complex gamma = gamma_flag.empty() ? std::polar(1.0, 3.0 * kPi / 4.0)
                                         : parse_complex_flag(gamma_flag);
      return run_verify(case_name, parse_complex_flag(c_flag), s_flag, gamma, n_flag,
                        window, out_dir);
    }
    if (*oracle) return run_oracle(kernel_path, beta, xi_min, xi_max, oracle_n, out_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
