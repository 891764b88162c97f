// wente_index: index bounds for the Wente tori from the command line.
#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "wente/errors.hpp"
#include "wente/reference_values.hpp"
#include "wente/reports.hpp"
#include "wente/spectral_oracle.hpp"
#include "wente/torus_spectrum.hpp"

namespace fs = std::filesystem;
using namespace wente;

namespace {

enum Exit { kOk = 0, kVerifyFail = 1, kUsage = 2, kNumerical = 3 };

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write " + path.string());
  f << text;
}

int cmd_table2(const RunConfig& cfg) {
  std::vector<Table2Entry> rows;
  std::vector<std::vector<std::string>> flags;
  int status = kOk;
  for (const auto& ref : reference::table2()) {
    try {
      rows.push_back(table2_entry(ref.frac, cfg));
      flags.push_back(cfg.paper_check ? check_table2(rows.back()) : std::vector<std::string>{});
      if (!flags.back().empty()) status = std::max(status, int(kVerifyFail));
    } catch (const NumericalError& e) {
      std::cerr << "W_" << ref.frac.str() << ": " << e.what() << '\n';
      status = kNumerical;
    }
  }
  std::cout << (cfg.format == OutputFormat::csv ? render_table2_csv(rows)
                                                : render_table2_text(rows, flags));
  return status;
}

int cmd_matrix(const Fraction& frac, const std::string& mode, const RunConfig& cfg) {
  const SurfaceReport r = analyze_surface(frac, cfg);
  if (cfg.format == OutputFormat::json) {
    std::cout << to_json(r).dump(2) << '\n';
  } else {
    if (mode != "direct") {
      std::cout << "closed form:\n" << render_matrix_text(r.matrix_table4, r.selection);
    }
    if (mode != "table4") {
      std::cout << "direct quadrature:\n" << render_matrix_text(r.matrix_direct, r.selection);
    }
    if (mode == "both") {
      std::cout << fmt::format("max |difference| = {:.3e}\n", r.max_path_discrepancy);
    }
    std::cout << "eigenvalues:";
    const auto eig = mode == "direct" ? definiteness(Eigen::MatrixXd(r.matrix_direct), cfg.definiteness).eigenvalues
                                      : r.matrix_eigenvalues;
    for (double e : eig) std::cout << fmt::format(" {:.4f}", e);
    std::cout << '\n';
    std::cout << (r.negative_definite ? "verdict: negative definite" : "verdict: NOT negative definite")
              << fmt::format(" (margin {:.4f})\n", r.margin);
    for (const auto& d : r.reference_deviations) std::cout << "deviation: " << d << '\n';
  }
  if (!r.negative_definite || !r.reference_deviations.empty()) return kVerifyFail;
  return kOk;
}

int cmd_integrals(const Fraction& frac, const RunConfig& cfg) {
  const Surface s = make_surface(frac, cfg.H, cfg.solver);
  const PotentialContext ctx(s);
  const auto labels = table4_integrals(frac);
  const auto table = basic_integrals(ctx, labels, cfg.quadrature, cfg.exec);
  int status = kOk;
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& l : labels) {
    const double v = table.get(l);
    std::string flag;
    if (cfg.paper_check) {
      if (l.j == 0) {
        for (const auto& want : reference::i0_values())
          if (want.frac == frac && want.A == l.A && want.B == l.B &&
              std::abs(v - want.value) > reference::kI0Tol)
            flag = fmt::format("  <-- reference {:.4f}", want.value);
      } else if (std::abs(v) >= reference::kIjSmall) {
        flag = "  <-- not approximately zero";
      }
      if (!flag.empty()) status = kVerifyFail;
    }
    if (cfg.format == OutputFormat::json) {
      doc.push_back({{"label", l.str()}, {"value", v}});
    } else if (cfg.format == OutputFormat::csv) {
      std::cout << fmt::format("{},{},{:.10g}\n", frac.str(), l.str(), v);
    } else {
      std::cout << fmt::format("W_{} {:<10} {: .6f}{}\n", frac.str(), l.str(), v, flag);
    }
  }
  if (cfg.format == OutputFormat::json) std::cout << doc.dump(2) << '\n';
  return status;
}

int cmd_oracle(const Fraction& frac, int cutoff, const RunConfig& cfg) {
  const Surface s = make_surface(frac, cfg.H, cfg.solver);
  const PotentialContext ctx(s);
  int previous = -1;
  bool monotone = true;
  for (int c = std::min(2, cutoff); c <= cutoff; ++c) {
    const int count = negative_count(build_galerkin(ctx, c, cfg.quadrature, cfg.exec));
    std::cout << fmt::format("W_{} cutoff {}: negative count {}\n", frac.str(), c, count);
    monotone = monotone && count >= previous;
    previous = count;
  }
  const bool h_ok = h_invariance_check(frac, cutoff, 0.5, 1.0, cfg.quadrature, cfg.exec);
  std::cout << "monotone: " << (monotone ? "true" : "false") << '\n';
  std::cout << "H-invariance: " << (h_ok ? "true" : "false") << '\n';
  return monotone && h_ok ? kOk : kVerifyFail;
}

int cmd_verify_all(const RunConfig& cfg) {
  const VerifyAllResult res = verify_all(cfg);
  const auto summary = summary_json(res, cfg);
  for (const auto& r : res.reports) {
    if (!r.negative_definite)
      std::cerr << fmt::format("W_{}: matrix not certified negative definite (max eigenvalue {:.4f})\n",
                               r.frac.str(), r.matrix_eigenvalues.back());
    for (const auto& d : r.reference_deviations) std::cerr << d << '\n';
  }

  std::string text;
  for (const auto& r : res.reports) text += render_report_text(r) + '\n';
  text += res.success ? "all surfaces certified: index >= 8\n" : "verification FAILED\n";

  if (cfg.out_dir.empty()) {
    if (cfg.format == OutputFormat::json) {
      nlohmann::json reports = nlohmann::json::array();
      for (const auto& r : res.reports) reports.push_back(to_json(r));
      std::cout << nlohmann::json{{"summary", summary}, {"reports", reports}}.dump(2) << '\n';
    } else if (cfg.format == OutputFormat::csv) {
      std::cout << render_reports_csv(res.reports);
    } else {
      std::cout << text;
    }
  } else {
    const fs::path dir(cfg.out_dir);
    fs::create_directories(dir);
    if (cfg.format == OutputFormat::json) {
      for (const auto& r : res.reports)
        write_file(dir / fmt::format("W_{}_{}.json", r.frac.ell(), r.frac.n()), to_json(r).dump(2) + '\n');
      write_file(dir / "summary.json", summary.dump(2) + '\n');
    } else if (cfg.format == OutputFormat::csv) {
      write_file(dir / "reports.csv", render_reports_csv(res.reports));
    } else {
      write_file(dir / "report.txt", text);
    }
    std::cout << (res.success ? "all surfaces certified: index >= 8\n" : "verification FAILED\n");
  }
  return res.success ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morse index lower bounds for the Wente tori"};
  app.require_subcommand(1);

  std::string config_file, format, out_dir;
  bool paper_check = false, serial = false;
  std::optional<double> min_margin;
  std::optional<int> oracle_cutoff;
  app.add_option("--config", config_file, "JSON file with RunConfig overrides")->check(CLI::ExistingFile);
  app.add_flag("--paper-check", paper_check, "compare against the reference values");
  app.add_flag("--serial", serial, "run all kernels on one thread");
  app.add_option("--format", format, "json, csv or text");

  auto* table2 = app.add_subcommand("table2", "theta, periods and lemma bounds for the eight surfaces");

  std::string frac_text, mode = "table4";
  auto* matrix = app.add_subcommand("matrix", "the 9x9 index matrix of one surface");
  matrix->add_option("frac", frac_text, "l/n")->required();
  matrix->add_option("--mode", mode)->check(CLI::IsMember({"table4", "direct", "both"}));

  auto* integrals = app.add_subcommand("integrals", "basic integrals of one surface");
  integrals->add_option("frac", frac_text, "l/n")->required();

  int cutoff = 4;
  auto* oracle = app.add_subcommand("oracle", "Galerkin negative counts of one surface");
  oracle->add_option("frac", frac_text, "l/n")->required();
  oracle->add_option("--cutoff", cutoff)->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify-all", "full pipeline over every fraction with n <= 9");
  verify->add_option("--out", out_dir, "directory for report files");
  verify->add_option("--format", format, "json, csv or text");
  verify->add_option("--min-margin", min_margin, "required distance of the top eigenvalue below zero");
  verify->add_option("--oracle-cutoff", oracle_cutoff, "also run the Galerkin count at this cutoff");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  RunConfig cfg;
  try {
    if (!config_file.empty()) {
      std::ifstream f(config_file);
      apply_config(cfg, nlohmann::json::parse(f));
    }
    apply_env(cfg, [](const char* name) { return std::getenv(name); });
    if (!format.empty()) cfg.format = parse_format(format);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (paper_check) cfg.paper_check = true;
    if (serial) cfg.exec = Execution::serial;
    if (min_margin) cfg.definiteness.min_margin = *min_margin;
    if (oracle_cutoff) cfg.oracle_cutoff = *oracle_cutoff;
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*table2) return cmd_table2(cfg);
    if (*verify) return cmd_verify_all(cfg);
    Fraction frac{3, 2};
    try {
      frac = Fraction::parse(frac_text);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kUsage;
    }
    if (*matrix) return cmd_matrix(frac, mode, cfg);
    if (*integrals) return cmd_integrals(frac, cfg);
    if (*oracle) return cmd_oracle(frac, cutoff, cfg);
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
