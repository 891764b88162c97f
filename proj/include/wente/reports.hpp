#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wente/jacobi_operator.hpp"
#include "wente/parallel.hpp"
#include "wente/wente_params.hpp"

namespace wente {

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(const std::string& name);  // throws DomainError
std::string format_name(OutputFormat f);

struct RunConfig {
  double H = 0.5;
  QuadratureConfig quadrature;
  SolverConfig solver;
  DefinitenessThreshold definiteness;
  int oracle_cutoff = 0;  // 0 disables the Galerkin count in verify-all
  OutputFormat format = OutputFormat::text;
  std::string out_dir;    // empty: stdout
  bool paper_check = false;
  Execution exec = Execution::parallel;

  // Throws DomainError on non-positive tolerances or H.
  void validate() const;
};

// Keys accepted by --config files and, upper-cased with the WENTE_ prefix,
// by environment variables: H, abs_tol, rel_tol, max_subdivisions,
// theta_tol, definiteness_relative, min_margin, oracle_cutoff, format, out,
// paper_check.
void apply_config(RunConfig& cfg, const nlohmann::json& doc);
void apply_env(RunConfig& cfg, const std::function<const char*(const char*)>& getenv_fn);
nlohmann::json to_json(const RunConfig& cfg);

using Matrix9 = Eigen::Matrix<double, 9, 9>;

struct SurfaceReport {
  Fraction frac{3, 2};
  double theta_deg = 0.0;
  double x_len = 0.0;
  double y_len = 0.0;
  int lemma4_bound = 0;
  int lemma5_bound = 0;
  std::vector<std::pair<IntegralLabel, double>> basic_integrals;
  std::array<int, 9> selection{};
  Matrix9 matrix_table4 = Matrix9::Zero();
  Matrix9 matrix_direct = Matrix9::Zero();
  double max_path_discrepancy = 0.0;
  std::vector<double> matrix_eigenvalues;  // closed-form path
  bool negative_definite = false;
  double margin = 0.0;
  std::optional<int> theorem1_bound;       // present iff negative_definite
  std::optional<int> oracle_negative_count;
  std::optional<int> oracle_cutoff;
  double abs_tol = 0.0;
  double rel_tol = 0.0;
  double definiteness_relative = 0.0;
  double min_margin = 0.0;
  std::vector<std::string> reference_deviations;  // filled when paper_check
  double wall_time_s = 0.0;
};

// theta, periods, both lemma bounds.
struct Table2Entry {
  Fraction frac;
  double theta_deg;
  double x_len;
  double y_len;
  int lemma4;
  int lemma5;
};

Table2Entry table2_entry(const Fraction& frac, const RunConfig& cfg);

// Full pipeline for one of the eight surfaces.
SurfaceReport analyze_surface(const Fraction& frac, const RunConfig& cfg);

struct VerifyAllResult {
  std::vector<Fraction> lemma5_candidates;
  std::vector<int> lemma4_bounds;  // parallel to lemma5_candidates
  std::vector<Fraction> surfaces;  // survivors of both filters
  std::vector<SurfaceReport> reports;
  bool success = false;            // every surface certified, bound >= 8
};

VerifyAllResult verify_all(const RunConfig& cfg);

// Reference comparisons for --paper-check; each returned string describes
// one deviation beyond tolerance.
std::vector<std::string> check_table2(const Table2Entry& row);
std::vector<std::string> check_report(const SurfaceReport& report);

// Serialization. Wall-clock time lives under the "timing" key so that two
// runs can be compared byte for byte after dropping it.
nlohmann::json to_json(const SurfaceReport& r);
SurfaceReport surface_report_from_json(const nlohmann::json& doc);
nlohmann::json summary_json(const VerifyAllResult& result, const RunConfig& cfg);

std::string render_table2_text(const std::vector<Table2Entry>& rows,
                               const std::vector<std::vector<std::string>>& flags);
std::string render_table2_csv(const std::vector<Table2Entry>& rows);
std::string render_matrix_text(const Matrix9& m, const std::array<int, 9>& selection);
std::string render_report_text(const SurfaceReport& r);
std::string render_reports_csv(const std::vector<SurfaceReport>& reports);

}  // namespace wente
