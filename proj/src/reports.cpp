#include "wente/reports.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <sstream>

#include "wente/errors.hpp"
#include "wente/reference_values.hpp"
#include "wente/spectral_oracle.hpp"
#include "wente/torus_spectrum.hpp"

namespace wente {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw DomainError("unknown output format '" + name + "' (expected json, csv or text)");
}

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "text";
}

void RunConfig::validate() const {
  if (!(H > 0.0)) throw DomainError("H must be positive");
  quadrature.validate();
  solver.quadrature.validate();
  if (!(solver.theta_tol > 0.0)) throw DomainError("theta_tol must be positive");
  if (!(definiteness.relative > 0.0) || definiteness.min_margin < 0.0)
    throw DomainError("definiteness thresholds must be positive");
  if (oracle_cutoff < 0) throw DomainError("oracle_cutoff must be >= 0");
}

void apply_config(RunConfig& cfg, const json& doc) {
  if (!doc.is_object()) throw DomainError("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "H") cfg.H = value.get<double>();
    else if (key == "abs_tol") cfg.quadrature.abs_tol = value.get<double>();
    else if (key == "rel_tol") cfg.quadrature.rel_tol = value.get<double>();
    else if (key == "max_subdivisions") cfg.quadrature.max_subdivisions = value.get<long>();
    else if (key == "theta_tol") cfg.solver.theta_tol = value.get<double>();
    else if (key == "definiteness_relative") cfg.definiteness.relative = value.get<double>();
    else if (key == "min_margin") cfg.definiteness.min_margin = value.get<double>();
    else if (key == "oracle_cutoff") cfg.oracle_cutoff = value.get<int>();
    else if (key == "format") cfg.format = parse_format(value.get<std::string>());
    else if (key == "out") cfg.out_dir = value.get<std::string>();
    else if (key == "paper_check") cfg.paper_check = value.get<bool>();
    else throw DomainError("unknown config key '" + key + "'");
  }
}

void apply_env(RunConfig& cfg, const std::function<const char*(const char*)>& getenv_fn) {
  static const char* const keys[] = {"H",          "abs_tol",       "rel_tol",
                                     "max_subdivisions", "theta_tol", "definiteness_relative",
                                     "min_margin", "oracle_cutoff", "format",
                                     "out",        "paper_check"};
  json doc = json::object();
  for (const char* key : keys) {
    std::string var = "WENTE_";
    for (const char* c = key; *c; ++c) var += static_cast<char>(std::toupper(*c));
    const char* raw = getenv_fn(var.c_str());
    if (!raw) continue;
    const std::string text(raw);
    const std::string k(key);
    if (k == "format" || k == "out") {
      doc[k] = text;
    } else if (k == "paper_check") {
      doc[k] = (text == "1" || text == "true");
    } else {
      try {
        doc[k] = json::parse(text);
      } catch (const json::exception&) {
        throw DomainError("environment variable " + var + " is not a number: " + text);
      }
    }
  }
  apply_config(cfg, doc);
}

json to_json(const RunConfig& cfg) {
  return {{"H", cfg.H},
          {"abs_tol", cfg.quadrature.abs_tol},
          {"rel_tol", cfg.quadrature.rel_tol},
          {"max_subdivisions", cfg.quadrature.max_subdivisions},
          {"theta_tol", cfg.solver.theta_tol},
          {"definiteness_relative", cfg.definiteness.relative},
          {"min_margin", cfg.definiteness.min_margin},
          {"oracle_cutoff", cfg.oracle_cutoff},
          {"format", format_name(cfg.format)},
          {"paper_check", cfg.paper_check}};
}

Table2Entry table2_entry(const Fraction& frac, const RunConfig& cfg) {
  const Surface s = make_surface(frac, cfg.H, cfg.solver);
  return {frac, degrees(s.params.theta), s.period.x_len, s.period.y_len, lemma4_bound(s),
          lemma5_bound(frac)};
}

SurfaceReport analyze_surface(const Fraction& frac, const RunConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto selection = table3_selection(frac);

  const Surface s = make_surface(frac, cfg.H, cfg.solver);
  const PotentialContext ctx(s);
  const Table1Basis basis(frac, s.period.x_len, s.period.y_len);

  SurfaceReport r;
  r.frac = frac;
  r.theta_deg = degrees(s.params.theta);
  r.x_len = s.period.x_len;
  r.y_len = s.period.y_len;
  r.lemma4_bound = lemma4_bound(s);
  r.lemma5_bound = lemma5_bound(frac);
  r.selection = selection;

  const auto labels = table4_integrals(frac);
  const BasicIntegralTable table = basic_integrals(ctx, labels, cfg.quadrature, cfg.exec);
  for (const auto& l : labels) r.basic_integrals.emplace_back(l, table.get(l));

  const IndexMatrix m4 = assemble_matrix_table4(frac, table, basis);
  const IndexMatrix md = assemble_matrix_direct(ctx, basis, cfg.quadrature, cfg.exec);
  r.matrix_table4 = m4.entries;
  r.matrix_direct = md.entries;
  r.max_path_discrepancy = (m4.entries - md.entries).cwiseAbs().maxCoeff();

  const DefinitenessReport d = definiteness(m4, cfg.definiteness);
  r.matrix_eigenvalues = d.eigenvalues;
  r.negative_definite = d.negative_definite;
  r.margin = d.margin;
  r.theorem1_bound = theorem1_bound(d);

  if (cfg.oracle_cutoff > 0) {
    r.oracle_cutoff = cfg.oracle_cutoff;
    r.oracle_negative_count =
        negative_count(build_galerkin(ctx, cfg.oracle_cutoff, cfg.quadrature, cfg.exec));
  }

  r.abs_tol = cfg.quadrature.abs_tol;
  r.rel_tol = cfg.quadrature.rel_tol;
  r.definiteness_relative = cfg.definiteness.relative;
  r.min_margin = cfg.definiteness.min_margin;
  if (cfg.paper_check) r.reference_deviations = check_report(r);
  r.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerifyAllResult verify_all(const RunConfig& cfg) {
  cfg.validate();
  VerifyAllResult out;
  out.lemma5_candidates = lemma5_candidates();
  out.lemma4_bounds.resize(out.lemma5_candidates.size());
  for_each_index(cfg.exec, out.lemma5_candidates.size(), [&](std::size_t i) {
    out.lemma4_bounds[i] = lemma4_bound(out.lemma5_candidates[i], cfg.H, cfg.solver);
  });
  for (std::size_t i = 0; i < out.lemma5_candidates.size(); ++i)
    if (out.lemma4_bounds[i] < 8) out.surfaces.push_back(out.lemma5_candidates[i]);

  out.reports.resize(out.surfaces.size());
  for_each_index(cfg.exec, out.surfaces.size(),
                 [&](std::size_t i) { out.reports[i] = analyze_surface(out.surfaces[i], cfg); });

  out.success = std::all_of(out.reports.begin(), out.reports.end(), [&](const SurfaceReport& r) {
    return r.theorem1_bound && *r.theorem1_bound >= 8 &&
           (!cfg.paper_check || r.reference_deviations.empty());
  });
  return out;
}

std::vector<std::string> check_table2(const Table2Entry& row) {
  namespace ref = reference;
  std::vector<std::string> out;
  const auto& want = ref::table2_row(row.frac);
  auto cmp = [&](const char* what, double got, double expect, double tol) {
    if (std::abs(got - expect) > tol)
      out.push_back(fmt::format("W_{} {}: {:.6f} vs reference {:.4f} (tol {})", row.frac.str(),
                                what, got, expect, tol));
  };
  cmp("theta_deg", row.theta_deg, want.theta_deg, ref::kThetaTolDeg);
  cmp("x_len", row.x_len, want.x_len, ref::kPeriodTol);
  cmp("y_len", row.y_len, want.y_len, ref::kPeriodTol);
  if (row.lemma4 != want.lemma4)
    out.push_back(fmt::format("W_{} lemma4: {} vs reference {}", row.frac.str(), row.lemma4,
                              want.lemma4));
  if (row.lemma5 != want.lemma5)
    out.push_back(fmt::format("W_{} lemma5: {} vs reference {}", row.frac.str(), row.lemma5,
                              want.lemma5));
  return out;
}

std::vector<std::string> check_report(const SurfaceReport& r) {
  namespace ref = reference;
  auto out = check_table2({r.frac, r.theta_deg, r.x_len, r.y_len, r.lemma4_bound, r.lemma5_bound});
  for (const auto& [label, value] : r.basic_integrals) {
    if (label.j == 0) {
      for (const auto& want : ref::i0_values())
        if (want.frac == r.frac && want.A == label.A && want.B == label.B &&
            std::abs(value - want.value) > ref::kI0Tol)
          out.push_back(fmt::format("W_{} {}: {:.6f} vs reference {:.4f}", r.frac.str(),
                                    label.str(), value, want.value));
    } else if (std::abs(value) >= ref::kIjSmall) {
      out.push_back(fmt::format("W_{} {}: {:.3e} is not approximately zero", r.frac.str(),
                                label.str(), value));
    }
  }
  const auto& disp = ref::displayed_matrix(r.frac);
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      const auto& cell = disp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const double t4 = r.matrix_table4(i, j), dir = r.matrix_direct(i, j);
      bool bad = false;
      switch (cell.kind) {
        case ref::Cell::Kind::number: bad = std::abs(t4 - cell.value) > ref::kMatrixTol; break;
        case ref::Cell::Kind::exact_zero: bad = std::abs(t4) >= ref::kExactZeroTol; break;
        case ref::Cell::Kind::small: bad = std::abs(dir) >= ref::kSmallEntryTol; break;
      }
      if (bad)
        out.push_back(fmt::format("W_{} M[{},{}]: table4 {:.4f}, direct {:.4f}", r.frac.str(),
                                  i + 1, j + 1, t4, dir));
    }
  }
  if (r.max_path_discrepancy >= ref::kDualPathTol)
    out.push_back(fmt::format("W_{} table4/direct discrepancy {:.3e}", r.frac.str(),
                              r.max_path_discrepancy));
  return out;
}

namespace {

json matrix_json(const Matrix9& m) {
  json rows = json::array();
  for (int i = 0; i < 9; ++i) {
    json row = json::array();
    for (int j = 0; j < 9; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Matrix9 matrix_from_json(const json& rows) {
  Matrix9 m;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) m(i, j) = rows.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)).get<double>();
  return m;
}

}  // namespace

json to_json(const SurfaceReport& r) {
  json integrals = json::array();
  for (const auto& [label, value] : r.basic_integrals)
    integrals.push_back(
        {{"label", label.str()}, {"j", label.j}, {"A", label.A}, {"B", label.B}, {"value", value}});
  json oracle = nullptr;
  if (r.oracle_negative_count)
    oracle = {{"cutoff", r.oracle_cutoff.value_or(0)}, {"negative_count", *r.oracle_negative_count}};
  return {
      {"surface", r.frac.str()},
      {"ell", r.frac.ell()},
      {"n", r.frac.n()},
      {"theta_deg", r.theta_deg},
      {"x_len", r.x_len},
      {"y_len", r.y_len},
      {"lemma4_bound", r.lemma4_bound},
      {"lemma5_bound", r.lemma5_bound},
      {"basic_integrals", integrals},
      {"selection", r.selection},
      {"matrix_table4", matrix_json(r.matrix_table4)},
      {"matrix_direct", matrix_json(r.matrix_direct)},
      {"max_path_discrepancy", r.max_path_discrepancy},
      {"matrix_eigenvalues", r.matrix_eigenvalues},
      {"negative_definite", r.negative_definite},
      {"margin", r.margin},
      {"theorem1_bound", r.theorem1_bound ? json(*r.theorem1_bound) : json(nullptr)},
      {"oracle", oracle},
      {"tolerances",
       {{"abs_tol", r.abs_tol},
        {"rel_tol", r.rel_tol},
        {"definiteness_relative", r.definiteness_relative},
        {"min_margin", r.min_margin}}},
      {"reference_deviations", r.reference_deviations},
      {"timing", {{"wall_time_s", r.wall_time_s}}},
  };
}

SurfaceReport surface_report_from_json(const json& doc) {
  SurfaceReport r;
  try {
    r.frac = Fraction(doc.at("ell").get<int>(), doc.at("n").get<int>());
    r.theta_deg = doc.at("theta_deg").get<double>();
    r.x_len = doc.at("x_len").get<double>();
    r.y_len = doc.at("y_len").get<double>();
    r.lemma4_bound = doc.at("lemma4_bound").get<int>();
    r.lemma5_bound = doc.at("lemma5_bound").get<int>();
    for (const auto& e : doc.at("basic_integrals"))
      r.basic_integrals.emplace_back(
          IntegralLabel{e.at("j").get<int>(), e.at("A").get<int>(), e.at("B").get<int>()},
          e.at("value").get<double>());
    r.selection = doc.at("selection").get<std::array<int, 9>>();
    r.matrix_table4 = matrix_from_json(doc.at("matrix_table4"));
    r.matrix_direct = matrix_from_json(doc.at("matrix_direct"));
    r.max_path_discrepancy = doc.at("max_path_discrepancy").get<double>();
    r.matrix_eigenvalues = doc.at("matrix_eigenvalues").get<std::vector<double>>();
    r.negative_definite = doc.at("negative_definite").get<bool>();
    r.margin = doc.at("margin").get<double>();
    if (!doc.at("theorem1_bound").is_null()) r.theorem1_bound = doc.at("theorem1_bound").get<int>();
    if (const auto& o = doc.at("oracle"); !o.is_null()) {
      r.oracle_cutoff = o.at("cutoff").get<int>();
      r.oracle_negative_count = o.at("negative_count").get<int>();
    }
    const auto& tol = doc.at("tolerances");
    r.abs_tol = tol.at("abs_tol").get<double>();
    r.rel_tol = tol.at("rel_tol").get<double>();
    r.definiteness_relative = tol.at("definiteness_relative").get<double>();
    r.min_margin = tol.at("min_margin").get<double>();
    r.reference_deviations = doc.at("reference_deviations").get<std::vector<std::string>>();
    r.wall_time_s = doc.at("timing").at("wall_time_s").get<double>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed surface report: ") + e.what());
  }
  if (r.theorem1_bound.has_value() != r.negative_definite)
    throw DomainError("malformed surface report: theorem1_bound must be present iff negative_definite");
  return r;
}

json summary_json(const VerifyAllResult& result, const RunConfig& cfg) {
  json pre = json::array();
  for (std::size_t i = 0; i < result.lemma5_candidates.size(); ++i)
    pre.push_back({{"surface", result.lemma5_candidates[i].str()},
                   {"lemma5_bound", lemma5_bound(result.lemma5_candidates[i])},
                   {"lemma4_bound", result.lemma4_bounds[i]}});
  json surfaces = json::array();
  double total_time = 0.0;
  for (const auto& r : result.reports) {
    surfaces.push_back({{"surface", r.frac.str()},
                        {"negative_definite", r.negative_definite},
                        {"margin", r.margin},
                        {"theorem1_bound", r.theorem1_bound ? json(*r.theorem1_bound) : json(nullptr)},
                        {"reference_deviations", r.reference_deviations.size()}});
    total_time += r.wall_time_s;
  }
  return {{"config", to_json(cfg)},
          {"lemma5_candidates", pre},
          {"surfaces", surfaces},
          {"success", result.success},
          {"index_lower_bound", result.success ? json(8) : json(nullptr)},
          {"timing", {{"surface_time_sum_s", total_time}}}};
}

std::string render_table2_text(const std::vector<Table2Entry>& rows,
                               const std::vector<std::vector<std::string>>& flags) {
  std::string s = fmt::format("{:<8} {:>10} {:>8} {:>8} {:>7} {:>7}\n", "surface", "theta_deg",
                              "x_len", "y_len", "lemma4", "lemma5");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    s += fmt::format("{:<8} {:>10.4f} {:>8.4f} {:>8.4f} {:>7} {:>7}", "W_" + r.frac.str(),
                     r.theta_deg, r.x_len, r.y_len, r.lemma4, r.lemma5);
    if (i < flags.size() && !flags[i].empty()) s += "  <-- deviates";
    s += '\n';
    if (i < flags.size())
      for (const auto& f : flags[i]) s += "    " + f + '\n';
  }
  return s;
}

std::string render_table2_csv(const std::vector<Table2Entry>& rows) {
  std::string s = "surface,theta_deg,x_len,y_len,lemma4_bound,lemma5_bound\n";
  for (const auto& r : rows)
    s += fmt::format("{},{:.6f},{:.6f},{:.6f},{},{}\n", r.frac.str(), r.theta_deg, r.x_len,
                     r.y_len, r.lemma4, r.lemma5);
  return s;
}

namespace {

std::string cell3(double v) {
  if (v == 0.0) return "0";
  return fmt::format("{:#.3g}", v);
}

}  // namespace

std::string render_matrix_text(const Matrix9& m, const std::array<int, 9>& selection) {
  std::string s = "      ";
  for (int idx : selection) s += fmt::format("{:>10}", "u" + std::to_string(idx));
  s += '\n';
  for (int i = 0; i < 9; ++i) {
    s += fmt::format("{:<6}", "u" + std::to_string(selection[static_cast<std::size_t>(i)]));
    for (int j = 0; j < 9; ++j) s += fmt::format("{:>10}", cell3(m(i, j)));
    s += '\n';
  }
  return s;
}

std::string render_report_text(const SurfaceReport& r) {
  std::string s = fmt::format("W_{}  theta = {:.4f} deg  x = {:.4f}  y = {:.4f}  lemma4 = {}  lemma5 = {}\n",
                              r.frac.str(), r.theta_deg, r.x_len, r.y_len, r.lemma4_bound,
                              r.lemma5_bound);
  s += "basic integrals:\n";
  for (const auto& [label, value] : r.basic_integrals)
    s += fmt::format("  {:<10} {: .6f}\n", label.str(), value);
  s += "matrix (closed form):\n" + render_matrix_text(r.matrix_table4, r.selection);
  s += fmt::format("max |closed form - direct quadrature| = {:.3e}\n", r.max_path_discrepancy);
  s += "eigenvalues:";
  for (double e : r.matrix_eigenvalues) s += fmt::format(" {:.4f}", e);
  s += '\n';
  s += fmt::format("negative definite: {}  (margin {:.4f})\n", r.negative_definite ? "yes" : "no",
                   r.margin);
  s += r.theorem1_bound ? fmt::format("index >= {}\n", *r.theorem1_bound)
                        : std::string("no index conclusion\n");
  if (r.oracle_negative_count)
    s += fmt::format("Galerkin negative count at cutoff {}: {}\n", r.oracle_cutoff.value_or(0),
                     *r.oracle_negative_count);
  for (const auto& d : r.reference_deviations) s += "  deviation: " + d + '\n';
  return s;
}

std::string render_reports_csv(const std::vector<SurfaceReport>& reports) {
  std::string s =
      "surface,theta_deg,x_len,y_len,lemma4_bound,lemma5_bound,max_eigenvalue,margin,"
      "negative_definite,theorem1_bound,max_path_discrepancy,oracle_negative_count\n";
  for (const auto& r : reports)
    s += fmt::format("{},{:.6f},{:.6f},{:.6f},{},{},{:.6f},{:.6f},{},{},{:.3e},{}\n", r.frac.str(),
                     r.theta_deg, r.x_len, r.y_len, r.lemma4_bound, r.lemma5_bound,
                     r.matrix_eigenvalues.empty() ? 0.0 : r.matrix_eigenvalues.back(), r.margin,
                     r.negative_definite ? 1 : 0,
                     r.theorem1_bound ? std::to_string(*r.theorem1_bound) : std::string(),
                     r.max_path_discrepancy,
                     r.oracle_negative_count ? std::to_string(*r.oracle_negative_count)
                                             : std::string());
  return s;
}

}  // namespace wente
