#include "bellsu11/cli/commands.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bellsu11/algebra/verify.h"
#include "bellsu11/experiments/chsh.h"
#include "bellsu11/experiments/format.h"
#include "bellsu11/experiments/pipeline.h"
#include "bellsu11/experiments/scan.h"
#include "bellsu11/fock/evolve.h"

namespace bellsu11::cli {
namespace {

using experiments::format_number;
using experiments::SpecError;
using nlohmann::json;

std::string dump(const json& doc) { return experiments::round_numbers(doc).dump(2) + "\n"; }

void write_document(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) return;
  if (cfg.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw SpecError("cannot write output file '" + cfg.output + "'");
  f << text;
  if (!f) throw SpecError("failed writing output file '" + cfg.output + "'");
}

std::string format_of(const RunConfig& cfg, const char* fallback) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  if (f != "json" && f != "csv") throw SpecError("unknown format '" + f + "' (expected json or csv)");
  return f;
}

std::string flags(const experiments::CorrelationReport& r) {
  std::string s;
  if (r.degenerate) s += " (degenerate)";
  if (r.boundary_warning) s += " (boundary weight above threshold)";
  return s;
}

std::string members_of(const algebra::ClosureReport& r) {
  std::string s;
  for (const auto& m : r.members) s += (s.empty() ? "" : ", ") + m;
  return "{" + s + "}";
}

}  // namespace

experiments::ExperimentSpec resolve_spec(const RunConfig& cfg, bool* angles_given) {
  using namespace experiments;
  ExperimentSpec spec;
  bool angles = false;
  if (!cfg.config_path.empty()) {
    std::ifstream in(cfg.config_path);
    if (!in) throw SpecError("cannot open config file '" + cfg.config_path + "'");
    json doc;
    try {
      in >> doc;
    } catch (const json::parse_error& e) {
      throw SpecError("config file '" + cfg.config_path + "' is not valid JSON: " + e.what());
    }
    spec = spec_from_json(doc);
    angles = doc.is_object() && (doc.contains("angles") || doc.contains("theta_a") || doc.contains("theta_b"));
  }
  if (cfg.experiment) {
    spec.kind = parse_pipeline(*cfg.experiment);
    if (spec.kind == PipelineKind::kCustom && cfg.config_path.empty())
      throw SpecError("custom experiments need a config file with stages");
  }
  if (cfg.estimator) spec.estimator = parse_estimator(*cfg.estimator);
  if (cfg.gamma) spec.gamma = *cfg.gamma;
  if (cfg.phi) spec.phi = *cfg.phi;
  if (cfg.cutoff) spec.cutoff = *cfg.cutoff;
  if (cfg.tol) spec.tol = *cfg.tol;
  if (cfg.max_leakage) spec.max_leakage = *cfg.max_leakage;
  auto set = [&](const std::optional<double>& v, double& slot) {
    if (v) {
      slot = *v;
      angles = true;
    }
  };
  set(cfg.theta_a, spec.angles.theta_a);
  set(cfg.theta_b, spec.angles.theta_b);
  set(cfg.theta_a_prime, spec.angles.theta_a_prime);
  set(cfg.theta_b_prime, spec.angles.theta_b_prime);
  spec.refresh_stages();
  spec.validate();
  if (angles_given) *angles_given = angles;
  return spec;
}

int verify_algebra(const algebra::GeneratorCatalog& catalog, const algebra::StructureConstants& table, bool as_json,
                   std::ostream& out, std::ostream& err) {
  using namespace algebra;
  const StructureReport sc = verify_structure_constants(table);
  std::vector<ClosureReport> closures;
  for (const auto& check : standard_closure_checks(catalog)) closures.push_back(run_closure_check(check, table));
  const std::vector<IdentityCheck> identities = standard_identities(catalog);
  std::vector<std::string> non_hermitian;
  int generators = 0;
  for (const auto& e : catalog.entries()) {
    if (e.role == Role::kDerived) continue;
    ++generators;
    if (!is_hermitian(e.op)) non_hermitian.push_back(e.name);
  }
  std::vector<ConjugationClaimReport> claims;
  for (const auto& c : singlet_conjugation_claims()) claims.push_back(check_conjugation_claim(c, 0.3, catalog));

  const int closed = static_cast<int>(std::count_if(closures.begin(), closures.end(), [](auto& c) { return c.closed; }));
  const int holding =
      static_cast<int>(std::count_if(identities.begin(), identities.end(), [](auto& i) { return i.holds(); }));
  const int sc_ok = sc.pairs_checked - static_cast<int>(sc.mismatches.size());
  const bool ok = sc.ok() && closed == static_cast<int>(closures.size()) &&
                  holding == static_cast<int>(identities.size()) && non_hermitian.empty();

  if (as_json) {
    json mism = json::array();
    for (const auto& m : sc.mismatches)
      mism.push_back({{"x", m.x.to_string()},
                      {"y", m.y.to_string()},
                      {"table", m.table_value.to_string()},
                      {"normal_ordered", m.wick_value.to_string()}});
    json fam = json::object();
    for (const auto& [f, n] : sc.pairs_per_family) fam[family_name(f)] = n;
    json cl = json::array();
    for (const auto& c : closures) {
      json failed = json::array();
      for (const auto& p : c.pairs)
        if (!p.residual.is_zero())
          failed.push_back({{"a", c.members[p.a]},
                            {"b", c.members[p.b]},
                            {"computed", p.computed.to_string()},
                            {"expected", p.expected.to_string()}});
      cl.push_back({{"name", c.name}, {"members", c.members}, {"closed", c.closed}, {"failed_pairs", failed}});
    }
    json ids = json::array();
    for (const auto& i : identities) ids.push_back({{"name", i.name}, {"holds", i.holds()}});
    json cj = json::array();
    for (const auto& c : claims) {
      json residuals = json::array();
      for (const auto& img : c.closure.images) residuals.push_back(img.residual.to_string());
      cj.push_back({{"name", c.name},
                    {"span_closed", c.closure.invariant},
                    {"residuals", residuals},
                    {"gamma", c.gamma},
                    {"defect", c.defect},
                    {"holds", c.holds()}});
    }
    json doc = {{"ok", ok},
                {"structure_constants",
                 {{"pairs_checked", sc.pairs_checked}, {"per_family", fam}, {"mismatches", mism}}},
                {"closures", cl},
                {"closures_passed", closed},
                {"identities", ids},
                {"generators_checked", generators},
                {"non_hermitian", non_hermitian},
                {"derivation_claims", cj}};
    out << dump(doc);
  } else {
    out << "structure constants: " << sc_ok << "/" << sc.pairs_checked << " match the normal-ordered brackets\n";
    for (const auto& [f, n] : sc.pairs_per_family) out << "  " << std::left << std::setw(16) << family_name(f) << n << "\n";
    for (const auto& m : sc.mismatches)
      out << "  MISMATCH [" << m.x.to_string() << ", " << m.y.to_string() << "]: table " << m.table_value.to_string()
          << ", normal-ordered " << m.wick_value.to_string() << "\n";
    out << "closures:\n";
    for (const auto& c : closures) {
      out << "  " << (c.closed ? "closed  " : "FAILED  ") << c.name << " " << members_of(c) << "\n";
      for (const auto& p : c.pairs)
        if (!p.residual.is_zero())
          out << "    [" << c.members[p.a] << ", " << c.members[p.b] << "] = " << p.computed.to_string()
              << ", expected " << p.expected.to_string() << "\n";
    }
    out << "identities:\n";
    for (const auto& i : identities) out << "  " << (i.holds() ? "holds   " : "FAILED  ") << i.name << "\n";
    out << "hermiticity: " << generators - static_cast<int>(non_hermitian.size()) << "/" << generators
        << " generators and observables hermitian\n";
    for (const auto& n : non_hermitian) out << "  NOT HERMITIAN " << n << "\n";
    out << "derivation claims under the singlet squeeze (informational, gamma = 0.3):\n";
    for (const auto& c : claims) {
      out << "  " << (c.holds() ? "holds   " : "differs ") << c.name << "  defect " << format_number(c.defect) << "\n";
      if (!c.closure.invariant)
        for (const auto& img : c.closure.images)
          if (!img.in_span) out << "    outside the span: " << img.residual.to_string() << "\n";
    }
    out << sc_ok << "/" << sc.pairs_checked << " structure constants OK; " << closed << "/" << closures.size()
        << " subalgebras closed; " << holding << "/" << identities.size() << " identities hold\n";
  }
  if (!ok) err << "error: algebra verification failed\n";
  return ok ? kExitOk : kExitAlgebraMismatch;
}

int cmd_verify_algebra(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.catalog_path.empty())
    return verify_algebra(algebra::GeneratorCatalog::standard(), algebra::StructureConstants::published(), cfg.json,
                          out, err);
  std::ifstream in(cfg.catalog_path);
  if (!in) throw SpecError("cannot open catalog file '" + cfg.catalog_path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw SpecError("catalog file '" + cfg.catalog_path + "' is not valid JSON: " + e.what());
  }
  const algebra::GeneratorCatalog catalog = algebra::catalog_from_json(doc);
  return verify_algebra(catalog, algebra::StructureConstants::published(), cfg.json, out, err);
}

int cmd_list_generators(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto& catalog = algebra::GeneratorCatalog::standard();
  if (!cfg.format.empty()) format_of(cfg, "json");
  if (cfg.json || cfg.format == "json") {
    const std::string text = dump(algebra::to_json(catalog));
    if (cfg.output.empty())
      out << text;
    else
      write_document(cfg, text, out);
    return kExitOk;
  }
  for (const auto& e : catalog.entries()) {
    out << std::left << std::setw(14) << e.name << std::setw(11) << algebra::role_name(e.role)
        << (algebra::is_hermitian(e.op) ? "hermitian  " : "           ") << e.op.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  using namespace experiments;
  const ExperimentSpec spec = resolve_spec(cfg);
  format_of(cfg, "json");
  RunResult res = run(spec);
  CorrelationReport raw = correlation_raw(res.state);
  CorrelationReport cond = correlation_conditioned(res.state);
  for (auto* r : {&raw, &cond}) {
    r->gamma = spec.gamma;
    r->delta = spec.delta();
  }
  out << "experiment " << pipeline_name(spec.kind) << ", gamma " << format_number(spec.gamma) << ", cutoff "
      << spec.cutoff << "\n";
  out << "C_raw  = " << format_number(raw.value) << flags(raw) << "\n";
  out << "C_cond = " << format_number(cond.value) << flags(cond) << "\n";
  out << "leakage = " << format_number(res.leakage) << ", norm drift = " << format_number(res.norm_drift) << "\n";
  json doc = {{"spec", to_json(spec)},
              {"raw", to_json(raw)},
              {"conditioned", to_json(cond)},
              {"leakage", res.leakage},
              {"norm_drift", res.norm_drift},
              {"error_bound", res.error_bound},
              {"state", fock::to_json(res.state)}};
  write_document(cfg, dump(doc), out);
  return kExitOk;
}

int cmd_chsh(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  using namespace experiments;
  bool angles_given = false;
  ExperimentSpec spec = resolve_spec(cfg, &angles_given);
  format_of(cfg, "json");
  json extra = json::object();
  if (cfg.search) {
    const GridSearchResult g = chsh_grid_search(spec, cfg.grid_points);
    const RefineResult r = chsh_refine(spec, g.best);
    spec.angles = r.best;
    out << "grid search over " << g.points << " settings: max S = " << format_number(g.max_s) << "\n";
    extra = {{"grid_points", cfg.grid_points}, {"grid_max_S", g.max_s}, {"refined_S", r.s}};
  } else if (!angles_given) {
    spec.angles = chsh_maximizer_angles();
  }
  const ChshReport rep = chsh(spec);
  const Angles& a = spec.angles;
  out << "settings theta_a " << format_number(a.theta_a) << ", theta_a' " << format_number(a.theta_a_prime)
      << ", theta_b " << format_number(a.theta_b) << ", theta_b' " << format_number(a.theta_b_prime) << "\n";
  for (int k = 0; k < 4; ++k) out << "C" << k + 1 << " = " << format_number(rep.correlations[k].value) << flags(rep.correlations[k]) << "\n";
  double leak = 0.0;
  for (const auto& c : rep.correlations) leak = std::max(leak, c.leakage);
  out << "S = " << format_number(rep.s) << (rep.violation ? " (violates the local bound 2)" : "") << "\n";
  out << "max leakage = " << format_number(leak) << "\n";
  json doc = to_json(rep);
  doc["spec"] = to_json(spec);
  if (!extra.empty()) doc["search"] = extra;
  write_document(cfg, dump(doc), out);
  return kExitOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  using namespace experiments;
  const ExperimentSpec spec = resolve_spec(cfg);
  const ScanAxis axis = parse_axis(cfg.axis);
  const std::string fmt = format_of(cfg, "csv");
  std::vector<double> grid = cfg.grid;
  if (grid.empty()) {
    double lo = 0.0, hi = std::numbers::pi;
    if (axis == ScanAxis::kGamma) {
      lo = 0.05;
      hi = 0.5;
    }
    if (cfg.points < 1) throw SpecError("--points must be at least 1");
    grid = linspace(cfg.from.value_or(lo), cfg.to.value_or(hi), cfg.points);
  }
  const ScanTable t = scan(spec, axis, grid, cfg.threads);
  out << "scan over " << axis_name(axis) << ": " << t.rows.size() << " rows, " << t.failures() << " failed, max leakage "
      << format_number(t.max_leakage()) << "\n";
  for (const auto& r : t.rows)
    if (r.failed) err << "warning: row " << format_number(r.parameter) << " failed: " << r.error << "\n";
  std::ostringstream doc;
  if (fmt == "csv")
    write_csv(doc, t);
  else
    doc << dump(to_json(t));
  write_document(cfg, doc.str(), out);
  return t.failures() ? kExitNonConvergence : kExitOk;
}

int cmd_convergence(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  using namespace experiments;
  const ExperimentSpec spec = resolve_spec(cfg);
  format_of(cfg, "json");
  const ConvergenceReport r = convergence(spec, cfg.cutoffs);
  out << "cutoff  c_raw  c_cond  leakage\n";
  for (const auto& row : r.rows)
    out << row.cutoff << "  " << format_number(row.c_raw) << "  " << format_number(row.c_cond) << "  "
        << format_number(row.leakage) << "\n";
  out << "extrapolated c_raw " << format_number(r.raw_extrapolated) << " (" << r.raw_digits << " stable digits), c_cond "
      << format_number(r.cond_extrapolated) << " (" << r.cond_digits << " stable digits)\n";
  json doc = to_json(r);
  doc["spec"] = to_json(spec);
  write_document(cfg, dump(doc), out);
  return kExitOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "verify-algebra") return cmd_verify_algebra(cfg, out, err);
    if (cfg.command == "list-generators") return cmd_list_generators(cfg, out, err);
    if (cfg.command == "run") return cmd_run(cfg, out, err);
    if (cfg.command == "chsh") return cmd_chsh(cfg, out, err);
    if (cfg.command == "scan") return cmd_scan(cfg, out, err);
    if (cfg.command == "convergence") return cmd_convergence(cfg, out, err);
    err << "error: unknown command '" << cfg.command << "'\n";
    return kExitConfigError;
  } catch (const experiments::TruncationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const fock::NonConvergenceError& e) {
    err << "error: " << e.what() << "; increase --cutoff or reduce the parameters\n";
    return kExitNonConvergence;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const algebra::CatalogFormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const algebra::UnknownGeneratorError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

}  // namespace bellsu11::cli
