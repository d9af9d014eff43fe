#include "bellsu11/experiments/scan.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "bellsu11/experiments/format.h"
#include "bellsu11/fock/observables.h"

namespace bellsu11::experiments {

const char* axis_name(ScanAxis a) {
  switch (a) {
    case ScanAxis::kDelta: return "delta";
    case ScanAxis::kGamma: return "gamma";
    case ScanAxis::kPhi: return "phi";
  }
  return "?";
}

ScanAxis parse_axis(const std::string& s) {
  if (s == "delta") return ScanAxis::kDelta;
  if (s == "gamma") return ScanAxis::kGamma;
  if (s == "phi") return ScanAxis::kPhi;
  throw SpecError("unknown scan axis '" + s + "' (expected delta, gamma or phi)");
}

double ScanTable::max_leakage() const {
  double m = 0.0;
  for (const auto& r : rows) m = std::max(m, r.leakage);
  return m;
}

int ScanTable::failures() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return r.failed; }));
}

ExperimentSpec with_parameter(const ExperimentSpec& spec, ScanAxis axis, double value) {
  ExperimentSpec s = spec;
  switch (axis) {
    case ScanAxis::kDelta: s.angles.theta_a = s.angles.theta_b + value; break;
    case ScanAxis::kGamma: s.gamma = value; break;
    case ScanAxis::kPhi: s.phi = value; break;
  }
  s.refresh_stages();
  return s;
}

ScanTable scan(const ExperimentSpec& spec, ScanAxis axis, const std::vector<double>& grid, unsigned threads) {
  if (grid.empty()) throw SpecError("scan grid is empty");
  const bool up = grid.size() < 2 || grid[1] > grid[0];
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (up ? !(grid[k] > grid[k - 1]) : !(grid[k] < grid[k - 1])) throw SpecError("scan grid must be strictly monotone");
  }
  if (spec.kind == PipelineKind::kCustom) throw SpecError("custom pipelines cannot be scanned");
  if (axis == ScanAxis::kPhi && spec.kind != PipelineKind::kHorne)
    throw SpecError("the phi axis applies to the horne pipeline");
  if (axis == ScanAxis::kDelta && spec.kind == PipelineKind::kHorne)
    throw SpecError("the delta axis does not apply to the horne pipeline");
  spec.validate();

  ScanTable t;
  t.axis = axis;
  t.rows.resize(grid.size());
  auto work = [&](std::size_t k) {
    ScanRow& row = t.rows[k];
    row.parameter = grid[k];
    try {
      RunResult res = run(with_parameter(spec, axis, grid[k]));
      const CorrelationReport raw = correlation_raw(res.state);
      const CorrelationReport cond = correlation_conditioned(res.state);
      row.c_raw = raw.value;
      row.c_cond = cond.value;
      row.numerator = raw.numerator;
      row.denominator = raw.denominator;
      row.leakage = res.leakage;
      row.raw_degenerate = raw.degenerate;
      row.cond_degenerate = cond.degenerate;
    } catch (const std::exception& e) {
      row.failed = true;
      row.error = e.what();
    }
  };

  unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(grid.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < n; ++w)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < grid.size();) work(k);
    });
  for (std::size_t k; (k = next.fetch_add(1)) < grid.size();) work(k);
  for (auto& th : pool) th.join();
  return t;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw SpecError("linspace needs at least one point");
  if (n == 1) return {lo};
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) g[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (n - 1);
  return g;
}

void write_csv(std::ostream& os, const ScanTable& t) {
  os << "parameter,c_raw,c_cond,numerator,denominator,leakage\n";
  for (const auto& r : t.rows) {
    if (r.failed) {
      os << format_number(r.parameter) << ",failed,failed,failed,failed,failed\n";
      continue;
    }
    os << format_number(r.parameter) << ',' << format_number(r.c_raw) << ',' << format_number(r.c_cond) << ','
       << format_number(r.numerator) << ',' << format_number(r.denominator) << ',' << format_number(r.leakage)
       << '\n';
  }
}

nlohmann::json to_json(const ScanTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json j = {{"parameter", r.parameter}, {"c_raw", r.c_raw},        {"c_cond", r.c_cond},
                        {"numerator", r.numerator}, {"denominator", r.denominator}, {"leakage", r.leakage},
                        {"raw_degenerate", r.raw_degenerate}, {"cond_degenerate", r.cond_degenerate},
                        {"failed", r.failed}};
    if (r.failed) j["error"] = r.error;
    rows.push_back(j);
  }
  return {{"axis", axis_name(t.axis)}, {"rows", rows}};
}

ConvergenceReport convergence(const ExperimentSpec& spec, const std::vector<int>& cutoffs) {
  if (cutoffs.size() < 2) throw SpecError("convergence needs at least two cutoffs");
  ConvergenceReport r;
  for (int n : cutoffs) {
    ExperimentSpec s = spec;
    s.cutoff = n;
    // the small cutoffs are the point of the sweep
    s.max_leakage = 1.0;
    RunResult res = run(s);
    r.rows.push_back({n, correlation_raw(res.state).value, correlation_conditioned(res.state).value, res.leakage});
  }
  auto aitken = [](double x0, double x1, double x2) {
    const double d = x2 - 2 * x1 + x0;
    return std::abs(d) < 1e-300 ? x2 : x2 - (x2 - x1) * (x2 - x1) / d;
  };
  auto digits = [](double a, double b) {
    const double diff = std::abs(a - b);
    if (diff == 0.0) return 16;
    return std::clamp(static_cast<int>(std::floor(-std::log10(diff))), 0, 16);
  };
  const std::size_t m = r.rows.size();
  const auto& last = r.rows[m - 1];
  const auto& prev = r.rows[m - 2];
  if (m >= 3) {
    const auto& p2 = r.rows[m - 3];
    r.raw_extrapolated = aitken(p2.c_raw, prev.c_raw, last.c_raw);
    r.cond_extrapolated = aitken(p2.c_cond, prev.c_cond, last.c_cond);
  } else {
    r.raw_extrapolated = last.c_raw;
    r.cond_extrapolated = last.c_cond;
  }
  r.raw_digits = digits(last.c_raw, prev.c_raw);
  r.cond_digits = digits(last.c_cond, prev.c_cond);
  return r;
}

nlohmann::json to_json(const ConvergenceReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"cutoff", x.cutoff}, {"c_raw", x.c_raw}, {"c_cond", x.c_cond}, {"leakage", x.leakage}});
  return {{"rows", rows},
          {"raw_extrapolated", r.raw_extrapolated},
          {"cond_extrapolated", r.cond_extrapolated},
          {"raw_stable_digits", r.raw_digits},
          {"cond_stable_digits", r.cond_digits}};
}

double ideal_raw_closed_form(double gamma, double delta) {
  const double s = std::pow(std::sinh(gamma / 2), 2);
  const double den = 6 * s * s + 2 * s;
  if (den < kDegenerateDenominator) return 0.0;
  return -2 * s * (1 + s) * std::cos(2 * delta) / den;
}

std::vector<double> GammaDeviationTable::orders() const {
  std::vector<double> out;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (rows[k].ratio > 0.0) out.push_back(-std::log2(rows[k].ratio));
  }
  return out;
}

GammaDeviationTable gamma_deviation(const std::vector<double>& gammas, double delta, int cutoff) {
  if (gammas.empty()) throw SpecError("gamma sweep is empty");
  GammaDeviationTable t;
  t.delta = delta;
  for (double g : gammas) {
    ExperimentSpec s = make_ideal(g, delta, 0.0);
    s.cutoff = cutoff;
    RunResult res = run(s);
    const CorrelationReport raw = correlation_raw(res.state);
    const CorrelationReport cond = correlation_conditioned(res.state);
    GammaDeviationRow row;
    row.gamma = g;
    row.c_raw = raw.value;
    row.c_cond = cond.value;
    row.deviation = raw.value - cond.value;
    row.denominator = raw.denominator;
    row.half_sinh2 = 0.5 * std::pow(std::sinh(g), 2);
    row.closed_form = ideal_raw_closed_form(g, delta);
    if (!t.rows.empty() && t.rows.back().deviation != 0.0) row.ratio = row.deviation / t.rows.back().deviation;
    t.rows.push_back(row);
  }
  return t;
}

nlohmann::json to_json(const GammaDeviationTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"gamma", r.gamma},
                    {"c_raw", r.c_raw},
                    {"c_cond", r.c_cond},
                    {"deviation", r.deviation},
                    {"ratio", r.ratio},
                    {"denominator", r.denominator},
                    {"half_sinh2", r.half_sinh2},
                    {"closed_form", r.closed_form}});
  return {{"delta", t.delta}, {"rows", rows}};
}

}  // namespace bellsu11::experiments
