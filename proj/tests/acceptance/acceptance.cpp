// One PASS/FAIL line per acceptance criterion.
//   acceptance            all criteria, exit 1 if any fails
//   acceptance A4 A7      just those

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bellsu11/algebra/verify.h"
#include "bellsu11/experiments/checks.h"
#include "bellsu11/experiments/chsh.h"
#include "bellsu11/experiments/format.h"
#include "bellsu11/experiments/scan.h"
#include "dense_oracle.h"

using namespace bellsu11;
using namespace bellsu11::experiments;
using algebra::FloatQuadOp;
using algebra::GeneratorCatalog;

namespace {

constexpr double kPi = std::numbers::pi;
const double kTsirelson = 2 * std::sqrt(2.0);

struct Outcome {
  bool pass = false;
  std::string detail;
};

const GeneratorCatalog& cat() { return GeneratorCatalog::standard(); }

std::string num(double x) { return format_number(x); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// run() plus the unitarity-drift check that applies to every acceptance run
struct Drift {
  int runs = 0;
  int violations = 0;
  double worst = 0.0;  // max drift / (tol + leakage)
  std::string note() const {
    return "drift ok on " + std::to_string(runs - violations) + "/" + std::to_string(runs) + " runs";
  }
};

RunResult checked_run(const ExperimentSpec& spec, Drift& d) {
  RunResult r = run(spec);
  ++d.runs;
  const double bound = spec.tol + r.leakage;
  d.worst = std::max(d.worst, r.norm_drift / bound);
  if (r.norm_drift > bound) ++d.violations;
  return r;
}

bool hermitian(const algebra::QuadOp& op) { return FloatQuadOp(op).hermiticity_defect() == 0.0; }

oracle::Vec reorder(const fock::StateVector& psi, const oracle::DenseBasis& ob) {
  oracle::Vec out(ob.dim());
  for (std::size_t k = 0; k < psi.dim(); ++k)
    out(ob.index.at(psi.fock().occupation(k))) = psi.amplitudes()(static_cast<Eigen::Index>(k));
  return out;
}

Outcome a1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = algebra::verify_structure_constants();
  const double t = seconds_since(t0);
  const int ok = r.pairs_checked - static_cast<int>(r.mismatches.size());
  return {r.ok() && r.pairs_checked == 1296 && t < 5.0,
          std::to_string(ok) + "/" + std::to_string(r.pairs_checked) + " brackets exact, " + num(t) + " s (limit 5 s)"};
}

Outcome a2() {
  int closed = 0, total = 0;
  std::map<std::string, bool> required{
      {"ideal-test su(1,1)", false}, {"wave-number test su(1,1)", false}, {"singlet invariance", false}};
  std::string failed;
  for (const auto& c : algebra::standard_closure_checks()) {
    const auto r = algebra::run_closure_check(c);
    ++total;
    if (r.closed) ++closed;
    else failed += " " + c.name;
    if (auto it = required.find(c.name); it != required.end()) it->second = r.closed;
  }
  bool all_required = true;
  for (const auto& [name, ok] : required) all_required = all_required && ok;
  return {closed == total && all_required,
          std::to_string(closed) + "/" + std::to_string(total) + " closure tables exact" +
              (all_required ? "; {J,K,L}, {J',K',L'} and [K, J_a + J_b] = 0 hold" : "; missing required:" + failed)};
}

Outcome a3() {
  const auto at = beam_splitter_conjugation(kBeamSplitterAngle);
  const auto best = best_beam_splitter_conjugation();
  const bool generator_ok = at.defect < 1e-10;

  // passive conjugations commute with the shell projector, so the dense
  // U (P X P) U^dag is exact at any cutoff
  const oracle::Dense d(6);
  const oracle::Expi bs(d.matrix(cat().at("J_BS")));
  const oracle::Mat u = bs.matrix(kBeamSplitterAngle), ud = bs.matrix(-kBeamSplitterAngle);
  double oracle_err = 0.0;
  int checked = 0;
  for (const auto& e : cat().entries()) {
    if (!hermitian(e.op)) continue;
    const FloatQuadOp y = algebra::conjugate(cat().at("J_BS"), kBeamSplitterAngle, e.op);
    oracle_err = std::max(oracle_err, (d.matrix(y) - u * d.matrix(e.op) * ud).cwiseAbs().maxCoeff());
    ++checked;
  }
  const bool oracle_ok = oracle_err < 1e-10;
  return {generator_ok && oracle_ok,
          "transformed generator: defect " + num(at.defect) + " at theta = pi/2 (best over theta " + num(best.defect) +
              " at " + num(best.theta) + "), needs < 1e-10: " + (generator_ok ? "ok" : "unattainable") +
              "; dense oracle at cutoff 6: max error " + num(oracle_err) + " over " + std::to_string(checked) +
              " operators" + (oracle_ok ? "" : " (too large)")};
}

Outcome a4() {
  const auto t0 = std::chrono::steady_clock::now();
  Drift drift;
  double worst = 0.0;
  int points = 0;
  for (double g : {0.05, 0.2, 0.5}) {
    for (double delta : linspace(0.0, kPi, 65)) {
      const auto psi = checked_run(make_ideal(g, delta, 0.0), drift).state;
      worst = std::max(worst, std::abs(correlation_conditioned(psi).value + std::cos(2 * delta)));
      ++points;
    }
  }
  const double t = seconds_since(t0);
  return {worst < 1e-8 && t < 30.0 && drift.violations == 0,
          "max |C_cond + cos 2 delta| = " + num(worst) + " over " + std::to_string(points) + " points, " + num(t) +
              " s (limit 30 s), " + drift.note()};
}

Outcome a5() {
  auto s = make_ideal(0.2);
  s.angles = chsh_maximizer_angles();
  const double at = chsh(s).s;
  const auto grid = chsh_grid_search(make_ideal(0.2), 16);
  const bool ok = std::abs(at - kTsirelson) < 1e-6 && grid.max_s <= kTsirelson + 1e-9;
  return {ok, "S = " + num(at) + " at the maximizer (|S - 2 sqrt 2| = " + num(std::abs(at - kTsirelson)) +
                  "); max S over " + std::to_string(grid.points) + " grid settings " + num(grid.max_s)};
}

Outcome a6() {
  std::vector<std::string> families;
  for (int i = 1; i <= 4; ++i) families.push_back("K_x_" + std::to_string(i));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) families.push_back("K_x_" + std::to_string(i) + std::to_string(j));
  families.push_back("K_x");

  bool stable = true;
  double worst_change = 0.0, largest = 0.0;
  for (const auto& f : families) {
    const double r1 = perturbative_residual(f, 0.02), r2 = perturbative_residual(f, 0.01);
    const double change = std::abs(r2 / r1 - 1.0);
    worst_change = std::max(worst_change, change);
    largest = std::max(largest, r2);
    stable = stable && std::isfinite(r1) && r1 > 0.0 && change < 0.05;
  }

  Drift drift;
  const double g = 0.01;
  const auto psi = checked_run(make_custom({{"K_x_13", g, {}}}), drift).state;
  const std::complex<double> expected(0.0, g / 2);
  const double rel = std::abs(psi.amplitude({1, 0, 1, 0}) - expected) / std::abs(expected);
  return {stable && rel < 1e-4 && drift.violations == 0,
          std::to_string(families.size()) + " families: residual / gamma^2 at most " + num(largest) +
              ", largest change under halving " + num(100 * worst_change) + "% (limit 5%); type-I amplitude rel. error " +
              num(rel) + " (limit 1e-4)"};
}

Outcome a7() {
  double worst = 0.0;
  for (double delta : linspace(-kPi, kPi, 25)) worst = std::max(worst, sigma_rotation_defect(delta));
  const auto shifts = verify_rotation_identity(0.2, 0.4, 0.1);
  return {worst < 1e-10 && shifts.ok, "max coefficient error " + num(worst) +
                                          " over 25 angle differences in [-pi, pi]; shift invariance " +
                                          (shifts.ok ? "holds" : "broken")};
}

Outcome a8() {
  const auto table = gamma_deviation({0.4, 0.2, 0.1, 0.05});
  bool ratios_ok = true, toward = true;
  std::ostringstream ratios;
  for (std::size_t k = 1; k < table.rows.size(); ++k) {
    const double r = table.rows[k].ratio;
    ratios << (k > 1 ? ", " : "") << num(r);
    ratios_ok = ratios_ok && std::abs(r - 0.25) <= 0.05;
    toward = toward && std::abs(table.rows[k].deviation) < std::abs(table.rows[k - 1].deviation);
  }

  // archived table
  std::ifstream f(std::string(BELLSU11_GOLDEN_DIR) + "/gamma_deviation.json");
  bool archived = false;
  if (f) {
    const auto golden = nlohmann::json::parse(f);
    archived = golden["rows"].size() == table.rows.size();
    for (std::size_t k = 0; archived && k < table.rows.size(); ++k)
      archived = std::abs(golden["rows"][k]["c_raw"].get<double>() - table.rows[k].c_raw) < 1e-10;
  }
  const double smallest = std::abs(table.rows.back().deviation);
  const bool independent = smallest < 1e-10;
  return {ratios_ok && toward && archived,
          "halving ratios " + ratios.str() + " (0.25 +- 0.05); archived table " + (archived ? "matches" : "MISSING or differs") +
              "; gamma-independence of C_raw " + (independent ? "holds" : "does not hold") + " (deviation " +
              num(table.rows.back().deviation) + " at gamma = " + num(table.rows.back().gamma) + ")"};
}

Outcome a9() {
  const double f01 = ou_mandel_fidelity(0.1);
  std::vector<double> deficits;
  for (double g : {0.1, 0.05, 0.025}) deficits.push_back(1.0 - ou_mandel_fidelity(g));
  // deficits at rounding level make the order undefined; 1 - F <= C gamma^2 then holds for any C
  constexpr double kRounding = 1e-14;
  bool order_ok = true;
  std::string order_note;
  for (std::size_t k = 1; k < deficits.size(); ++k) {
    if (std::abs(deficits[k - 1]) <= kRounding && std::abs(deficits[k]) <= kRounding) continue;
    const double order = std::log2(deficits[k - 1] / deficits[k]);
    order_note += " " + num(order);
    order_ok = order_ok && order >= 2.0;
  }
  if (order_note.empty()) order_note = " none measurable, deficits at rounding level";
  return {f01 >= 1 - 1e-4 && order_ok,
          "F(0.1) = " + num(f01) + " (limit 1 - 1e-4); deficits " + num(deficits[0]) + ", " + num(deficits[1]) + ", " +
              num(deficits[2]) + "; orders" + order_note};
}

Outcome a10() {
  std::vector<std::string> gens;
  for (const auto& e : cat().entries())
    if (e.role == algebra::Role::kGenerator && hermitian(e.op)) gens.push_back(e.name);

  const int n = 6;
  const oracle::Dense d(n);
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_real_distribution<double> angle(-0.6, 0.6);
  Drift drift;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Stage> stages;
    std::vector<oracle::DenseStage> dense;
    for (int k = len(rng); k > 0; --k) {
      const std::string g = gens[pick(rng)];
      const double theta = angle(rng);
      stages.push_back({g, theta, {}});
      dense.push_back({d.matrix(cat().at(g)), theta});
    }
    auto spec = make_custom(stages);
    spec.cutoff = n;
    spec.max_leakage = 1.0;  // equivalence is about the truncated dynamics itself
    const auto r = checked_run(spec, drift);
    worst = std::max(worst, (reorder(r.state, d.basis()) - oracle::run(d, dense)).norm());
  }
  return {worst < 1e-10 && drift.violations == 0,
          "max state error " + num(worst) + " over 20 pipelines at cutoff 6 (limit 1e-10); " + drift.note() +
              ", worst drift / (tol + leakage) " + num(drift.worst)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5},
      {"A6", a6}, {"A7", a7}, {"A8", a8}, {"A9", a9}, {"A10", a10}};
  std::vector<std::string> wanted(argv + 1, argv + argc);
  int failures = 0, ran = 0;
  for (const auto& [id, fn] : criteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), id) == wanted.end()) continue;
    ++ran;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS " : "FAIL ") << id << "  " << o.detail << std::endl;
  }
  if (ran == 0) {
    std::cerr << "no such criterion\n";
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
