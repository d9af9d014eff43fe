#include "bellsu11/experiments/chsh.h"

#include <cmath>
#include <numbers>
#include <vector>

namespace bellsu11::experiments {
namespace {

double s_value(double c1, double c2, double c3, double c4) { return std::abs(c1 + c2 + c3 - c4); }

double s_of(const ExperimentSpec& base, const Angles& a, int* evals) {
  const Setting st[4] = {{a.theta_a, a.theta_b}, {a.theta_a, a.theta_b_prime}, {a.theta_a_prime, a.theta_b},
                         {a.theta_a_prime, a.theta_b_prime}};
  double c[4];
  for (int k = 0; k < 4; ++k) c[k] = evaluate(base.at_setting(st[k].theta_a, st[k].theta_b)).value;
  if (evals) *evals += 4;
  return s_value(c[0], c[1], c[2], c[3]);
}

}  // namespace

double ChshReport::recompute() const {
  return s_value(correlations[0].value, correlations[1].value, correlations[2].value, correlations[3].value);
}

ChshReport chsh(const ExperimentSpec& spec) {
  const Angles& a = spec.angles;
  ChshReport r;
  r.settings = {Setting{a.theta_a, a.theta_b}, Setting{a.theta_a, a.theta_b_prime}, Setting{a.theta_a_prime, a.theta_b},
                Setting{a.theta_a_prime, a.theta_b_prime}};
  for (int k = 0; k < 4; ++k) r.correlations[k] = evaluate(spec.at_setting(r.settings[k].theta_a, r.settings[k].theta_b));
  r.s = r.recompute();
  r.violation = r.s > 2.0;
  return r;
}

nlohmann::json to_json(const ChshReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 0; k < 4; ++k) {
    nlohmann::json c = to_json(r.correlations[k]);
    c["theta_a"] = r.settings[k].theta_a;
    c["theta_b"] = r.settings[k].theta_b;
    rows.push_back(c);
  }
  return {{"S", r.s}, {"violation", r.violation}, {"correlations", rows}};
}

Angles chsh_maximizer_angles() {
  constexpr double pi = std::numbers::pi;
  Angles a;
  a.theta_a = 0.0;
  a.theta_b = -pi / 8;
  a.theta_b_prime = pi / 8;
  a.theta_a_prime = -pi / 4;
  return a;
}

GridSearchResult chsh_grid_search(const ExperimentSpec& base, int n) {
  if (n < 2) throw SpecError("grid search needs at least 2 points per angle");
  const double h = std::numbers::pi / n;
  std::vector<double> c(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i * n + j)] = evaluate(base.at_setting(i * h, j * h)).value;
  auto at = [&](int i, int j) { return c[static_cast<std::size_t>(i * n + j)]; };

  GridSearchResult out;
  // loop order a, a', b, b'; strict > keeps the first maximizer
  for (int a = 0; a < n; ++a)
    for (int ap = 0; ap < n; ++ap)
      for (int b = 0; b < n; ++b)
        for (int bp = 0; bp < n; ++bp) {
          ++out.points;
          const double s = s_value(at(a, b), at(a, bp), at(ap, b), at(ap, bp));
          if (s > out.best_s) {
            out.best_s = s;
            out.best = Angles{a * h, ap * h, b * h, bp * h};
          }
        }
  out.max_s = out.best_s;
  return out;
}

RefineResult chsh_refine(const ExperimentSpec& base, Angles start, double step, double min_step) {
  RefineResult r{start, 0.0, 0};
  r.s = s_of(base, start, &r.evaluations);
  double* slots[4] = {&r.best.theta_a, &r.best.theta_a_prime, &r.best.theta_b, &r.best.theta_b_prime};
  while (step >= min_step) {
    bool improved = false;
    for (double* slot : slots) {
      for (double dir : {1.0, -1.0}) {
        const double keep = *slot;
        *slot = keep + dir * step;
        const double s = s_of(base, r.best, &r.evaluations);
        if (s > r.s + 1e-15) {
          r.s = s;
          improved = true;
          break;
        }
        *slot = keep;
      }
    }
    if (!improved) step /= 2;
  }
  return r;
}

}  // namespace bellsu11::experiments
