// Writes the reference tables in tests/golden from the dense oracle. Run by
// hand after an intentional change:  freeze_golden <golden-dir>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "bellsu11/algebra/catalog.h"
#include "dense_oracle.h"

using nlohmann::json;
using oracle::Dense;
using oracle::Mat;
using oracle::Vec;

namespace {

const auto& cat() { return bellsu11::algebra::GeneratorCatalog::standard(); }
constexpr double kPi = std::numbers::pi;

struct Obs {
  Mat sza, szb, s0a, s0b;
  explicit Obs(const Dense& d)
      : sza(d.matrix(cat().at("sigma_z_a"))),
        szb(d.matrix(cat().at("sigma_z_b"))),
        s0a(d.matrix(cat().at("sigma_0_a"))),
        s0b(d.matrix(cat().at("sigma_0_b"))) {}
};

json correlations(const Dense& d, const Obs& o, const Vec& v) {
  const double num = v.dot(o.sza * (o.szb * v)).real();
  const double den = v.dot(o.s0a * (o.s0b * v)).real();
  const Vec p = oracle::coincidences(d, v);
  const double w = p.squaredNorm();
  double cond = 0.0;
  if (w >= 1e-14) {
    const Vec q = p / std::sqrt(w);
    cond = oracle::ratio(q, o.sza, o.szb, o.s0a, o.s0b);
  }
  return {{"c_raw", den < 1e-14 ? 0.0 : num / den},
          {"numerator", num},
          {"denominator", den},
          {"c_cond", cond},
          {"weight", w},
          {"cond_degenerate", w < 1e-14}};
}

void write(const std::string& dir, const std::string& name, const json& doc) {
  std::ofstream f(dir + "/" + name);
  f << doc.dump(2) << "\n";
  std::cout << "wrote " << name << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: freeze_golden <golden-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];

  {  // horne fringe
    Dense d(10);
    Obs o(d);
    json rows = json::array();
    for (double phi : {0.0, kPi / 4, kPi / 2, kPi}) {
      const Vec v = oracle::run(d, {{d.matrix(cat().at("K_prime")), 0.2},
                                    {d.matrix(cat().at("J_prime")), phi},
                                    {d.matrix(cat().at("J_BS")), kPi / 2}});
      json r = correlations(d, o, v);
      r["phi"] = phi;
      rows.push_back(r);
    }
    write(dir, "horne_fringe.json", {{"gamma", 0.2}, {"cutoff", 10}, {"rows", rows}});
  }

  {  // raw estimator against gamma at delta = 0, plus the ideal-pipeline baseline
    // at delta = 0 both rotators are the identity, so only the squeeze acts
    Dense d(12);
    Obs o(d);
    const oracle::Expi squeeze(d.matrix(cat().at("K")));
    json rows = json::array();
    double prev = 0.0;
    for (double g : {0.4, 0.2, 0.1, 0.05}) {
      json r = correlations(d, o, squeeze.apply(g, d.vacuum()));
      const double dev = r["c_raw"].get<double>() - r["c_cond"].get<double>();
      r["gamma"] = g;
      r["deviation"] = dev;
      r["ratio"] = prev == 0.0 ? 0.0 : dev / prev;
      r["half_sinh2"] = 0.5 * std::pow(std::sinh(g), 2);
      prev = dev;
      rows.push_back(r);
    }
    write(dir, "gamma_deviation.json", {{"delta", 0.0}, {"cutoff", 12}, {"rows", rows}});

    json base = correlations(d, o, squeeze.apply(0.3, d.vacuum()));
    base["gamma"] = 0.3;
    base["delta"] = 0.0;
    base["cutoff"] = 12;
    write(dir, "ideal_raw_gamma03.json", base);
  }

  {  // truncation leakage of the singlet squeeze
    Dense d(8);
    const Vec v = oracle::run(d, {{d.matrix(cat().at("K")), 0.2}});
    const double leak = oracle::shell_weight(d.basis(), v, [](int n) { return n >= 7; });
    Dense d10(10);
    const Vec v10 = oracle::run(d10, {{d10.matrix(cat().at("K")), 0.2}});
    const double leak10 = oracle::shell_weight(d10.basis(), v10, [](int n) { return n >= 9; });
    write(dir, "leakage.json", {{"gamma", 0.2}, {"generator", "K"}, {"cutoff_8", leak}, {"cutoff_10", leak10}});
  }

  {  // two-mode squeezing ratio: K_x_13 only couples |n,0,n,0>, so an exact
     // dense exponential on that chain at cutoff 24 suffices
    const int nmax = 12;
    Mat h = Mat::Zero(nmax + 1, nmax + 1);
    for (int n = 0; n < nmax; ++n) {  // <n+1,n+1| (A_13 + B_13)/2 |n,n> = (n+1)/2
      h(n + 1, n) = 0.5 * (n + 1);
      h(n, n + 1) = 0.5 * (n + 1);
    }
    const Vec v = oracle::expi(h, 0.6).col(0);
    json ratios = json::array();
    for (int n = 1; n <= 5; ++n) ratios.push_back(std::abs(v(n)) / std::abs(v(n - 1)));
    write(dir, "squeeze_ratio.json", {{"gamma", 0.6}, {"generator", "K_x_13"}, {"cutoff", 24}, {"ratios", ratios}});
  }

  {  // CHSH grid search on C = -cos 2(theta_a - theta_b), angles k pi / 16
    const int n = 16;
    auto c = [](double a, double b) { return -std::cos(2 * (a - b)); };
    double best = -1.0, grid_max = -1.0;
    json at;
    for (int a = 0; a < n; ++a)
      for (int ap = 0; ap < n; ++ap)
        for (int b = 0; b < n; ++b)
          for (int bp = 0; bp < n; ++bp) {
            const double h = kPi / n;
            const double s = std::abs(c(a * h, b * h) + c(a * h, bp * h) + c(ap * h, b * h) - c(ap * h, bp * h));
            grid_max = std::max(grid_max, s);
            if (s > best) {
              best = s;
              at = {{"theta_a", a * h}, {"theta_a_prime", ap * h}, {"theta_b", b * h}, {"theta_b_prime", bp * h}};
            }
          }
    // a shift by -theta_a and a reflection put the optimum at the
    // conventional (0, -pi/8, pi/8, -pi/4) for (a, b, b', a')
    json frozen = {{"theta_a", 0.0}, {"theta_b", -kPi / 8}, {"theta_b_prime", kPi / 8}, {"theta_a_prime", -kPi / 4}};
    const double sf = std::abs(c(0, -kPi / 8) + c(0, kPi / 8) + c(-kPi / 4, -kPi / 8) - c(-kPi / 4, kPi / 8));
    write(dir, "chsh_maximizer.json",
          {{"grid_points", n}, {"grid_best", at}, {"grid_max_S", grid_max}, {"frozen", frozen}, {"frozen_S", sf}});
  }
  return 0;
}
