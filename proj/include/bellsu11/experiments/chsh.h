#pragma once

#include <array>

#include <nlohmann/json.hpp>

#include "bellsu11/experiments/pipeline.h"

namespace bellsu11::experiments {

struct Setting {
  double theta_a = 0.0;
  double theta_b = 0.0;
};

struct ChshReport {
  // (a, b), (a, b'), (a', b), (a', b')
  std::array<Setting, 4> settings;
  std::array<CorrelationReport, 4> correlations;
  double s = 0.0;  // |C1 + C2 + C3 - C4|
  bool violation = false;

  double recompute() const;
};

ChshReport chsh(const ExperimentSpec& spec);
nlohmann::json to_json(const ChshReport& r);

// Maximizer of S for C = -cos 2(theta_a - theta_b), found by chsh_grid_search
// and frozen so the CLI and the tests use the same setting.
Angles chsh_maximizer_angles();

struct GridSearchResult {
  Angles best;
  double best_s = 0.0;
  double max_s = 0.0;  // over the whole grid, equal to best_s
  int points = 0;
};

// Exhaustive search over n^4 settings with every angle in {k pi / n}. The
// n x n correlation table is computed once by running the pipeline.
GridSearchResult chsh_grid_search(const ExperimentSpec& base, int n = 16);

struct RefineResult {
  Angles best;
  double s = 0.0;
  int evaluations = 0;
};

// Compass search on S from `start`, step halved down to min_step.
RefineResult chsh_refine(const ExperimentSpec& base, Angles start, double step = 0.05, double min_step = 1e-7);

}  // namespace bellsu11::experiments
