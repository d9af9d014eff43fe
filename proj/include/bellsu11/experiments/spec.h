#pragma once

#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bellsu11/algebra/adjoint.h"
#include "bellsu11/algebra/catalog.h"

namespace bellsu11::experiments {

// Invalid experiment description: unknown generator, bad number, bad JSON.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class PipelineKind { kIdeal, kHorne, kOuMandel, kCustom };
enum class Estimator { kRaw, kConditioned };

const char* pipeline_name(PipelineKind k);
const char* estimator_name(Estimator e);
PipelineKind parse_pipeline(const std::string& s);
Estimator parse_estimator(const std::string& s);

// exp(i t J) with J = J_x^(ij) sends c_i^dag to cos(t/2) c_i^dag + i sin(t/2) c_j^dag,
// so a 50/50 splitter on J_BS needs t = pi/2 and a 90 degree polarization
// rotation on J_a needs t = pi.
inline constexpr double kBeamSplitterAngle = std::numbers::pi / 2;
inline constexpr double kHalfWaveAngle = std::numbers::pi;

struct Stage {
  std::string generator;  // catalog name, or a label when `op` is set
  double parameter = 0.0;
  std::optional<algebra::FloatQuadOp> op;  // explicit operator overriding the catalog
};

// Analyzer settings, radians.
struct Angles {
  double theta_a = 0.0;
  double theta_a_prime = 0.0;
  double theta_b = 0.0;
  double theta_b_prime = 0.0;
};

struct ExperimentSpec {
  PipelineKind kind = PipelineKind::kIdeal;
  std::vector<Stage> stages;
  Estimator estimator = Estimator::kConditioned;
  double gamma = 0.2;
  Angles angles;
  double phi = 0.0;  // phase difference, horne pipeline
  int cutoff = 8;
  double tol = 1e-12;
  double max_leakage = 1e-3;  // run() fails above this

  // Rebuilds `stages` from gamma / angles / phi for the named pipelines;
  // custom pipelines keep their stages.
  void refresh_stages();
  // Copy with (theta_a, theta_b) as the active setting.
  ExperimentSpec at_setting(double theta_a, double theta_b) const;
  // Throws SpecError.
  void validate(const algebra::GeneratorCatalog& catalog = algebra::GeneratorCatalog::standard()) const;

  double delta() const { return angles.theta_a - angles.theta_b; }
};

// Source, then polarization rotators. [K, J_a + J_b] = 0 lets the two
// rotations act as the difference transformation U_-(theta_a - theta_b).
std::vector<Stage> ideal_stages(double gamma, double theta_a, double theta_b);
// Wave-number source, phase-shift difference, then the beam splitter.
std::vector<Stage> horne_stages(double gamma, double phi);
// Type-I source, half-wave rotation in channel a, beam splitter, rotators.
std::vector<Stage> ou_mandel_stages(double gamma, double theta_a, double theta_b);

ExperimentSpec make_ideal(double gamma, double theta_a = 0.0, double theta_b = 0.0);
ExperimentSpec make_horne(double gamma, double phi = 0.0);
ExperimentSpec make_ou_mandel(double gamma, double theta_a = 0.0, double theta_b = 0.0);
ExperimentSpec make_custom(std::vector<Stage> stages);

// JSON config document; see docs/experiment_spec.schema.json.
ExperimentSpec spec_from_json(const nlohmann::json& doc);
ExperimentSpec load_spec(const std::string& path);
nlohmann::json to_json(const ExperimentSpec& spec);

}  // namespace bellsu11::experiments
