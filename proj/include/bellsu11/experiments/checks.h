#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bellsu11/algebra/adjoint.h"
#include "bellsu11/experiments/pipeline.h"

namespace bellsu11::experiments {

struct ShiftCheck {
  double shift = 0.0;
  double raw_change = 0.0;   // |C_raw(a+s, b+s) - C_raw(a, b)|
  double cond_change = 0.0;  // same, conditioned
};

struct RotationIdentityReport {
  double gamma = 0.0;
  double theta_a = 0.0;
  double theta_b = 0.0;
  std::vector<ShiftCheck> shifts;
  // max coefficient error of U_-^dag sz_a U_- against cos(d) sz_a - sin(d) sy_a
  double sigma_defect = 0.0;
  bool ok = false;
};

// Shift invariance of both estimators for s in `shifts`, and the sigma
// rotation under U_-(delta) = exp(i delta J_a) exp(-i delta J_b).
RotationIdentityReport verify_rotation_identity(double gamma, double theta_a, double theta_b,
                                                const std::vector<double>& shifts = {0.3, 1.1}, int cutoff = 8);
// The sigma part alone: coefficient defect at difference angle delta.
double sigma_rotation_defect(double delta);
nlohmann::json to_json(const RotationIdentityReport& r);

// Horne pipeline run two ways: staged, and as exp(i phi J'') exp(i gamma K'')
// with X'' = U_BS X U_BS^{-1} from algebra::conjugate.
struct EquivalenceReport {
  double distance = 0.0;             // ||psi_1 - psi_2||, no phase freedom
  double distance_up_to_phase = 0.0;
  double post_selected_fidelity = 0.0;  // between the normalized coincidence projections
};

EquivalenceReport horne_equivalence(double gamma, double phi, int cutoff = 8);

// Ou-Mandel state against a single squeeze: `conjugated` uses U K_OM U^{-1}
// for the staged passive optics U, `printed` uses the catalog K_OM_prime.
struct OuMandelIdentityReport {
  EquivalenceReport conjugated;
  EquivalenceReport printed;
  double generator_defect = 0.0;  // max coefficient |U K_OM U^{-1} - K_OM_prime|
  algebra::FloatQuadOp conjugated_generator;
};

OuMandelIdentityReport ou_mandel_identity(double gamma, int cutoff = 8);

// Fidelity of the normalized coincidence projection with psi_-.
double ou_mandel_fidelity(double gamma, int cutoff = 8);

// ||exp(i gamma G)|0> - |0> - i gamma G|0>|| / gamma^2
double perturbative_residual(const std::string& generator, double gamma, int cutoff = 8);

// U_BS K' U_BS^{-1} at splitter angle theta against the transformed
// generator -1/2 (A_13 - A_24 + B_13 - B_24).
struct BeamSplitterConjugation {
  double theta = 0.0;
  algebra::FloatQuadOp result;
  double defect = 0.0;  // max coefficient error against the target
};

algebra::QuadOp horne_transformed_target();
BeamSplitterConjugation beam_splitter_conjugation(double theta);
// Smallest defect over a uniform theta grid on [0, 4 pi), then golden-section refined.
BeamSplitterConjugation best_beam_splitter_conjugation(int grid = 720);

}  // namespace bellsu11::experiments
