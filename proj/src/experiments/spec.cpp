#include "bellsu11/experiments/spec.h"

#include <cmath>
#include <fstream>
#include <set>

namespace bellsu11::experiments {
namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw SpecError(std::string(what) + " must be a finite number");
}

double number(const nlohmann::json& doc, const char* key, double fallback) {
  if (!doc.contains(key)) return fallback;
  const auto& v = doc.at(key);
  if (!v.is_number()) throw SpecError(std::string("config field '") + key + "' must be a number");
  return v.get<double>();
}

const std::set<std::string> kKnownKeys = {"name",   "stages", "estimator", "gamma",       "angles", "theta_a",
                                          "theta_b", "phi",   "cutoff",    "tol",         "max_leakage"};

}  // namespace

const char* pipeline_name(PipelineKind k) {
  switch (k) {
    case PipelineKind::kIdeal: return "ideal";
    case PipelineKind::kHorne: return "horne";
    case PipelineKind::kOuMandel: return "ou_mandel";
    case PipelineKind::kCustom: return "custom";
  }
  return "?";
}

const char* estimator_name(Estimator e) { return e == Estimator::kRaw ? "raw" : "conditioned"; }

PipelineKind parse_pipeline(const std::string& s) {
  if (s == "ideal") return PipelineKind::kIdeal;
  if (s == "horne") return PipelineKind::kHorne;
  if (s == "ou_mandel") return PipelineKind::kOuMandel;
  if (s == "custom") return PipelineKind::kCustom;
  throw SpecError("unknown experiment '" + s + "' (expected ideal, horne, ou_mandel or custom)");
}

Estimator parse_estimator(const std::string& s) {
  if (s == "raw") return Estimator::kRaw;
  if (s == "conditioned") return Estimator::kConditioned;
  throw SpecError("unknown estimator '" + s + "' (expected raw or conditioned)");
}

std::vector<Stage> ideal_stages(double gamma, double theta_a, double theta_b) {
  return {{"K", gamma, {}}, {"J_a", 2 * theta_a, {}}, {"J_b", 2 * theta_b, {}}};
}

std::vector<Stage> horne_stages(double gamma, double phi) {
  return {{"K_prime", gamma, {}}, {"J_prime", phi, {}}, {"J_BS", kBeamSplitterAngle, {}}};
}

std::vector<Stage> ou_mandel_stages(double gamma, double theta_a, double theta_b) {
  return {{"K_OM", gamma, {}},
          {"J_a", kHalfWaveAngle, {}},
          {"J_BS", kBeamSplitterAngle, {}},
          {"J_a", 2 * theta_a, {}},
          {"J_b", 2 * theta_b, {}}};
}

void ExperimentSpec::refresh_stages() {
  switch (kind) {
    case PipelineKind::kIdeal: stages = ideal_stages(gamma, angles.theta_a, angles.theta_b); break;
    case PipelineKind::kHorne: stages = horne_stages(gamma, phi); break;
    case PipelineKind::kOuMandel: stages = ou_mandel_stages(gamma, angles.theta_a, angles.theta_b); break;
    case PipelineKind::kCustom: break;
  }
}

ExperimentSpec ExperimentSpec::at_setting(double theta_a, double theta_b) const {
  ExperimentSpec s = *this;
  s.angles.theta_a = theta_a;
  s.angles.theta_b = theta_b;
  s.refresh_stages();
  return s;
}

void ExperimentSpec::validate(const algebra::GeneratorCatalog& catalog) const {
  if (cutoff < 2) throw SpecError("cutoff must be at least 2");
  if (cutoff > 60) throw SpecError("cutoff above 60 is not supported");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw SpecError("tol must be positive");
  if (!(max_leakage > 0.0)) throw SpecError("max_leakage must be positive");
  require_finite(gamma, "gamma");
  require_finite(phi, "phi");
  require_finite(angles.theta_a, "theta_a");
  require_finite(angles.theta_b, "theta_b");
  require_finite(angles.theta_a_prime, "theta_a_prime");
  require_finite(angles.theta_b_prime, "theta_b_prime");
  if (stages.empty()) throw SpecError("pipeline has no stages");
  for (const Stage& st : stages) {
    require_finite(st.parameter, "stage parameter");
    if (st.op) {
      if (st.op->hermiticity_defect() > 1e-12) throw SpecError("stage '" + st.generator + "' is not hermitian");
      continue;
    }
    if (!catalog.contains(st.generator)) {
      std::string valid;
      for (const auto& n : catalog.names()) valid += (valid.empty() ? "" : ", ") + n;
      throw SpecError("unknown generator '" + st.generator + "'; valid names: " + valid);
    }
    if (!algebra::is_hermitian(catalog.at(st.generator)))
      throw SpecError("generator '" + st.generator + "' is not hermitian");
  }
}

ExperimentSpec make_ideal(double gamma, double theta_a, double theta_b) {
  ExperimentSpec s;
  s.kind = PipelineKind::kIdeal;
  s.gamma = gamma;
  s.angles.theta_a = theta_a;
  s.angles.theta_b = theta_b;
  s.refresh_stages();
  return s;
}

ExperimentSpec make_horne(double gamma, double phi) {
  ExperimentSpec s;
  s.kind = PipelineKind::kHorne;
  s.gamma = gamma;
  s.phi = phi;
  s.refresh_stages();
  return s;
}

ExperimentSpec make_ou_mandel(double gamma, double theta_a, double theta_b) {
  ExperimentSpec s;
  s.kind = PipelineKind::kOuMandel;
  s.gamma = gamma;
  s.angles.theta_a = theta_a;
  s.angles.theta_b = theta_b;
  s.refresh_stages();
  return s;
}

ExperimentSpec make_custom(std::vector<Stage> stages) {
  ExperimentSpec s;
  s.kind = PipelineKind::kCustom;
  s.stages = std::move(stages);
  return s;
}

ExperimentSpec spec_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw SpecError("experiment config must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (!kKnownKeys.count(key)) throw SpecError("unknown config field '" + key + "'");

  ExperimentSpec s;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw SpecError("config field 'name' must be a string");
    s.kind = parse_pipeline(doc.at("name").get<std::string>());
  }
  if (doc.contains("estimator")) {
    if (!doc.at("estimator").is_string()) throw SpecError("config field 'estimator' must be a string");
    s.estimator = parse_estimator(doc.at("estimator").get<std::string>());
  }
  s.gamma = number(doc, "gamma", s.gamma);
  s.phi = number(doc, "phi", s.phi);
  s.tol = number(doc, "tol", s.tol);
  s.max_leakage = number(doc, "max_leakage", s.max_leakage);
  if (doc.contains("cutoff")) {
    if (!doc.at("cutoff").is_number_integer()) throw SpecError("config field 'cutoff' must be an integer");
    s.cutoff = doc.at("cutoff").get<int>();
  }
  if (doc.contains("angles")) {
    const auto& a = doc.at("angles");
    if (!a.is_object()) throw SpecError("config field 'angles' must be an object");
    s.angles.theta_a = number(a, "theta_a", 0.0);
    s.angles.theta_a_prime = number(a, "theta_a_prime", 0.0);
    s.angles.theta_b = number(a, "theta_b", 0.0);
    s.angles.theta_b_prime = number(a, "theta_b_prime", 0.0);
  }
  s.angles.theta_a = number(doc, "theta_a", s.angles.theta_a);
  s.angles.theta_b = number(doc, "theta_b", s.angles.theta_b);

  if (s.kind == PipelineKind::kCustom) {
    if (!doc.contains("stages") || !doc.at("stages").is_array())
      throw SpecError("custom experiments need a 'stages' array");
    for (const auto& st : doc.at("stages")) {
      if (!st.is_object() || !st.contains("generator") || !st.at("generator").is_string())
        throw SpecError("each stage needs a string 'generator'");
      s.stages.push_back({st.at("generator").get<std::string>(), number(st, "parameter", 0.0), {}});
    }
  } else {
    if (doc.contains("stages")) throw SpecError("'stages' is only allowed for custom experiments");
    s.refresh_stages();
  }
  s.validate();
  return s;
}

ExperimentSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open config file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return spec_from_json(doc);
}

nlohmann::json to_json(const ExperimentSpec& spec) {
  nlohmann::json stages = nlohmann::json::array();
  for (const Stage& st : spec.stages) stages.push_back({{"generator", st.generator}, {"parameter", st.parameter}});
  return {{"name", pipeline_name(spec.kind)},
          {"estimator", estimator_name(spec.estimator)},
          {"gamma", spec.gamma},
          {"phi", spec.phi},
          {"angles",
           {{"theta_a", spec.angles.theta_a},
            {"theta_a_prime", spec.angles.theta_a_prime},
            {"theta_b", spec.angles.theta_b},
            {"theta_b_prime", spec.angles.theta_b_prime}}},
          {"cutoff", spec.cutoff},
          {"tol", spec.tol},
          {"max_leakage", spec.max_leakage},
          {"stages", stages}};
}

}  // namespace bellsu11::experiments
