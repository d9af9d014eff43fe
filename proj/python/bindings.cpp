// Thin layer over the experiments API. Specs and reports cross the boundary
// as JSON text; the package wrapper turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "bellsu11/algebra/verify.h"
#include "bellsu11/experiments/checks.h"
#include "bellsu11/experiments/chsh.h"
#include "bellsu11/experiments/format.h"
#include "bellsu11/experiments/scan.h"
#include "bellsu11/fock/observables.h"

namespace py = pybind11;
using nlohmann::json;
using namespace bellsu11;
using namespace bellsu11::experiments;

namespace {

ExperimentSpec parse(const std::string& spec) {
  json doc;
  try {
    doc = json::parse(spec);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("spec is not valid JSON: ") + e.what());
  }
  return spec_from_json(doc);
}

std::string dump(const json& doc) { return round_numbers(doc).dump(); }

std::string run_json(const std::string& spec_text) {
  const ExperimentSpec spec = parse(spec_text);
  const RunResult res = run(spec);
  CorrelationReport raw = correlation_raw(res.state), cond = correlation_conditioned(res.state);
  for (auto* r : {&raw, &cond}) {
    r->gamma = spec.gamma;
    r->delta = spec.delta();
  }
  return dump({{"spec", to_json(spec)},
               {"raw", to_json(raw)},
               {"conditioned", to_json(cond)},
               {"leakage", res.leakage},
               {"norm_drift", res.norm_drift},
               {"error_bound", res.error_bound},
               {"state", fock::to_json(res.state)}});
}

std::string chsh_json(const std::string& spec_text, bool maximizer) {
  ExperimentSpec spec = parse(spec_text);
  if (maximizer) spec.angles = chsh_maximizer_angles();
  json doc = to_json(chsh(spec));
  doc["spec"] = to_json(spec);
  return dump(doc);
}

std::string scan_json(const std::string& spec_text, const std::string& axis, const std::vector<double>& grid,
                      unsigned threads) {
  return dump(to_json(scan(parse(spec_text), parse_axis(axis), grid, threads)));
}

std::string convergence_json(const std::string& spec_text, const std::vector<int>& cutoffs) {
  return dump(to_json(convergence(parse(spec_text), cutoffs)));
}

std::string verify_json() {
  const auto sc = algebra::verify_structure_constants();
  int closed = 0, total = 0;
  for (const auto& c : algebra::standard_closure_checks()) {
    ++total;
    if (algebra::run_closure_check(c).closed) ++closed;
  }
  int holding = 0, identities = 0;
  for (const auto& i : algebra::standard_identities()) {
    ++identities;
    if (i.holds()) ++holding;
  }
  return dump({{"pairs_checked", sc.pairs_checked},
               {"mismatches", sc.mismatches.size()},
               {"closures_passed", closed},
               {"closures", total},
               {"identities_holding", holding},
               {"identities", identities},
               {"ok", sc.ok() && closed == total && holding == identities}});
}

}  // namespace

PYBIND11_MODULE(_bellsu11, m) {
  m.doc() = "native core of bellsu11";

  static py::exception<fock::NonConvergenceError> non_convergence(m, "NonConvergenceError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const fock::NonConvergenceError& e) {
      py::set_error(non_convergence, e.what());
    } catch (const algebra::UnknownGeneratorError& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  m.def("generator_names", [] { return algebra::GeneratorCatalog::standard().names(); });
  m.def("generator", [](const std::string& name) { return algebra::GeneratorCatalog::standard().at(name).to_string(); });
  m.def("catalog_json", [] { return to_json(algebra::GeneratorCatalog::standard()).dump(); });
  m.def("verify_algebra_json", &verify_json);
  m.def("default_spec_json", [](const std::string& name) {
    json doc = to_json(spec_from_json(json{{"name", name}}));
    doc.erase("stages");  // derived from the other fields; only custom specs take them as input
    return doc.dump();
  });
  m.def("run_json", &run_json, py::arg("spec"));
  m.def("chsh_json", &chsh_json, py::arg("spec"), py::arg("maximizer"));
  m.def("scan_json", &scan_json, py::arg("spec"), py::arg("axis"), py::arg("grid"), py::arg("threads") = 0u);
  m.def("convergence_json", &convergence_json, py::arg("spec"), py::arg("cutoffs"));
  m.def("linspace", &linspace, py::arg("start"), py::arg("stop"), py::arg("points"));
  m.def("ou_mandel_fidelity", &ou_mandel_fidelity, py::arg("gamma"), py::arg("cutoff") = 8);
}
