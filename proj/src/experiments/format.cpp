#include "bellsu11/experiments/format.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace bellsu11::experiments {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::abs(x) < kNoiseFloor) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, x);
  return buf;
}

double round_significant(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

nlohmann::json round_numbers(const nlohmann::json& doc) {
  if (doc.is_number_float()) return round_significant(doc.get<double>());
  if (doc.is_array() || doc.is_object()) {
    nlohmann::json out = doc;
    for (auto it = out.begin(); it != out.end(); ++it) *it = round_numbers(*it);
    return out;
  }
  return doc;
}

}  // namespace bellsu11::experiments
