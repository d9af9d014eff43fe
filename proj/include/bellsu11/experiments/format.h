#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace bellsu11::experiments {

inline constexpr int kOutputDigits = 12;

// Magnitudes below this are round-off and print as 0.
inline constexpr double kNoiseFloor = 1e-15;

// "%.12g"; -0 and magnitudes below kNoiseFloor are written as 0.
std::string format_number(double x);
// x rounded to 12 significant digits, so JSON dumps are stable.
double round_significant(double x);
// Rounds every floating-point number in the document, recursively.
nlohmann::json round_numbers(const nlohmann::json& doc);

}  // namespace bellsu11::experiments
