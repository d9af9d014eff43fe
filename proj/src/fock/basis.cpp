#include "bellsu11/fock/basis.h"

#include <stdexcept>

namespace bellsu11::fock {

int total_photons(const Occupation& n) { return n[0] + n[1] + n[2] + n[3]; }

std::string to_string(const Occupation& n) {
  return "|" + std::to_string(n[0]) + "," + std::to_string(n[1]) + "," + std::to_string(n[2]) + "," +
         std::to_string(n[3]) + ">";
}

std::size_t fock_dimension(int cutoff) {
  if (cutoff < 0) return 0;
  const std::size_t n = static_cast<std::size_t>(cutoff);
  return (n + 1) * (n + 2) * (n + 3) * (n + 4) / 24;
}

FockBasis::FockBasis(int cutoff) : cutoff_(cutoff) {
  // 8 bits per mode in the hash key
  if (cutoff < 0 || cutoff > 255) throw std::invalid_argument("Fock cutoff must lie in [0, 255]");
  states_.reserve(fock_dimension(cutoff));
  shell_offsets_.push_back(0);
  for (int total = 0; total <= cutoff; ++total) {
    // lexicographic ascending within the shell
    for (int n1 = 0; n1 <= total; ++n1)
      for (int n2 = 0; n1 + n2 <= total; ++n2)
        for (int n3 = 0; n1 + n2 + n3 <= total; ++n3) states_.push_back({n1, n2, n3, total - n1 - n2 - n3});
    shell_offsets_.push_back(states_.size());
  }
  index_.reserve(states_.size());
  for (std::size_t k = 0; k < states_.size(); ++k) index_.emplace(pack(states_[k]), k);
}

std::shared_ptr<const FockBasis> FockBasis::make(int cutoff) { return std::make_shared<const FockBasis>(cutoff); }

std::uint32_t FockBasis::pack(const Occupation& n) {
  return static_cast<std::uint32_t>(n[0]) | static_cast<std::uint32_t>(n[1]) << 8 |
         static_cast<std::uint32_t>(n[2]) << 16 | static_cast<std::uint32_t>(n[3]) << 24;
}

std::optional<std::size_t> FockBasis::index(const Occupation& n) const {
  for (int x : n)
    if (x < 0) return std::nullopt;
  if (total_photons(n) > cutoff_) return std::nullopt;
  auto it = index_.find(pack(n));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FockBasis::shell_begin(int n) const {
  if (n <= 0) return 0;
  if (n > cutoff_) return dim();
  return shell_offsets_[static_cast<std::size_t>(n)];
}

std::size_t FockBasis::shell_end(int n) const {
  if (n < 0) return 0;
  if (n >= cutoff_) return dim();
  return shell_offsets_[static_cast<std::size_t>(n) + 1];
}

}  // namespace bellsu11::fock
