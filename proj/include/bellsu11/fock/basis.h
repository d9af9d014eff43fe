#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace bellsu11::fock {

inline constexpr int kModes = 4;
using Occupation = std::array<int, kModes>;

int total_photons(const Occupation& n);
std::string to_string(const Occupation& n);  // "|1,0,0,1>"

// All occupations of four modes with total photon number <= cutoff, ordered by
// total photon number and then lexicographically.
class FockBasis {
 public:
  explicit FockBasis(int cutoff);

  static std::shared_ptr<const FockBasis> make(int cutoff);

  int cutoff() const { return cutoff_; }
  std::size_t dim() const { return states_.size(); }

  const Occupation& occupation(std::size_t index) const { return states_.at(index); }
  // nullopt if some n_i < 0 or the total exceeds the cutoff
  std::optional<std::size_t> index(const Occupation& n) const;

  // [shell_begin(n), shell_end(n)) holds the states with exactly n photons.
  std::size_t shell_begin(int n) const;
  std::size_t shell_end(int n) const;

  const std::vector<Occupation>& states() const { return states_; }

 private:
  static std::uint32_t pack(const Occupation& n);

  int cutoff_;
  std::vector<Occupation> states_;
  std::vector<std::size_t> shell_offsets_;  // size cutoff + 2
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

// C(N+4, 4)
std::size_t fock_dimension(int cutoff);

}  // namespace bellsu11::fock
