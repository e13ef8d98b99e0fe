#pragma once

// Dyck paths and the bijection between 132-avoiding permutations and Dyck
// paths: reading pi left to right, entry pi_j contributes enough up-steps to
// reach height h_j + 1 and then one down-step, where h_j counts the later
// entries larger than pi_j.

#include <string>
#include <string_view>
#include <vector>

#include "permcheb/permutation.hpp"

namespace permcheb {

class DyckPath {
 public:
  enum class Step : char { Up = 'U', Down = 'D' };

  DyckPath() = default;
  /// Throws InvalidArgument unless the steps form a Dyck path.
  explicit DyckPath(std::vector<Step> steps);
  /// "UUDUDD"; lower-case letters are accepted too.
  static DyckPath parse(std::string_view text);

  const std::vector<Step>& steps() const { return steps_; }
  int length() const { return static_cast<int>(steps_.size()); }
  int semilength() const { return length() / 2; }
  std::string to_string() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<Step> steps_;
};

/// Throws InvalidArgument when pi contains 132.
DyckPath phi(const Permutation& pi);
/// The 132-avoider mapped to d.
Permutation phi_inverse(const DyckPath& d);
int max_height(const DyckPath& d);
/// All Dyck paths of the given semilength in lexicographic order (U < D).
std::vector<DyckPath> all_dyck_paths(int semilength);

}  // namespace permcheb
