#pragma once

// Continued fractions for 132-avoiders counted by occurrences of [k]:
//   sum_r G^r_[k](x) z^r = 1/(1 - x z^{d_1}/(1 - x z^{d_2}/(1 - ...))),
// d_j = C(j-1, k-1), and the functional equation F = 1 + x F(xy, yz, z) F
// for the joint distribution of (1), (12) and (123) occurrences.

#include <string>

#include "permcheb/multiseries.hpp"

namespace permcheb {

struct CFSpec {
  int k = 3;
  int depth = 0;
  int x_order = 0;
  int z_order = 0;

  /// Throws InvalidArgument unless k >= 1, orders >= 0 and depth >= x_order.
  void validate() const;
};

/// The truncated continued fraction evaluated from the bottom level up.
BiSeries cf_biseries(const CFSpec& spec);

/// Fixed point of F = 1 + x F(xy, yz, z) F through x^N with y and z capped at
/// C(N,2) and C(N,3). Requires 0 <= N <= 10.
TriSeries rwz_triseries(int N);

/// "n,r,count" rows for every stored coefficient.
std::string biseries_csv(const BiSeries& s);
/// {"x_order":..,"z_order":..,"rows":[[c(0,0),c(0,1),..],..]}
std::string biseries_json(const BiSeries& s);

}  // namespace permcheb
