#pragma once

// Closed-form generating functions for restricted permutations. Every
// formula is evaluated in the t-extension and reduced to a canonical RatFun.
// Naming: F = avoidance, G = exactly r occurrences inside an avoidance class,
// H = exactly one 132 while avoiding tau, Phi = exactly one 132 and exactly
// one tau.

#include <optional>
#include <string>
#include <vector>

#include "permcheb/exact.hpp"
#include "permcheb/permutation.hpp"

namespace permcheb {

enum class Base { P132, P321 };

Base parse_base(std::string_view text);
std::string to_string(Base b);
const Permutation& base_pattern(Base b);

/// Structural reading of a pattern, whatever constructor produced it.
struct PatternShape {
  enum class Kind { Identity, TwoLayered, ThreeLayered, Wedge, Other };
  Kind kind = Kind::Other;
  int k = 0;
  int m = 0;   // two- and three-layered
  int m2 = 0;  // three-layered
};
PatternShape shape_of(const Permutation& p);

/// Avoiding base and tau simultaneously.
RatFun F_pair(Base base, const PatternSpec& tau);
/// Avoiding 132 and [k, m1, m2].
RatFun F_three_layered(int k, int m1, int m2);
/// Avoiding 132, [k, m] and [l]; requires k - m >= m >= 1.
RatFun F_triple(int k, int m, int l);

/// One formula evaluated on one parameter set; route names are stable ids.
struct Route {
  std::string name;
  RatFun value;
};

/// Exactly r occurrences of tau among base-avoiders, using the most specific
/// formula whose stated range covers (tau, r).
RatFun G_exact(Base base, const PatternSpec& tau, int r);
/// Every formula applicable to (base, tau, r), most specific first. Empty when
/// nothing applies.
std::vector<Route> G_routes(Base base, const PatternSpec& tau, int r);

// Individual formulas behind G_exact.
RatFun G_identity_single(int k);              // r = 1
RatFun G_identity_bounded(int k, int r);      // 1 <= r <= k
RatFun G_identity_extended(int k, int r);     // 1 <= r <= k(k+3)/2
RatFun G_identity_general(int k, int r);      // k >= 2, r >= 1
RatFun G_k1_single(int k);                    // [k,1], r = 1
RatFun G_k1_divisor_sum(int k, int r);        // [k,1], 1 <= r <= k-1, k >= 3
RatFun G_two_layered_single(int k, int m);    // [k,m], r = 1, 2m <= k (routes reflect m)
RatFun G_321_k1(int k, int r);                // 321-avoiders, [k,1], 1 <= r <= k

/// Avoiding 132 and [k,m] with exactly one occurrence of [l]; k - m >= m >= 1.
RatFun G_triple(int k, int m, int l);

/// Exactly one 132 and no tau.
RatFun H(const PatternSpec& tau);
/// Exactly one 132 and exactly one tau.
RatFun Phi(const PatternSpec& tau);

/// Avoiding every pattern of L_p and [k]; p >= 4, k >= p - 2. Uses N(a) over
/// S_{p-2} with R indices lowered by the running sum of a.
RatFun F_Lp(int p, int k);
/// Same sum with the index k - j - a_j applied term by term.
RatFun F_Lp_literal(int p, int k);
/// 1 + x + x^2 R_k R_{k-1} (R_{k-1} + R_{k-2}); k >= 2.
RatFun F_L4_identity(int k);
/// Avoiding L_4 and [k,m], 1 <= m <= k-1.
RatFun F_L4_two_layered(int k, int m);

struct AIdentityReport {
  bool holds = false;
  int order = 0;
  /// First coefficient of the left side that does not vanish, if any.
  std::optional<int> first_failure;
  Rational failing_value;
};
/// Alternating Catalan identity for T = {321, [k,m]} checked through x^N on
/// oracle counts.
AIdentityReport check_A_identity(int k, int m, int N);

}  // namespace permcheb
