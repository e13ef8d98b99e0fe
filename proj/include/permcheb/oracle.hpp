#pragma once

// Brute-force ground truth: lexicographic generation of S_n filtered by a
// constraint set. Partial permutations are dropped as soon as an
// "exactly r" item is exceeded, since occurrence counts only grow.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "permcheb/exact.hpp"
#include "permcheb/permutation.hpp"

namespace permcheb {

/// Largest n the exhaustive routines accept. PERMCHEB_MAX_N raises both caps.
struct Limits {
  int max_count_n = 12;
  int max_list_n = 10;

  static Limits from_env();
  static Limits unlimited_to(int n) { return Limits{n, n}; }
};

struct CountTable {
  ConstraintSet constraint;
  std::vector<std::uint64_t> counts;  // counts[n] for n = 0..N

  Series series() const { return series_from_counts(counts); }
  /// {"constraint": "<literal>", "counts": [...]}
  std::string to_json() const;
  /// "n,count" header then one row per n.
  std::string to_csv() const;
};

/// counts[n] = #{pi in S_n : satisfies(pi, cs)} for n = 0..N.
CountTable count_upto(const ConstraintSet& cs, int N, const Limits& limits = Limits::from_env());

/// Members of S_n satisfying cs, in lexicographic order.
std::vector<Permutation> list_matching(const ConstraintSet& cs, int n, const Limits& limits = Limits::from_env());

/// Calls visit for every member of S_n satisfying cs, in lexicographic order.
void for_each_matching(const ConstraintSet& cs, int n, const std::function<void(const Permutation&)>& visit,
                       const Limits& limits = Limits::from_env());

/// table[r][n] = #{pi in S_n : satisfies(pi, base), tau occurs exactly r times}
/// for r = 0..r_max and n = 0..N.
std::vector<std::vector<std::uint64_t>> occurrence_profile(const ConstraintSet& base, const Permutation& tau, int r_max,
                                                           int N, const Limits& limits = Limits::from_env());

enum class NofAReading {
  /// Bit sequences of length p-3 over S_{p-2}.
  Consistent,
  /// Bit sequences of length p-1 over S_p, as the definition is worded.
  Literal,
};

/// N(a): number of permutations with a given a-sequence. Requires p >= 4.
std::map<std::vector<int>, std::uint64_t> count_N_of_a(int p, NofAReading reading = NofAReading::Consistent);

}  // namespace permcheb
