#pragma once

// Block decompositions around the largest entries, and the generic
// recursion for the generating function of S_n(132, tau).

#include <map>
#include <string>
#include <vector>

#include "permcheb/exact.hpp"
#include "permcheb/permutation.hpp"

namespace permcheb {

/// A contiguous piece of the decomposed permutation and the value interval
/// [lo, hi] it must occupy (lo > hi for an empty interval).
struct BlockPart {
  std::string name;
  std::vector<int> entries;
  int lo = 1;
  int hi = 0;
};

struct BlockDecomposition {
  enum class Kind { AvoiderSplit, ExactlyOnceI, ExactlyOnceII, ExactlyOnceIII, L4A, L4B };

  Kind kind = Kind::AvoiderSplit;
  int n = 0;
  std::vector<BlockPart> parts;
  /// Single entries placed between parts, in left-to-right order.
  std::vector<int> pivots;
  /// Left-to-right layout: i >= 0 is parts[i], i < 0 is pivots[-i-1].
  std::vector<int> layout;
  /// Named integers of the decomposition (t, u, r, s).
  std::map<std::string, int> params;

  std::vector<int> reassemble() const;
  /// "avoider", "once(i)", "once(ii)", "once(iii)", "L4(n-1 first)", "L4(n first)".
  std::string kind_name() const;
};

/// alpha = (alpha', n, alpha'') with alpha' above alpha''. Requires alpha to
/// avoid 132 and be nonempty.
BlockDecomposition decompose_132_avoider(const Permutation& alpha);
/// One of the three forms of a permutation with exactly one 132.
BlockDecomposition classify_exactly_once(const Permutation& alpha);
/// alpha = alpha_1, {n-1, n}, alpha_2, {n, n-1}, alpha_3 for alpha avoiding
/// L_4 with n >= 2.
BlockDecomposition l4_decompose(const Permutation& alpha);

/// Generating function of S_n(132, tau) from the prefix/suffix recursion,
/// memoized on standardized patterns. Requires tau to avoid 132.
RatFun F_recursive(const Permutation& tau);

}  // namespace permcheb
