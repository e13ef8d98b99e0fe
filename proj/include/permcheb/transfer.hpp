#pragma once

// Transfer matrices: walk generating functions as determinant ratios,
// generating trees given by succession rules, and the graphs used for
// pattern-avoiding permutations and for Dyck paths in a strip.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permcheb/exact.hpp"

namespace permcheb {

/// A rooted labelled tree described by its root label and, for every label,
/// the ordered list of child labels.
struct GeneratingTree {
  std::string root;
  std::vector<std::pair<std::string, std::vector<std::string>>> rules;

  /// Throws InvalidArgument when a label has no rule or has two.
  void validate() const;
  const std::vector<std::string>& children(const std::string& label) const;

  /// Rule-file syntax: "root: 2", then one "2 -> 2 3" line per label. Blank
  /// lines and lines starting with '#' are ignored.
  static GeneratingTree parse(std::string_view text);
  std::string to_text() const;
};

/// Weighted digraph: matrix[i][j] is the number of edges from i to j.
struct TransferSystem {
  std::vector<std::string> labels;
  std::vector<std::vector<long>> matrix;
  int start = 0;

  int size() const { return static_cast<int>(labels.size()); }
  /// Throws InvalidArgument for an unknown label.
  int index_of(std::string_view label) const;
  void validate() const;
};

/// det(I - xA).
Poly transfer_determinant(const TransferSystem& sys);
/// Generating function of walks from vertex r to vertex s, as a cofactor of
/// I - xA over det(I - xA).
RatFun walk_gf(const TransferSystem& sys, int r, int s);

/// table[len][v] = number of walks of length len from `from` ending at v.
std::vector<std::vector<Integer>> series_of_walks(const TransferSystem& sys, int from, int length_max);
/// Walks of length 0..length_max from `from` with any endpoint.
Series open_walk_series(const TransferSystem& sys, int from, int length_max);
/// Closed walks of length 0..length_max at v.
Series closed_walk_series(const TransferSystem& sys, int v, int length_max);

/// Labels 2..k-1 with rules (l) -> (2)...(l)(l+1) for l < k-1 and
/// (k-1) -> (2)...(k-2)(k-1)(k-1). Requires k >= 3.
GeneratingTree Ak_tree(int k);
TransferSystem build_Ak(int k);
/// (2) -> (2)(2).
GeneratingTree binary_tree();
/// (1) -> (2), (2) -> (1)(2), rooted at 1.
GeneratingTree fibonacci_tree();

TransferSystem tree_to_system(const GeneratingTree& gt);
/// Number of nodes at depth 0..n_max.
Series level_counts(const GeneratingTree& gt, int n_max);

/// Path graph on heights 0..height_cap, started at 0.
TransferSystem dyck_strip_system(int height_cap);

}  // namespace permcheb
