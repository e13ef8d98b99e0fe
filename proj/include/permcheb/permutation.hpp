#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace permcheb {

/// A rearrangement of 1..n stored 0-indexed; n = 0 is allowed.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless values is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int n);
  static Permutation decreasing(int n);
  /// Compact digit form ("132") or comma form ("10,3,1,2").
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  int operator[](size_t i) const { return v_[i]; }
  std::span<const int> values() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  /// Digits when n <= 9, otherwise comma separated; "" for the empty one.
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : v_(std::move(values)) {}
  friend Permutation standardize(std::span<const int> word);

  std::vector<int> v_;
};

/// Order-isomorphic flattening of a word of distinct integers.
Permutation standardize(std::span<const int> word);

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);

/// Number of occurrences of pattern in the word. The empty pattern occurs once.
std::uint64_t count_occurrences(std::span<const int> word, const Permutation& pattern);
inline std::uint64_t count_occurrences(const Permutation& subject, const Permutation& pattern) {
  return count_occurrences(subject.values(), pattern);
}
/// Occurrences whose last entry is the last letter of word (word nonempty,
/// pattern nonempty).
std::uint64_t count_occurrences_ending_last(std::span<const int> word, const Permutation& pattern);
inline bool contains(const Permutation& subject, const Permutation& pattern) {
  return count_occurrences(subject, pattern) > 0;
}

int longest_increasing_subsequence(std::span<const int> word);

/// (1-based position, value) of every right-to-left maximum, left to right.
std::vector<std::pair<int, int>> rtl_maxima(const Permutation& p);

/// Prefixes and suffixes of a 132-avoiding pattern split at its right-to-left
/// maxima m_0 > ... > m_r. prefixes[i + 1] holds pi^i for i = -1..r and
/// suffixes[i] holds sigma^i for i = 0..r+1, all standardized.
struct PrefixSuffix {
  int r = 0;
  std::vector<int> maxima;
  std::vector<Permutation> prefixes;
  std::vector<Permutation> suffixes;

  const Permutation& prefix(int i) const { return prefixes.at(static_cast<size_t>(i + 1)); }
  const Permutation& suffix(int i) const { return suffixes.at(static_cast<size_t>(i)); }
};
/// Throws InvalidArgument when the pattern contains 132 or is empty.
PrefixSuffix prefix_suffix_decomposition(const Permutation& p);

/// a_j = 1 iff the last j+1 entries have a longer increasing subsequence than
/// the last j entries, for j = 1..n-1.
std::vector<int> a_sequence(const Permutation& p);

/// Membership in L_p: patterns of the form w1 1 w2 2 w3 with w2 nonempty.
bool is_Lp_member(const Permutation& p, int len);
std::vector<Permutation> Lp_set(int len);

/// Blocks of consecutive increasing values, blocks decreasing (e.g. 45312).
bool is_layered(const Permutation& p);
/// tau^1 rho^1 ... tau^r rho^r where the tau^i are nonempty and together
/// read s+1..k, and each rho^i is one whole layer of a layered arrangement
/// of 1..s (rho^r may be empty).
bool is_wedge(const Permutation& p);

/// The eight symmetries r^a c^b i^d; index bits (a, b, d) = (g&1, g&2, g&4).
Permutation apply_symmetry(int g, const Permutation& p);
/// Orbit of a pattern list under the symmetry group; each image is sorted.
std::set<std::vector<Permutation>> symmetry_orbit(const std::vector<Permutation>& patterns);

// ---------------------------------------------------------------- patterns

namespace pattern {
struct Explicit {
  Permutation perm;
};
struct Identity {
  int k;
};
struct TwoLayered {
  int k;
  int m;
};
/// Bounds m_0 > m_1 > ... > m_r > 0.
struct Layered {
  std::vector<int> bounds;
};
/// One wedge segment: an increasing run of top values followed by one whole
/// layer of the bottom part. Only the last segment may have layer = 0.
struct WedgeSegment {
  int run;
  int layer;
};
struct Wedge {
  std::vector<WedgeSegment> segments;
};
}  // namespace pattern

class PatternSpec {
 public:
  using Variant = std::variant<pattern::Explicit, pattern::Identity, pattern::TwoLayered, pattern::Layered, pattern::Wedge>;

  PatternSpec(Variant v);  // NOLINT(google-explicit-constructor)
  PatternSpec(Permutation p) : PatternSpec(pattern::Explicit{std::move(p)}) {}  // NOLINT

  static PatternSpec identity(int k) { return Variant(pattern::Identity{k}); }
  static PatternSpec two_layered(int k, int m) { return Variant(pattern::TwoLayered{k, m}); }
  static PatternSpec layered(std::vector<int> bounds) { return Variant(pattern::Layered{std::move(bounds)}); }
  static PatternSpec wedge(std::vector<pattern::WedgeSegment> segments) {
    return Variant(pattern::Wedge{std::move(segments)});
  }

  const Variant& variant() const { return v_; }
  const Permutation& materialize() const { return perm_; }
  int length() const { return perm_.size(); }
  /// Literal form: "132", "id:4", "tl:4,2", "layered:4,2,1".
  std::string to_literal() const;

 private:
  Variant v_;
  Permutation perm_;
};

// ---------------------------------------------------------------- constraints

class Quantifier {
 public:
  enum class Kind { Exactly, AtLeast };

  static Quantifier exactly(int r);
  static Quantifier at_least(int r);
  static Quantifier avoid() { return exactly(0); }

  Kind kind() const { return kind_; }
  int count() const { return r_; }
  bool holds(std::uint64_t occurrences) const;
  /// True once a partial count can no longer lead to a satisfying total
  /// (occurrence counts only grow as a word is extended).
  bool exceeded(std::uint64_t occurrences) const {
    return kind_ == Kind::Exactly && occurrences > static_cast<std::uint64_t>(r_);
  }
  std::string to_literal() const;

  friend bool operator==(const Quantifier&, const Quantifier&) = default;

 private:
  Quantifier(Kind k, int r) : kind_(k), r_(r) {}
  Kind kind_;
  int r_;
};

struct ConstraintItem {
  PatternSpec pattern;
  Quantifier quantifier;
};

class ConstraintSet {
 public:
  ConstraintSet() = default;
  ConstraintSet(std::initializer_list<ConstraintItem> items);

  /// Throws InvalidArgument when the pattern repeats an earlier one.
  ConstraintSet& add(PatternSpec pattern, Quantifier q);
  ConstraintSet& avoid(PatternSpec pattern) { return add(std::move(pattern), Quantifier::avoid()); }
  ConstraintSet& exactly(int r, PatternSpec pattern) { return add(std::move(pattern), Quantifier::exactly(r)); }

  const std::vector<ConstraintItem>& items() const { return items_; }
  bool empty() const { return items_.empty(); }
  /// Same quantifiers with the symmetry applied to every pattern.
  ConstraintSet transformed(int g) const;
  /// Space-separated literals: "avoid:132 exactly:1:123".
  std::string to_literal() const;

 private:
  std::vector<ConstraintItem> items_;
};

bool satisfies(const Permutation& subject, const ConstraintSet& cs);

}  // namespace permcheb
