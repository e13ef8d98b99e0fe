#include "permcheb/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "permcheb/error.hpp"

namespace permcheb {

Permutation::Permutation(std::vector<int> values) : v_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : v_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw InvalidArgument("identity: negative length");
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::decreasing(int n) {
  Permutation p = identity(n);
  std::reverse(p.v_.begin(), p.v_.end());
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  if (text.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string_view tok = text.substr(pos, next - pos);
      if (tok.empty()) throw InvalidArgument("empty entry in permutation literal");
      int value = 0;
      for (char ch : tok) {
        if (ch < '0' || ch > '9') throw InvalidArgument("bad character in permutation literal");
        value = value * 10 + (ch - '0');
        if (value > 1000000) throw InvalidArgument("permutation entry too large");
      }
      v.push_back(value);
      pos = next + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw InvalidArgument("bad character in permutation literal");
      v.push_back(ch - '0');
    }
  }
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string s;
  const bool compact = size() <= 9;
  for (size_t i = 0; i < v_.size(); ++i) {
    if (!compact && i) s += ',';
    s += std::to_string(v_[i]);
  }
  return s;
}

Permutation standardize(std::span<const int> word) {
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return word[static_cast<size_t>(a)] < word[static_cast<size_t>(b)]; });
  std::vector<int> out(word.size());
  for (size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && word[static_cast<size_t>(order[rank])] == word[static_cast<size_t>(order[rank - 1])])
      throw InvalidArgument("standardize: repeated entry");
    out[static_cast<size_t>(order[rank])] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.begin(), p.end());
  std::reverse(v.begin(), v.end());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& p) {
  std::vector<int> v(p.begin(), p.end());
  for (int& x : v) x = p.size() + 1 - x;
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> v(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) v[static_cast<size_t>(p[static_cast<size_t>(i)] - 1)] = i + 1;
  return Permutation(std::move(v));
}

namespace {

// Depth-first search over increasing index tuples, pruned on partial
// order-isomorphism: the candidate for pattern slot d must lie strictly
// between the largest chosen value that the pattern puts below slot d and
// the smallest chosen value it puts above.
class OccurrenceCounter {
 public:
  OccurrenceCounter(std::span<const int> word, const Permutation& pattern, bool fixed_last)
      : w_(word), tau_(pattern), k_(pattern.size()), fixed_last_(fixed_last), chosen_(static_cast<size_t>(k_)) {}

  std::uint64_t run() {
    count_ = 0;
    search(0, 0);
    return count_;
  }

 private:
  void search(int depth, int start) {
    const int n = static_cast<int>(w_.size());
    int lo = 0;
    int hi = INT32_MAX;
    const int target = tau_[static_cast<size_t>(depth)];
    for (int j = 0; j < depth; ++j) {
      const int val = w_[static_cast<size_t>(chosen_[static_cast<size_t>(j)])];
      if (tau_[static_cast<size_t>(j)] < target) lo = std::max(lo, val);
      else hi = std::min(hi, val);
    }
    const bool last_slot = depth == k_ - 1;
    int first = start;
    const int stop = n - (k_ - depth);
    if (fixed_last_ && last_slot) first = n - 1;
    for (int i = first; i <= stop; ++i) {
      const int v = w_[static_cast<size_t>(i)];
      if (v <= lo || v >= hi) continue;
      if (last_slot) {
        ++count_;
        continue;
      }
      chosen_[static_cast<size_t>(depth)] = i;
      search(depth + 1, i + 1);
    }
  }

  std::span<const int> w_;
  const Permutation& tau_;
  int k_;
  bool fixed_last_;
  std::vector<int> chosen_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t count_occurrences(std::span<const int> word, const Permutation& pattern) {
  if (pattern.empty()) return 1;
  if (pattern.size() > static_cast<int>(word.size())) return 0;
  return OccurrenceCounter(word, pattern, false).run();
}

std::uint64_t count_occurrences_ending_last(std::span<const int> word, const Permutation& pattern) {
  if (pattern.empty() || word.empty()) throw InvalidArgument("count_occurrences_ending_last: empty input");
  if (pattern.size() > static_cast<int>(word.size())) return 0;
  return OccurrenceCounter(word, pattern, true).run();
}

int longest_increasing_subsequence(std::span<const int> word) {
  std::vector<int> tails;
  for (int v : word) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) tails.push_back(v);
    else *it = v;
  }
  return static_cast<int>(tails.size());
}

std::vector<std::pair<int, int>> rtl_maxima(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  int best = 0;
  for (int i = p.size() - 1; i >= 0; --i) {
    if (p[static_cast<size_t>(i)] > best) {
      best = p[static_cast<size_t>(i)];
      out.emplace_back(i + 1, best);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

PrefixSuffix prefix_suffix_decomposition(const Permutation& p) {
  if (p.empty()) throw InvalidArgument("prefix_suffix_decomposition: empty pattern");
  if (contains(p, Permutation{1, 3, 2})) throw InvalidArgument("prefix_suffix_decomposition: pattern contains 132");
  const auto maxima = rtl_maxima(p);
  PrefixSuffix out;
  out.r = static_cast<int>(maxima.size()) - 1;
  for (const auto& [pos, value] : maxima) out.maxima.push_back(value);

  auto slice = [&](int from, int to) {  // 0-based [from, to)
    return standardize(p.values().subspan(static_cast<size_t>(from), static_cast<size_t>(to - from)));
  };
  // pi^-1 = empty, pi^0 = tau^0, pi^i = (tau^0, m_0, ..., tau^i, m_i).
  out.prefixes.push_back(Permutation{});
  out.prefixes.push_back(slice(0, maxima[0].first - 1));
  for (int i = 1; i <= out.r; ++i) out.prefixes.push_back(slice(0, maxima[static_cast<size_t>(i)].first));
  // sigma^i = (tau^i, m_i, ..., tau^r, m_r) starts right after m_{i-1}.
  for (int i = 0; i <= out.r; ++i) {
    const int start = i == 0 ? 0 : maxima[static_cast<size_t>(i - 1)].first;
    out.suffixes.push_back(slice(start, p.size()));
  }
  out.suffixes.push_back(Permutation{});
  return out;
}

std::vector<int> a_sequence(const Permutation& p) {
  const int n = p.size();
  if (n < 1) throw InvalidArgument("a_sequence: empty permutation");
  std::vector<int> a;
  const auto v = p.values();
  int prev = 1;  // LIS of the last entry alone
  for (int j = 1; j <= n - 1; ++j) {
    const int cur = longest_increasing_subsequence(v.subspan(static_cast<size_t>(n - j - 1)));
    a.push_back(cur > prev ? 1 : 0);
    prev = cur;
  }
  return a;
}

bool is_Lp_member(const Permutation& p, int len) {
  if (p.size() != len || len < 3) return false;
  int pos1 = -1, pos2 = -1;
  for (int i = 0; i < len; ++i) {
    if (p[static_cast<size_t>(i)] == 1) pos1 = i;
    if (p[static_cast<size_t>(i)] == 2) pos2 = i;
  }
  return pos1 + 1 < pos2;
}

std::vector<Permutation> Lp_set(int len) {
  if (len < 3) throw InvalidArgument("Lp_set: length must be at least 3");
  std::vector<int> v(static_cast<size_t>(len));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation p(v);
    if (is_Lp_member(p, len)) out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace {

bool layered_word(const std::vector<int>& w, int n) {
  // w holds a rearrangement of 1..n.
  int expected_top = n;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j + 1 < w.size() && w[j + 1] == w[j] + 1) ++j;
    if (w[j] != expected_top) return false;
    expected_top = w[i] - 1;
    i = j + 1;
  }
  return expected_top == 0;
}

}  // namespace

bool is_layered(const Permutation& p) { return layered_word(std::vector<int>(p.begin(), p.end()), p.size()); }

bool is_wedge(const Permutation& p) {
  const int k = p.size();
  if (k == 0) return false;
  // The top values s+1..k appear in order; every maximal stretch of bottom
  // values between them is a single layer, layers descending down to 1.
  for (int s = 0; s < k; ++s) {
    if (p[0] <= s) continue;
    int next_top = s + 1;
    int layer_top = s;
    bool ok = true;
    for (int i = 0; ok && i < k;) {
      const int v = p[static_cast<size_t>(i)];
      if (v > s) {
        ok = v == next_top++;
        ++i;
        continue;
      }
      int j = i;
      while (j + 1 < k && p[static_cast<size_t>(j) + 1] == p[static_cast<size_t>(j)] + 1 && p[static_cast<size_t>(j) + 1] <= s) ++j;
      ok = p[static_cast<size_t>(j)] == layer_top && (j + 1 == k || p[static_cast<size_t>(j) + 1] > s);
      layer_top = v - 1;
      i = j + 1;
    }
    if (ok && layer_top == 0) return true;
  }
  return false;
}

Permutation apply_symmetry(int g, const Permutation& p) {
  if (g < 0 || g > 7) throw InvalidArgument("apply_symmetry: group index out of range");
  Permutation q = p;
  if (g & 4) q = inverse(q);
  if (g & 2) q = complement(q);
  if (g & 1) q = reverse(q);
  return q;
}

std::set<std::vector<Permutation>> symmetry_orbit(const std::vector<Permutation>& patterns) {
  std::set<std::vector<Permutation>> orbit;
  for (int g = 0; g < 8; ++g) {
    std::vector<Permutation> image;
    image.reserve(patterns.size());
    for (const auto& p : patterns) image.push_back(apply_symmetry(g, p));
    std::sort(image.begin(), image.end());
    orbit.insert(std::move(image));
  }
  return orbit;
}

// ---------------------------------------------------------------- PatternSpec

namespace {

Permutation materialize_variant(const PatternSpec::Variant& v) {
  struct Visitor {
    Permutation operator()(const pattern::Explicit& e) const { return e.perm; }
    Permutation operator()(const pattern::Identity& id) const {
      if (id.k < 0) throw InvalidArgument("identity pattern: negative length");
      return Permutation::identity(id.k);
    }
    Permutation operator()(const pattern::TwoLayered& t) const {
      if (t.m < 1 || t.m > t.k - 1) throw InvalidArgument("two-layered pattern [k,m] needs 1 <= m <= k-1");
      return (*this)(pattern::Layered{{t.k, t.m}});
    }
    Permutation operator()(const pattern::Layered& l) const {
      if (l.bounds.empty()) throw InvalidArgument("layered pattern needs at least one bound");
      for (size_t i = 0; i < l.bounds.size(); ++i) {
        if (l.bounds[i] <= 0 || (i > 0 && l.bounds[i] >= l.bounds[i - 1]))
          throw InvalidArgument("layered bounds must be strictly decreasing and positive");
      }
      std::vector<int> out;
      for (size_t i = 0; i < l.bounds.size(); ++i) {
        const int lo = i + 1 < l.bounds.size() ? l.bounds[i + 1] : 0;
        for (int v = lo + 1; v <= l.bounds[i]; ++v) out.push_back(v);
      }
      return Permutation(std::move(out));
    }
    Permutation operator()(const pattern::Wedge& w) const {
      if (w.segments.empty()) throw InvalidArgument("wedge pattern needs at least one segment");
      int s = 0;
      for (size_t i = 0; i < w.segments.size(); ++i) {
        const auto& seg = w.segments[i];
        if (seg.run < 1) throw InvalidArgument("wedge segment runs must be nonempty");
        if (seg.layer < 0 || (seg.layer == 0 && i + 1 < w.segments.size()))
          throw InvalidArgument("only the last wedge layer may be empty");
        s += seg.layer;
      }
      std::vector<int> out;
      int top = s + 1;
      int layer_top = s;
      for (const auto& seg : w.segments) {
        for (int i = 0; i < seg.run; ++i) out.push_back(top++);
        for (int v = layer_top - seg.layer + 1; v <= layer_top; ++v) out.push_back(v);
        layer_top -= seg.layer;
      }
      return Permutation(std::move(out));
    }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace

PatternSpec::PatternSpec(Variant v) : v_(std::move(v)), perm_(materialize_variant(v_)) {}

std::string PatternSpec::to_literal() const {
  struct Visitor {
    const Permutation& perm;
    std::string operator()(const pattern::Explicit&) const { return perm.to_string(); }
    std::string operator()(const pattern::Identity& id) const { return "id:" + std::to_string(id.k); }
    std::string operator()(const pattern::TwoLayered& t) const {
      return "tl:" + std::to_string(t.k) + "," + std::to_string(t.m);
    }
    std::string operator()(const pattern::Layered& l) const {
      std::string s = "layered:";
      for (size_t i = 0; i < l.bounds.size(); ++i) s += (i ? "," : "") + std::to_string(l.bounds[i]);
      return s;
    }
    std::string operator()(const pattern::Wedge&) const { return perm.to_string(); }
  };
  std::string s = std::visit(Visitor{perm_}, v_);
  // A compact digit string for the empty pattern would be unreadable.
  return s.empty() ? "id:0" : s;
}

// ---------------------------------------------------------------- constraints

Quantifier Quantifier::exactly(int r) {
  if (r < 0) throw InvalidArgument("exactly: count must be nonnegative");
  return Quantifier(Kind::Exactly, r);
}

Quantifier Quantifier::at_least(int r) {
  if (r < 1) throw InvalidArgument("at least: count must be positive");
  return Quantifier(Kind::AtLeast, r);
}

bool Quantifier::holds(std::uint64_t occurrences) const {
  const auto r = static_cast<std::uint64_t>(r_);
  return kind_ == Kind::Exactly ? occurrences == r : occurrences >= r;
}

std::string Quantifier::to_literal() const {
  if (kind_ == Kind::Exactly) return r_ == 0 ? "avoid" : "exactly:" + std::to_string(r_);
  return "atleast:" + std::to_string(r_);
}

ConstraintSet::ConstraintSet(std::initializer_list<ConstraintItem> items) {
  for (const auto& item : items) add(item.pattern, item.quantifier);
}

ConstraintSet& ConstraintSet::add(PatternSpec pattern, Quantifier q) {
  for (const auto& item : items_)
    if (item.pattern.materialize() == pattern.materialize())
      throw InvalidArgument("constraint set repeats pattern " + pattern.to_literal());
  items_.push_back({std::move(pattern), q});
  return *this;
}

ConstraintSet ConstraintSet::transformed(int g) const {
  ConstraintSet out;
  for (const auto& item : items_) out.add(PatternSpec(apply_symmetry(g, item.pattern.materialize())), item.quantifier);
  return out;
}

std::string ConstraintSet::to_literal() const {
  std::string s;
  for (const auto& item : items_) {
    if (!s.empty()) s += ' ';
    s += item.quantifier.to_literal() + ":" + item.pattern.to_literal();
  }
  return s;
}

bool satisfies(const Permutation& subject, const ConstraintSet& cs) {
  for (const auto& item : cs.items())
    if (!item.quantifier.holds(count_occurrences(subject, item.pattern.materialize()))) return false;
  return true;
}

}  // namespace permcheb
