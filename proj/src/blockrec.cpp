#include "permcheb/blockrec.hpp"

#include <algorithm>
#include <mutex>

#include "permcheb/error.hpp"

namespace permcheb {

namespace {

const Permutation& p132() {
  static const Permutation p{1, 3, 2};
  return p;
}

BlockPart make_part(std::string name, std::span<const int> entries, int lo, int hi) {
  BlockPart part{std::move(name), std::vector<int>(entries.begin(), entries.end()), lo, hi};
  const int expected = std::max(0, hi - lo + 1);
  bool ok = static_cast<int>(part.entries.size()) == expected;
  for (int v : part.entries) ok = ok && v >= lo && v <= hi;
  if (!ok)
    throw Error("block " + part.name + " does not occupy the values " + std::to_string(lo) + ".." + std::to_string(hi));
  return part;
}

int position_of(const Permutation& p, int value) {
  for (int i = 0; i < p.size(); ++i)
    if (p[static_cast<size_t>(i)] == value) return i;
  throw InvalidArgument("value not present");
}

}  // namespace

std::vector<int> BlockDecomposition::reassemble() const {
  std::vector<int> out;
  for (int slot : layout) {
    if (slot >= 0) {
      const auto& e = parts.at(static_cast<size_t>(slot)).entries;
      out.insert(out.end(), e.begin(), e.end());
    } else {
      out.push_back(pivots.at(static_cast<size_t>(-slot - 1)));
    }
  }
  return out;
}

std::string BlockDecomposition::kind_name() const {
  switch (kind) {
    case Kind::AvoiderSplit: return "avoider";
    case Kind::ExactlyOnceI: return "once(i)";
    case Kind::ExactlyOnceII: return "once(ii)";
    case Kind::ExactlyOnceIII: return "once(iii)";
    case Kind::L4A: return "L4(n-1 first)";
    case Kind::L4B: return "L4(n first)";
  }
  return "?";
}

BlockDecomposition decompose_132_avoider(const Permutation& alpha) {
  if (alpha.empty()) throw InvalidArgument("cannot decompose the empty permutation");
  if (contains(alpha, p132())) throw InvalidArgument("permutation contains 132");
  const int n = alpha.size();
  const int t = position_of(alpha, n) + 1;
  const auto v = alpha.values();
  BlockDecomposition d;
  d.kind = BlockDecomposition::Kind::AvoiderSplit;
  d.n = n;
  d.parts.push_back(make_part("alpha'", v.subspan(0, static_cast<size_t>(t - 1)), n - t + 1, n - 1));
  d.parts.push_back(make_part("alpha''", v.subspan(static_cast<size_t>(t)), 1, n - t));
  d.pivots = {n};
  d.layout = {0, -1, 1};
  d.params["t"] = t;
  return d;
}

BlockDecomposition classify_exactly_once(const Permutation& alpha) {
  if (count_occurrences(alpha, p132()) != 1) throw InvalidArgument("permutation does not contain 132 exactly once");
  const int n = alpha.size();
  const auto v = alpha.values();
  const int pos_n = position_of(alpha, n);
  std::vector<int> without_n(v.begin(), v.end());
  without_n.erase(without_n.begin() + pos_n);
  BlockDecomposition d;
  d.n = n;
  if (count_occurrences(without_n, p132()) == 1) {
    // The occurrence avoids n: everything left of n lies above everything right of it.
    const int t = pos_n + 1;
    d.parts.push_back(make_part("alpha'", v.subspan(0, static_cast<size_t>(pos_n)), n - t + 1, n - 1));
    d.parts.push_back(make_part("alpha''", v.subspan(static_cast<size_t>(t)), 1, n - t));
    d.pivots = {n};
    d.layout = {0, -1, 1};
    d.params["t"] = t;
    const bool left_has = count_occurrences(d.parts[0].entries, p132()) == 1;
    d.kind = left_has ? BlockDecomposition::Kind::ExactlyOnceI : BlockDecomposition::Kind::ExactlyOnceII;
    const auto& other = d.parts[left_has ? 1 : 0].entries;
    if (count_occurrences(other, p132()) != 0) throw Error("exactly-once split has 132 on both sides");
    return d;
  }
  // The occurrence is (n-t+1, n, n-t+2) with n-t+1 right before n.
  if (pos_n == 0) throw Error("exactly-once occurrence through n has no left entry");
  const int i_val = v[static_cast<size_t>(pos_n - 1)];
  const int t = n - i_val + 1;
  const int pos_j = position_of(alpha, i_val + 1);
  if (pos_j < pos_n) throw Error("exactly-once occurrence through n is malformed");
  const auto a1 = v.subspan(0, static_cast<size_t>(pos_n - 1));
  const auto a2 = v.subspan(static_cast<size_t>(pos_n + 1), static_cast<size_t>(pos_j - pos_n - 1));
  const auto a3 = v.subspan(static_cast<size_t>(pos_j + 1));
  const int u = n - static_cast<int>(a3.size());
  d.kind = BlockDecomposition::Kind::ExactlyOnceIII;
  d.parts.push_back(make_part("alpha'", a1, n - t + 3, n - 1));
  d.parts.push_back(make_part("alpha''", a2, n - u + 1, n - t));
  d.parts.push_back(make_part("alpha'''", a3, 1, n - u));
  for (const auto& part : d.parts)
    if (contains(standardize(part.entries), p132())) throw Error("block " + part.name + " contains 132");
  d.pivots = {n - t + 1, n, n - t + 2};
  d.layout = {0, -1, -2, 1, -3, 2};
  d.params["t"] = t;
  d.params["u"] = u;
  return d;
}

BlockDecomposition l4_decompose(const Permutation& alpha) {
  const int n = alpha.size();
  if (n < 2) throw InvalidArgument("L_4 decomposition needs n >= 2");
  for (const auto& q : Lp_set(4))
    if (contains(alpha, q)) throw InvalidArgument("permutation contains " + q.to_string() + " from L_4");
  const int pa = position_of(alpha, n - 1);
  const int pb = position_of(alpha, n);
  const int first = std::min(pa, pb), second = std::max(pa, pb);
  const auto v = alpha.values();
  const auto a1 = v.subspan(0, static_cast<size_t>(first));
  const auto a2 = v.subspan(static_cast<size_t>(first + 1), static_cast<size_t>(second - first - 1));
  const auto a3 = v.subspan(static_cast<size_t>(second + 1));
  const int r = static_cast<int>(a3.size());
  const int s = r + static_cast<int>(a2.size());
  BlockDecomposition d;
  d.kind = pa < pb ? BlockDecomposition::Kind::L4A : BlockDecomposition::Kind::L4B;
  d.n = n;
  d.parts.push_back(make_part("alpha_1", a1, s + 1, n - 2));
  d.parts.push_back(make_part("alpha_2", a2, r + 1, s));
  d.parts.push_back(make_part("alpha_3", a3, 1, r));
  d.pivots = {v[static_cast<size_t>(first)], v[static_cast<size_t>(second)]};
  d.layout = {0, -1, 1, -2, 2};
  d.params["r"] = r;
  d.params["s"] = s;
  return d;
}

// ---------------------------------------------------------------- recursion

namespace {

std::mutex memo_mutex;
std::map<Permutation, RatFun>& memo() {
  static std::map<Permutation, RatFun> m;
  return m;
}

// a + b * F_tau, with F_tau still unknown.
struct Linear {
  RatFun a;
  RatFun b;
};

}  // namespace

RatFun F_recursive(const Permutation& tau) {
  if (tau.empty()) return RatFun();  // every permutation contains the empty pattern
  if (tau.size() == 1) return RatFun(1);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo().find(tau);
    if (it != memo().end()) return it->second;
  }
  const PrefixSuffix ps = prefix_suffix_decomposition(tau);
  auto term = [&](const Permutation& p) -> Linear {
    if (p == tau) return {RatFun(), RatFun(1)};
    return {F_recursive(p), RatFun()};
  };
  Linear total{RatFun(1), RatFun()};
  const RatFun x = RatFun::x();
  for (int j = 0; j <= ps.r; ++j) {
    const Linear hi = term(ps.prefix(j));
    const Linear lo = term(ps.prefix(j - 1));
    const Linear diff{hi.a - lo.a, hi.b - lo.b};
    const Linear suf = term(ps.suffix(j));
    if (!diff.b.is_zero() && !suf.b.is_zero()) throw Error("recursion is not linear in the unknown");
    total.a += x * diff.a * suf.a;
    total.b += x * (diff.a * suf.b + diff.b * suf.a);
  }
  // F = a + b F
  RatFun value = total.a / (RatFun(1) - total.b);
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo().emplace(tau, std::move(value)).first->second;
}

}  // namespace permcheb
