// Randomized invariants with fixed seeds.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "doctest.h"
#include "permcheb/blockrec.hpp"
#include "permcheb/chebyshev.hpp"
#include "permcheb/dyck.hpp"
#include "permcheb/exact.hpp"
#include "permcheb/oracle.hpp"
#include "permcheb/permutation.hpp"

using namespace permcheb;

namespace {

Permutation random_perm(std::mt19937& rng, int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

/// Occurrences by enumerating index subsets directly.
std::uint64_t naive_count(const Permutation& w, const Permutation& p) {
  const int n = w.size(), k = p.size();
  std::uint64_t total = 0;
  std::vector<int> idx(static_cast<size_t>(k));
  std::function<void(int, int)> rec = [&](int depth, int from) {
    if (depth == k) {
      std::vector<int> sub;
      for (int i : idx) sub.push_back(w[static_cast<size_t>(i)]);
      if (standardize(sub) == p) ++total;
      return;
    }
    for (int i = from; i < n; ++i) {
      idx[static_cast<size_t>(depth)] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  return total;
}

Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-4, 4);
  std::vector<Rational> c;
  for (int i = 0, d = deg(rng); i <= d; ++i) c.emplace_back(coef(rng));
  return Poly(c);
}

/// Nonzero at x = 0, so the series exists.
Poly random_unit_poly(std::mt19937& rng, int max_degree) {
  Poly p = random_poly(rng, max_degree);
  while (p.coeff(0) == 0) p = p + Poly(1);
  return p;
}

DyckPath random_dyck(std::mt19937& rng, int semilength) {
  // shuffle, then rotate to just after the last minimum (cycle lemma on n+1 ups and n downs)
  std::vector<DyckPath::Step> s;
  for (int i = 0; i <= semilength; ++i) s.push_back(DyckPath::Step::Up);
  for (int i = 0; i < semilength; ++i) s.push_back(DyckPath::Step::Down);
  std::shuffle(s.begin(), s.end(), rng);
  int h = 0, low = 0, at = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    h += s[i] == DyckPath::Step::Up ? 1 : -1;
    if (h <= low) low = h, at = static_cast<int>(i) + 1;
  }
  std::rotate(s.begin(), s.begin() + at, s.end());
  s.erase(s.begin());
  return DyckPath(s);
}

}  // namespace

TEST_CASE("occurrence counts agree with subset enumeration") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    const Permutation w = random_perm(rng, std::uniform_int_distribution<int>(0, 9)(rng));
    const Permutation p = random_perm(rng, std::uniform_int_distribution<int>(1, 4)(rng));
    CHECK(count_occurrences(w, p) == naive_count(w, p));
    if (!w.empty()) {
      std::uint64_t ending = 0;
      const std::vector<int> prefix(w.begin(), w.end() - 1);
      ending = count_occurrences(w, p) - count_occurrences(prefix, p);
      CHECK(count_occurrences_ending_last(w.values(), p) == ending);
    }
  }
}

TEST_CASE("symmetries preserve occurrence counts") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation w = random_perm(rng, 8), p = random_perm(rng, 3);
    for (int g = 0; g < 8; ++g) CHECK(count_occurrences(apply_symmetry(g, w), apply_symmetry(g, p)) == count_occurrences(w, p));
    CHECK(inverse(inverse(w)) == w);
    CHECK(reverse(reverse(w)) == w);
    CHECK(complement(complement(w)) == w);
    CHECK(standardize(w.values()) == w);
  }
}

TEST_CASE("oracle counts are invariant under symmetry") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 12; ++trial) {
    ConstraintSet cs;
    const Permutation a = random_perm(rng, 3);
    Permutation b = random_perm(rng, 4);
    cs.avoid(a);
    if (!contains(b, a)) cs.exactly(1, b);
    const auto want = count_upto(cs, 7).counts;
    for (int g = 1; g < 8; ++g) CHECK(count_upto(cs.transformed(g), 7).counts == want);
  }
}

TEST_CASE("rational function arithmetic") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const RatFun a(random_poly(rng, 3), random_unit_poly(rng, 3));
    const RatFun b(random_poly(rng, 3), random_unit_poly(rng, 3));
    const RatFun c(random_unit_poly(rng, 2), random_unit_poly(rng, 2));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * c / c == a);
    CHECK(a - a == RatFun(0));
    CHECK(series_of(a * b, 10) == series_of(a, 10) * series_of(b, 10));
    CHECK(series_of(a + b, 10) == series_of(a, 10) + series_of(b, 10));
    const Poly g = gcd(a.numerator(), a.denominator());
    CHECK(g.degree() <= 0);
  }
}

TEST_CASE("polynomial gcd divides both arguments") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly common = random_unit_poly(rng, 2);
    const Poly a = random_unit_poly(rng, 3) * common, b = random_unit_poly(rng, 3) * common;
    const Poly g = gcd(a, b);
    CHECK(divmod(a, g).second.is_zero());
    CHECK(divmod(b, g).second.is_zero());
    CHECK(divmod(g, common.monic()).second.is_zero());
  }
}

TEST_CASE("bijection on random large paths") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 25)(rng);
    const DyckPath d = random_dyck(rng, n);
    const Permutation p = phi_inverse(d);
    CHECK(p.size() == n);
    CHECK(phi(p) == d);
    CHECK(max_height(d) == longest_increasing_subsequence(p.values()));
    if (n <= 12) CHECK_FALSE(contains(p, Permutation{1, 3, 2}));
  }
}

TEST_CASE("block recursion on random 132-avoiders") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 8; ++trial) {
    const Permutation tau = phi_inverse(random_dyck(rng, 6));
    ConstraintSet cs;
    cs.avoid(Permutation{1, 3, 2}).avoid(tau);
    CHECK(series_of(F_recursive(tau), 8) == count_upto(cs, 8).series());
    if (is_wedge(tau)) CHECK(F_recursive(tau) == R(6));
  }
}
