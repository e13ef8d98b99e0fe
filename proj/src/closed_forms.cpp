#include "permcheb/closed_forms.hpp"

#include <algorithm>
#include <functional>

#include "permcheb/chebyshev.hpp"
#include "permcheb/error.hpp"
#include "permcheb/oracle.hpp"

namespace permcheb {

namespace {

TExpr sum_U_squared(int from, int to) {
  TExpr s(0);
  for (int j = from; j <= to; ++j) {
    const TExpr u = U(j);
    s += u * u;
  }
  return s;
}

TExpr t_pow(int e) { return TExpr::t().pow(e); }

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

void require_range(bool ok, const std::string& what) {
  if (!ok) throw OutOfStatedRange(what);
}

}  // namespace

Base parse_base(std::string_view text) {
  if (text == "132") return Base::P132;
  if (text == "321") return Base::P321;
  throw InvalidArgument("base must be 132 or 321");
}

std::string to_string(Base b) { return b == Base::P132 ? "132" : "321"; }

const Permutation& base_pattern(Base b) {
  static const Permutation p132{1, 3, 2};
  static const Permutation p321{3, 2, 1};
  return b == Base::P132 ? p132 : p321;
}

PatternShape shape_of(const Permutation& p) {
  PatternShape s;
  s.k = p.size();
  if (is_layered(p)) {
    // block maxima, left to right, are the layer bounds m_0 > m_1 > ...
    std::vector<int> maxima;
    for (int i = 0; i < p.size(); ++i)
      if (i + 1 == p.size() || p[static_cast<size_t>(i + 1)] != p[static_cast<size_t>(i)] + 1)
        maxima.push_back(p[static_cast<size_t>(i)]);
    if (maxima.size() == 1) {
      s.kind = PatternShape::Kind::Identity;
    } else if (maxima.size() == 2) {
      s.kind = PatternShape::Kind::TwoLayered;
      s.m = maxima[1];
    } else if (maxima.size() == 3) {
      s.kind = PatternShape::Kind::ThreeLayered;
      s.m = maxima[1];
      s.m2 = maxima[2];
    }
    if (s.kind != PatternShape::Kind::Other) return s;
  }
  if (is_wedge(p) && !contains(p, base_pattern(Base::P132))) s.kind = PatternShape::Kind::Wedge;
  return s;
}

// ---------------------------------------------------------------- avoidance

RatFun F_three_layered(int k, int m1, int m2) {
  require(k > m1 && m1 > m2 && m2 > 0, "three-layered pattern needs k > m1 > m2 > 0");
  const int a = k - m1, b = m1 - m2, c = m2;
  const TExpr num = U(a + b) * U(a + c - 1) * U(b + c) + U(b - 1) * U(b);
  const TExpr den = U(a + b) * U(a + c) * U(b + c);
  return (two_t() * num / den).to_ratfun();
}

RatFun F_pair(Base base, const PatternSpec& tau) {
  const PatternShape s = shape_of(tau.materialize());
  using K = PatternShape::Kind;
  if (base == Base::P132) {
    switch (s.kind) {
      case K::Identity:
      case K::TwoLayered:
      case K::Wedge:
        return R(s.k);
      case K::ThreeLayered:
        return F_three_layered(s.k, s.m, s.m2);
      case K::Other:
        break;
    }
    throw UnsupportedPattern("no closed form for {132, " + tau.to_literal() + "}; use the block recursion");
  }
  if (s.kind == K::TwoLayered) return R(s.k);
  throw UnsupportedPattern("no closed form for {321, " + tau.to_literal() + "}");
}

RatFun F_triple(int k, int m, int l) {
  require(m >= 1 && k - m >= m, "F_triple needs k - m >= m >= 1");
  require(l >= 1, "F_triple needs l >= 1");
  if (l <= k - m) return R(l);
  const RatFun x = RatFun::x();
  return R(k) - (x * R(k - m) * R(m)).pow(l + m - k) * (R(k) - R(k - m));
}

// ---------------------------------------------------------------- exactly r

RatFun G_identity_single(int k) {
  require(k >= 1, "k >= 1 required");
  return U(k).pow(-2).to_ratfun();
}

RatFun G_identity_bounded(int k, int r) {
  require_range(k >= 1 && r >= 1 && r <= k, "bounded identity formula needs 1 <= r <= k");
  return (U(k - 1).pow(r - 1) / (two_t().pow(r - 1) * U(k).pow(r + 1))).to_ratfun();
}

RatFun G_identity_extended(int k, int r) {
  require_range(k >= 1 && r >= 1 && 2 * r <= k * (k + 3), "extended identity formula needs 1 <= r <= k(k+3)/2");
  const TExpr ratio = U(k) / U(k - 1);
  TExpr sum(0);
  for (int j = 0; j <= (r - 1) / k; ++j) {
    const Integer c = binomial(r - k * j + j - 1, j);
    sum += TExpr(RatFun(Rational(c))) * two_t().pow((k - 2) * j) * ratio.pow(k * j);
  }
  return (U(k - 1).pow(r - 1) / (two_t().pow(r - 1) * U(k).pow(r + 1)) * sum).to_ratfun();
}

RatFun G_identity_general(int k, int r) {
  require_range(k >= 2 && r >= 1, "general identity formula needs k >= 2 and r >= 1");
  // Weights C(k+i-2, k-1) for i = 1, 2, ... strictly increase when k >= 2.
  std::vector<long> weights;
  for (int i = 1;; ++i) {
    const Integer w = binomial(k + i - 2, k - 1);
    if (w > r) break;
    weights.push_back(w.get_si());
  }
  const TExpr uk = U(k), uk1 = U(k - 1);
  TExpr total(0);
  std::vector<long> l(weights.size(), 0);
  std::function<void(size_t, long)> walk = [&](size_t i, long budget) {
    if (budget == 0) {
      int last = -1;
      for (size_t j = 0; j < l.size(); ++j)
        if (l[j] != 0) last = static_cast<int>(j);
      Integer coeff = 1;
      for (int j = 0; j + 1 <= last; ++j) coeff *= binomial(l[static_cast<size_t>(j)] + l[static_cast<size_t>(j) + 1] - 1, l[static_cast<size_t>(j) + 1]);
      if (coeff == 0) return;
      long tail = 0;
      for (size_t j = 1; j < l.size(); ++j) tail += l[j];
      const long l1 = l[0];
      const TExpr term = uk1.pow(static_cast<int>(l1 - 1)) / uk.pow(static_cast<int>(l1 + 1)) *
                         two_t().pow(static_cast<int>(-(l1 - 1) - 2 * tail));
      total += TExpr(RatFun(Rational(coeff))) * term;
      return;
    }
    if (i == weights.size()) return;
    for (long v = budget / weights[i]; v >= 0; --v) {
      l[i] = v;
      walk(i + 1, budget - v * weights[i]);
    }
    l[i] = 0;
  };
  walk(0, r);
  return total.to_ratfun();
}

RatFun G_k1_single(int k) {
  require(k >= 2, "[k,1] single-occurrence formula needs k >= 2");
  return (TExpr(1) / (TExpr(4) * t_pow(2) * U(k - 2) * U(k))).to_ratfun();
}

RatFun G_k1_divisor_sum(int k, int r) {
  require_range(k >= 3 && r >= 1 && r <= k - 1, "[k,1] divisor-sum formula needs k >= 3 and 1 <= r <= k-1");
  const TExpr q = U(k - 3) / U(k - 2);
  TExpr sum(0);
  for (int l = 1; l <= r; ++l) {
    if (r % l != 0) continue;
    const Rational c(Rational(binomial(2 * l, l)) / (l + 1));
    sum += TExpr(RatFun(c)) * two_t().pow(1 - 2 * l - r / l) * q.pow(r / l);
  }
  return (sum / (U(k - 3) * U(k))).to_ratfun();
}

RatFun G_two_layered_single(int k, int m) {
  require(k > m && m > 0, "[k,m] needs k > m > 0");
  return (TExpr(1) / (two_t() * U(k) * U(m) * U(k - m - 1))).to_ratfun();
}

RatFun G_321_k1(int k, int r) {
  require_range(k >= 3 && r >= 1 && r <= k, "321-avoider formula for [k,1] needs k >= 3 and 1 <= r <= k");
  return (U(k - 1).pow(r - 1) / (two_t().pow(r - 1) * U(k).pow(r + 1))).to_ratfun();
}

std::vector<Route> G_routes(Base base, const PatternSpec& tau, int r) {
  require(r >= 0, "occurrence count must be nonnegative");
  const PatternShape s = shape_of(tau.materialize());
  using K = PatternShape::Kind;
  std::vector<Route> out;
  const int k = s.k;
  if (r == 0) {
    try {
      out.push_back({"avoidance", F_pair(base, tau)});
    } catch (const UnsupportedPattern&) {
    }
    return out;
  }
  if (base == Base::P132) {
    if (s.kind == K::Identity && k >= 1) {
      if (r == 1) out.push_back({"identity.single", G_identity_single(k)});
      if (r <= k) out.push_back({"identity.bounded_r", G_identity_bounded(k, r)});
      if (2 * r <= k * (k + 3)) out.push_back({"identity.extended_r", G_identity_extended(k, r)});
      if (k >= 2) out.push_back({"identity.any_r", G_identity_general(k, r)});
    } else if (s.kind == K::TwoLayered) {
      if (s.m == 1 && r == 1) out.push_back({"k1.single", G_k1_single(k)});
      if (s.m == 1 && k >= 3 && r <= k - 1) out.push_back({"k1.divisor_sum", G_k1_divisor_sum(k, r)});
      // [k,m] and [k,k-m] are inverse to each other, and 132 is an involution.
      if (r == 1) out.push_back({"two_layered.single", G_two_layered_single(k, std::min(s.m, k - s.m))});
    }
  } else if (s.kind == K::TwoLayered && s.m == 1 && k >= 3 && r <= k) {
    out.push_back({"321.k1", G_321_k1(k, r)});
  }
  return out;
}

RatFun G_exact(Base base, const PatternSpec& tau, int r) {
  const PatternShape s = shape_of(tau.materialize());
  using K = PatternShape::Kind;
  const bool known = base == Base::P132 ? (s.kind == K::Identity || s.kind == K::TwoLayered)
                                        : s.kind == K::TwoLayered;
  if (!known) throw UnsupportedPattern("no occurrence formula for " + tau.to_literal() + " among " + to_string(base) + "-avoiders");
  auto routes = G_routes(base, tau, r);
  if (routes.empty())
    throw OutOfStatedRange("r = " + std::to_string(r) + " is outside every stated range for " + tau.to_literal() +
                           " among " + to_string(base) + "-avoiders");
  return routes.front().value;
}

RatFun G_triple(int k, int m, int l) {
  require(m >= 1 && k - m >= m, "G_triple needs k - m >= m >= 1");
  require(l >= 1, "G_triple needs l >= 1");
  if (m >= l) return G_identity_single(l);
  const TExpr q = U(m - 1) / U(m);
  if (l >= k - m) {
    // Also used at l = k - m, where it reduces to the second form's value.
    TExpr sum(1);
    for (int j = m + 2; j <= k - m; ++j) sum += U(j - m - 2) / (U(j - 2) * U(j - 1)) * q.pow(m + 1 - j);
    return (TExpr(1) / (U(m) * U(k - m)) * q.pow(l - m) * (U(k - m - 1) / U(k - m)).pow(l + m - k) * sum).to_ratfun();
  }
  TExpr sum(1);
  for (int j = m + 1; j <= l; ++j) sum += U(j - m - 1) / (U(j - 1) * U(j)) * q.pow(m - j);
  return (TExpr(1) / (U(l) * U(m)) * q.pow(l - m) * sum).to_ratfun();
}

// ---------------------------------------------------------------- one 132

RatFun H(const PatternSpec& tau) {
  const PatternShape s = shape_of(tau.materialize());
  using K = PatternShape::Kind;
  const int k = s.k;
  const TExpr pre = TExpr(1) / (TExpr(4) * t_pow(2) * U(k) * U(k));
  if (s.kind == K::Identity) {
    require_range(k >= 3, "H for [k] needs k >= 3");
    return (pre * sum_U_squared(1, k - 2)).to_ratfun();
  }
  if (s.kind != K::TwoLayered) throw UnsupportedPattern("no H formula for " + tau.to_literal());
  const int m = 2 * s.m > k ? k - s.m : s.m;  // H_[k,m] = H_[k,k-m]
  const RatFun x = RatFun::x();
  if (m == 1) {
    if (k == 3) return x.pow(3) / (RatFun(1) - RatFun(2) * x);
    require_range(k >= 4, "H for [k,1] needs k >= 3");
    return (pre * (sum_U_squared(1, k - 2) - TExpr(1))).to_ratfun();
  }
  if (m == 2) {
    if (k == 4)
      return x.pow(3) * (RatFun(1) + x) /
             ((RatFun(1) - x) * (RatFun(1) - RatFun(3) * x + x * x));
    return (pre * (sum_U_squared(1, k - 2) - two_t() * U(k - 3) / U(k - 2) - TExpr(2))).to_ratfun();
  }
  require_range(k >= 6 && m >= 3, "H for [k,m] outside the stated ranges");
  return (pre * (sum_U_squared(1, k - m - 2) + sum_U_squared(1, m - 1) - TExpr(1) + U(k - 1) * U(m - 1) * U(k - m - 2)))
      .to_ratfun();
}

RatFun Phi(const PatternSpec& tau) {
  const PatternShape s = shape_of(tau.materialize());
  using K = PatternShape::Kind;
  const int k = s.k;
  if (s.kind == K::Identity) {
    require_range(k >= 1, "Phi for [k] needs k >= 1");
    TExpr sum(0);
    for (int i = 1; i <= k - 2; ++i)
      sum += (sum_U_squared(1, k - i) - TExpr(1)) / (U(k - i) * U(k - i + 1));
    return (sum / (TExpr(4) * t_pow(3) * U(k) * U(k))).to_ratfun();
  }
  // [k,k-1] is the inverse of [k,1], and 132 is an involution.
  if (s.kind == K::TwoLayered && k >= 4 && (s.m == 1 || s.m == k - 1)) {
    TExpr a(0);
    for (int i = 1; i <= k - 4; ++i)
      a += (sum_U_squared(1, k - i - 2) - TExpr(1)) / (U(k - i - 2) * U(k - i - 1));
    a = U(k) / (TExpr(2) * t_pow(2) * U(k - 2)) * a;
    const TExpr b = sum_U_squared(1, k - 4) / (two_t() * U(k - 2) * U(k - 2));
    const TExpr c = U(k - 3) / (two_t() * U(k - 1)) + U(k) / U(k - 1);
    return ((a + b + c) / (TExpr(8) * t_pow(3) * U(k) * U(k))).to_ratfun();
  }
  throw UnsupportedPattern("no Phi formula for " + tau.to_literal());
}

// ---------------------------------------------------------------- L_p

namespace {

RatFun factorial_prefix(int p) {
  Poly s;
  for (int i = 0; i <= p - 3; ++i) s += Poly::monomial(Rational(factorial(i)), i);
  return RatFun(s);
}

}  // namespace

RatFun F_Lp(int p, int k) {
  require(p >= 4 && k >= p - 2, "F_Lp needs p >= 4 and k >= p - 2");
  RatFun sum;
  for (const auto& [a, count] : count_N_of_a(p)) {
    RatFun prod(1);
    int running = 0;
    for (int j = 1; j <= p - 3; ++j) {
      running += a[static_cast<size_t>(j - 1)];
      prod *= R(k - 1 - running);
    }
    sum += RatFun(Rational(Integer(std::to_string(count)))) * prod;
  }
  return factorial_prefix(p) + RatFun::x().pow(p - 2) * R(k) * R(k - 1) * sum;
}

RatFun F_Lp_literal(int p, int k) {
  require(p >= 4 && k >= p - 2, "F_Lp needs p >= 4 and k >= p - 2");
  RatFun sum;
  for (const auto& [a, count] : count_N_of_a(p)) {
    RatFun prod(1);
    for (int j = 1; j <= p - 3; ++j) prod *= R(k - j - a[static_cast<size_t>(j - 1)]);
    sum += RatFun(Rational(Integer(std::to_string(count)))) * prod;
  }
  return factorial_prefix(p) + RatFun::x().pow(p - 2) * R(k) * R(k - 1) * sum;
}

RatFun F_L4_identity(int k) {
  require(k >= 2, "F_L4_identity needs k >= 2");
  const RatFun x = RatFun::x();
  return RatFun(1) + x + x * x * R(k) * R(k - 1) * (R(k - 1) + R(k - 2));
}

RatFun F_L4_two_layered(int k, int m) {
  require(k >= 2 && m >= 1 && m <= k - 1, "F_L4_two_layered needs 1 <= m <= k - 1");
  if (m == k - 1) return F_L4_identity(k);
  const TExpr t = TExpr::t();
  const TExpr v = TExpr(1) + TExpr(1) / (TExpr(4) * t * t) + U(k - 2) * U(m - 1) / (t * U(k) * U(m)) +
                  U(k - m - 2) / (two_t() * U(k) * U(m)) *
                      (U(k - m - 2) / U(k - m - 1) + U(k - m - 3) / U(k - m - 2));
  return v.to_ratfun();
}

// ---------------------------------------------------------------- identity check

AIdentityReport check_A_identity(int k, int m, int N) {
  require(k >= 2 && m >= 1 && m <= k - 1, "check_A_identity needs k >= 2 and 1 <= m <= k - 1");
  ConstraintSet cs;
  cs.avoid(PatternSpec(base_pattern(Base::P321))).avoid(PatternSpec::two_layered(k, m));
  const Series f = count_upto(cs, N).series();
  AIdentityReport rep;
  rep.order = N;
  for (int n = 0; n <= N; ++n) {
    Rational acc = 0;
    for (int i = 0; i <= k && i <= n; ++i) {
      const Integer c = binomial(k - i, i);
      if (c == 0) continue;
      const int e = n - i;
      Rational coef = f[static_cast<size_t>(e)];
      if (e < k - i) coef -= Rational(catalan(e));
      acc += (i % 2 ? -1 : 1) * Rational(c) * coef;
    }
    if (acc != 0 && !rep.first_failure) {
      rep.first_failure = n;
      rep.failing_value = acc;
    }
  }
  rep.holds = !rep.first_failure.has_value();
  return rep;
}

}  // namespace permcheb
