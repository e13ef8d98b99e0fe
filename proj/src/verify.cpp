#include "permcheb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "permcheb/blockrec.hpp"
#include "permcheb/cfrac.hpp"
#include "permcheb/chebyshev.hpp"
#include "permcheb/closed_forms.hpp"
#include "permcheb/dyck.hpp"
#include "permcheb/error.hpp"
#include "permcheb/transfer.hpp"

namespace permcheb {

std::string to_string(Tier t) { return t == Tier::Proved ? "proved" : "experimental"; }

TierFilter parse_tier_filter(std::string_view text) {
  if (text == "proved") return TierFilter::Proved;
  if (text == "experimental") return TierFilter::Experimental;
  if (text == "all") return TierFilter::All;
  throw InvalidArgument("tier must be proved, experimental or all");
}

std::optional<Mismatch> first_difference(const Series& expected, const Series& actual) {
  const int order = std::min(expected.order(), actual.order());
  for (int n = 0; n <= order; ++n) {
    const auto i = static_cast<size_t>(n);
    if (expected[i] != actual[i]) return Mismatch{n, to_string(expected[i]), to_string(actual[i])};
  }
  if (expected.order() != actual.order())
    return Mismatch{order + 1, "order " + std::to_string(expected.order()), "order " + std::to_string(actual.order())};
  return std::nullopt;
}

bool proved_tier_passes(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.tier != Tier::Proved || r.passed; });
}

namespace {

using Clock = std::chrono::steady_clock;
using Outcome = std::optional<Mismatch>;

Outcome compare(const RatFun& expected, const RatFun& actual) {
  if (expected == actual) return std::nullopt;
  return Mismatch{-1, expected.to_string(), actual.to_string()};
}

Outcome require(bool ok, std::string expected, std::string actual) {
  if (ok) return std::nullopt;
  return Mismatch{-1, std::move(expected), std::move(actual)};
}

Permutation descent_then_top(int k) {
  // (k-1, ..., 2, 1, k)
  std::vector<int> v;
  for (int i = k - 1; i >= 1; --i) v.push_back(i);
  v.push_back(k);
  return Permutation(v);
}

class Runner {
 public:
  Runner(int N, Limits limits) : N_(N), limits_(limits) {}

  void check(const std::string& id, const std::string& params, Tier tier, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    CheckResult r{id, params, tier, false, std::nullopt, 0};
    try {
      r.first_mismatch = body();
      r.passed = !r.first_mismatch;
    } catch (const ResourceLimit&) {
      throw;
    } catch (const std::exception& e) {
      r.first_mismatch = Mismatch{-1, "a value", std::string("error: ") + e.what()};
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    results_.push_back(std::move(r));
  }

  void series_check(const std::string& id, const std::string& params, Tier tier, const std::function<Series()>& oracle,
                    const std::function<RatFun()>& formula) {
    check(id, params, tier, [&] { return first_difference(oracle(), series_of(formula(), N_)); });
  }

  Series oracle(const ConstraintSet& cs) {
    const std::string key = cs.to_literal();
    auto it = counts_.find(key);
    if (it == counts_.end()) it = counts_.emplace(key, count_upto(cs, N_, limits_).series()).first;
    return it->second;
  }

  /// Counts with exactly r occurrences of tau among avoiders of base.
  Series profile_row(const Permutation& base, const Permutation& tau, int r) {
    const auto key = std::make_pair(base, tau);
    auto it = profiles_.find(key);
    if (it == profiles_.end()) {
      ConstraintSet cs;
      cs.avoid(base);
      it = profiles_.emplace(key, occurrence_profile(cs, tau, kProfileRows, N_, limits_)).first;
    }
    if (r > kProfileRows) throw InvalidArgument("occurrence profile row out of range");
    return series_from_counts(it->second[static_cast<size_t>(r)]);
  }

  int N() const { return N_; }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  static constexpr int kProfileRows = 12;
  int N_;
  Limits limits_;
  std::vector<CheckResult> results_;
  std::map<std::string, Series> counts_;
  std::map<std::pair<Permutation, Permutation>, std::vector<std::vector<std::uint64_t>>> profiles_;
};

const Permutation& p132() { return base_pattern(Base::P132); }
const Permutation& p321() { return base_pattern(Base::P321); }

ConstraintSet avoiding(std::initializer_list<PatternSpec> patterns) {
  ConstraintSet cs;
  for (const auto& p : patterns) cs.avoid(p);
  return cs;
}

std::string kv(std::initializer_list<std::pair<const char*, int>> items) {
  std::string s;
  for (const auto& [k, v] : items) {
    if (!s.empty()) s += ' ';
    s += std::string(k) + "=" + std::to_string(v);
  }
  return s;
}

// ---------------------------------------------------------------- scopes

void scope_cheb(Runner& run) {
  const RatFun x = RatFun::x();
  run.check("cheb.R", "k=1..3 closed forms", Tier::Proved, [&]() -> Outcome {
    if (auto m = compare(RatFun(1), R(1))) return m;
    if (auto m = compare(RatFun(1) / (RatFun(1) - x), R(2))) return m;
    return compare((RatFun(1) - x) / (RatFun(1) - RatFun(2) * x), R(3));
  });
  for (int k = 1; k <= 12; ++k)
    run.check("cheb.R", kv({{"k", k}}) + " ladder", Tier::Proved,
              [&] { return compare((RatFun(1) - x * R(k - 1)).inverse(), R(k)); });
}

void scope_avoid(Runner& run) {
  for (int k = 1; k <= 6; ++k) {
    const auto tau = PatternSpec::identity(k);
    run.series_check("avoid.pair.132", tau.to_literal(), Tier::Proved, [&] { return run.oracle(avoiding({p132(), tau})); },
                     [&] { return F_pair(Base::P132, tau); });
  }
  for (int k = 2; k <= 6; ++k)
    for (int m = 1; m < k; ++m) {
      const auto tau = PatternSpec::two_layered(k, m);
      run.series_check("avoid.pair.132", tau.to_literal(), Tier::Proved,
                       [&] { return run.oracle(avoiding({p132(), tau})); }, [&] { return F_pair(Base::P132, tau); });
      run.series_check("avoid.pair.321", tau.to_literal(), Tier::Proved,
                       [&] { return run.oracle(avoiding({p321(), tau})); }, [&] { return F_pair(Base::P321, tau); });
    }
  // Wedges that are neither identities nor two-layered.
  for (int k = 3; k <= 6; ++k)
    for (const auto& p : list_matching(avoiding({p132()}), k, Limits::unlimited_to(k))) {
      const auto kind = shape_of(p).kind;
      if (kind != PatternShape::Kind::Wedge) continue;
      run.series_check("avoid.pair.132", "wedge " + p.to_string(), Tier::Proved,
                       [&] { return run.oracle(avoiding({p132(), p})); }, [&] { return F_pair(Base::P132, p); });
    }
  for (int k = 3; k <= 6; ++k)
    for (int m1 = 2; m1 < k; ++m1)
      for (int m2 = 1; m2 < m1; ++m2) {
        const auto tau = PatternSpec::layered({k, m1, m2});
        run.series_check("avoid.three_layered", tau.to_literal(), Tier::Proved,
                         [&] { return run.oracle(avoiding({p132(), tau})); },
                         [&] { return F_three_layered(k, m1, m2); });
      }
}

void scope_triple(Runner& run) {
  for (int k = 2; k <= 5; ++k)
    for (int m = 1; 2 * m <= k; ++m)
      for (int l = 1; l <= k + 1; ++l) {
        const auto tl = PatternSpec::two_layered(k, m);
        const auto id = PatternSpec::identity(l);
        const std::string params = kv({{"k", k}, {"m", m}, {"l", l}});
        run.series_check("avoid.triple", params, Tier::Proved, [&] { return run.oracle(avoiding({p132(), tl, id})); },
                         [&] { return F_triple(k, m, l); });
        run.series_check(
            "exact.triple", params, Tier::Proved,
            [&] {
              ConstraintSet cs = avoiding({p132(), tl});
              cs.exactly(1, id);
              return run.oracle(cs);
            },
            [&] { return G_triple(k, m, l); });
      }
}

void exact_routes(Runner& run, Base base, const PatternSpec& tau, int r) {
  const auto routes = G_routes(base, tau, r);
  const std::string params = tau.to_literal() + " " + kv({{"r", r}});
  for (const auto& route : routes)
    run.check("exact." + route.name, params, Tier::Proved, [&] {
      return first_difference(run.profile_row(base_pattern(base), tau.materialize(), r), series_of(route.value, run.N()));
    });
  for (size_t i = 1; i < routes.size(); ++i)
    run.check("exact.consistency", params + " " + routes[0].name + "=" + routes[i].name, Tier::Proved,
              [&] { return compare(routes[0].value, routes[i].value); });
}

void scope_exact(Runner& run) {
  for (int k = 1; k <= 5; ++k)
    for (int r = 1; r <= 6; ++r) exact_routes(run, Base::P132, PatternSpec::identity(k), r);
  for (int k = 2; k <= 5; ++k)
    for (int m = 1; m < k; ++m)
      for (int r = 1; r <= (m == 1 ? k : 1); ++r) exact_routes(run, Base::P132, PatternSpec::two_layered(k, m), r);
  for (int k = 6; k <= 7; ++k) exact_routes(run, Base::P132, PatternSpec::two_layered(k, 1), 1);
  for (int k = 3; k <= 5; ++k)
    for (int r = 1; r <= k; ++r) exact_routes(run, Base::P321, PatternSpec::two_layered(k, 1), r);
}

void scope_one132(Runner& run) {
  auto exactly_one_132 = [](const PatternSpec& tau, bool tau_once) {
    ConstraintSet cs;
    cs.exactly(1, p132());
    if (tau_once)
      cs.exactly(1, tau);
    else
      cs.avoid(tau);
    return cs;
  };
  std::vector<PatternSpec> h_patterns;
  for (int k = 3; k <= 5; ++k) h_patterns.push_back(PatternSpec::identity(k));
  for (int k = 3; k <= 5; ++k)
    for (int m = 1; m < k; ++m) h_patterns.push_back(PatternSpec::two_layered(k, m));
  for (const auto& tau : h_patterns)
    run.series_check("one132.H", tau.to_literal(), Tier::Proved,
                     [&] { return run.oracle(exactly_one_132(tau, false)); }, [&] { return H(tau); });
  const RatFun x = RatFun::x();
  run.check("one132.H", "tl:3,1 closed form", Tier::Proved,
            [&] { return compare(x.pow(3) / (RatFun(1) - RatFun(2) * x), H(PatternSpec::two_layered(3, 1))); });
  run.check("one132.H", "tl:4,2 closed form", Tier::Proved, [&] {
    return compare(x.pow(3) * (RatFun(1) + x) / ((RatFun(1) - x) * (RatFun(1) - RatFun(3) * x + x * x)),
                   H(PatternSpec::two_layered(4, 2)));
  });

  std::vector<PatternSpec> phi_patterns;
  for (int k = 1; k <= 5; ++k) phi_patterns.push_back(PatternSpec::identity(k));
  for (int k = 4; k <= 5; ++k) {
    phi_patterns.push_back(PatternSpec::two_layered(k, 1));
    phi_patterns.push_back(PatternSpec::two_layered(k, k - 1));
  }
  for (const auto& tau : phi_patterns)
    run.series_check("one132.phi", tau.to_literal(), Tier::Proved, [&] { return run.oracle(exactly_one_132(tau, true)); },
                     [&] { return Phi(tau); });
  run.check("one132.phi", "id:3 closed form", Tier::Proved, [&] {
    return compare(RatFun(2) * x.pow(5) * (RatFun(1) - RatFun(2) * x).pow(-3), Phi(PatternSpec::identity(3)));
  });
  run.check("one132.phi", "id:3 coefficients n=5..12", Tier::Proved, [&]() -> Outcome {
    const Series s = series_of(Phi(PatternSpec::identity(3)), 12);
    for (int n = 5; n <= 12; ++n) {
      const Rational want(Integer((n - 3) * (n - 4)) * (Integer(1) << (n - 5)));
      if (s[static_cast<size_t>(n)] != want) return Mismatch{n, to_string(want), to_string(s[static_cast<size_t>(n)])};
    }
    return std::nullopt;
  });
}

void scope_lp(Runner& run) {
  run.check("lp.set", "p=4", Tier::Proved, [&] {
    std::vector<Permutation> want;
    for (const char* s : {"1324", "1423", "1342", "1432", "3142", "4132"}) want.push_back(Permutation::parse(s));
    std::sort(want.begin(), want.end());
    auto got = Lp_set(4);
    std::sort(got.begin(), got.end());
    auto join = [](const std::vector<Permutation>& v) {
      std::string s;
      for (const auto& p : v) s += (s.empty() ? "" : " ") + p.to_string();
      return s;
    };
    return require(got == want, join(want), join(got));
  });
  auto with_lp = [](int p, const PatternSpec& extra) {
    ConstraintSet cs;
    for (const auto& q : Lp_set(p)) cs.avoid(q);
    cs.avoid(extra);
    return cs;
  };
  for (int p = 4; p <= 5; ++p)
    for (int k = p - 2; k <= 5; ++k)
      run.series_check("lp.general", kv({{"p", p}, {"k", k}}), Tier::Proved,
                       [&] { return run.oracle(with_lp(p, PatternSpec::identity(k))); }, [&] { return F_Lp(p, k); });
  for (int k = 2; k <= 5; ++k)
    run.series_check("lp.general_literal", kv({{"p", 4}, {"k", k}}), Tier::Proved,
                     [&] { return run.oracle(with_lp(4, PatternSpec::identity(k))); },
                     [&] { return F_Lp_literal(4, k); });
  for (int k = 2; k <= 8; ++k) {
    run.check("lp.general_literal", kv({{"p", 4}, {"k", k}}) + " equals lp.general", Tier::Proved,
              [&] { return compare(F_Lp(4, k), F_Lp_literal(4, k)); });
    run.check("lp.L4.identity", kv({{"k", k}}) + " equals lp.general p=4", Tier::Proved,
              [&] { return compare(F_Lp(4, k), F_L4_identity(k)); });
  }
  for (int k = 2; k <= 5; ++k) {
    run.series_check("lp.L4.identity", kv({{"k", k}}), Tier::Proved,
                     [&] { return run.oracle(with_lp(4, PatternSpec::identity(k))); }, [&] { return F_L4_identity(k); });
    for (int m = 1; m < k; ++m)
      run.series_check("lp.L4.two_layered", kv({{"k", k}, {"m", m}}), Tier::Proved,
                       [&] { return run.oracle(with_lp(4, PatternSpec::two_layered(k, m))); },
                       [&] { return F_L4_two_layered(k, m); });
    run.check("lp.L4.two_layered", kv({{"k", k}}) + " [k,k-1] counts equal [k] counts", Tier::Proved, [&] {
      return first_difference(run.oracle(with_lp(4, PatternSpec::identity(k))),
                              run.oracle(with_lp(4, PatternSpec::two_layered(k, k - 1))));
    });
  }
}

void scope_alt(Runner& run) {
  for (auto [k, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}})
    run.check("alt.A_identity", kv({{"k", k}, {"m", m}, {"N", run.N()}}), Tier::Proved, [&]() -> Outcome {
      const auto rep = check_A_identity(k, m, run.N());
      if (rep.holds) return std::nullopt;
      return Mismatch{rep.first_failure.value_or(-1), "0", to_string(rep.failing_value)};
    });
}

void scope_conjecture(Runner& run) {
  for (int k = 3; k <= 5; ++k)
    for (int r = 1; r <= k; ++r)
      run.check("conj.321.k1_vs_k2", kv({{"k", k}, {"r", r}}), Tier::Experimental, [&] {
        return first_difference(run.profile_row(p321(), PatternSpec::two_layered(k, 1).materialize(), r),
                                run.profile_row(p321(), PatternSpec::two_layered(k, 2).materialize(), r));
      });
}

void scope_transfer(Runner& run) {
  constexpr int kLength = 20;
  std::vector<std::pair<std::string, TransferSystem>> systems;
  systems.emplace_back("binary", tree_to_system(binary_tree()));
  systems.emplace_back("fibonacci", tree_to_system(fibonacci_tree()));
  for (int k = 3; k <= 6; ++k) systems.emplace_back("A" + std::to_string(k), build_Ak(k));
  for (int h = 1; h <= 4; ++h) systems.emplace_back("strip" + std::to_string(h), dyck_strip_system(h));
  for (const auto& [name, sys] : systems)
    for (int r = 0; r < sys.size(); ++r)
      for (int s = 0; s < sys.size(); ++s)
        run.check("transfer.walk_gf", name + " " + sys.labels[static_cast<size_t>(r)] + "->" + sys.labels[static_cast<size_t>(s)],
                  Tier::Proved, [&] {
                    const auto table = series_of_walks(sys, r, kLength);
                    Series direct(kLength);
                    for (int n = 0; n <= kLength; ++n)
                      direct[static_cast<size_t>(n)] = Rational(table[static_cast<size_t>(n)][static_cast<size_t>(s)]);
                    return first_difference(direct, series_of(walk_gf(sys, r, s), kLength));
                  });
  run.check("transfer.levels", "fibonacci", Tier::Proved, [&] {
    Series want(6);
    const int fib[] = {1, 1, 2, 3, 5, 8, 13};
    for (size_t i = 0; i < 7; ++i) want[i] = fib[i];
    return first_difference(want, level_counts(fibonacci_tree(), 6));
  });
  for (const auto& [name, gt] : std::vector<std::pair<std::string, GeneratingTree>>{
           {"binary", binary_tree()}, {"fibonacci", fibonacci_tree()}, {"A5", Ak_tree(5)}})
    run.check("transfer.levels", name + " equals open walks", Tier::Proved, [&] {
      const auto sys = tree_to_system(gt);
      return first_difference(level_counts(gt, kLength), open_walk_series(sys, sys.start, kLength));
    });
  for (int k = 3; k <= 6; ++k) {
    const auto sys = build_Ak(k);
    run.check("transfer.Ak_oracle", kv({{"k", k}}) + " open walks", Tier::Proved, [&] {
      // walks of length n-1 from the root count S_n
      const Series open = open_walk_series(sys, sys.start, std::max(run.N() - 1, 0));
      Series shifted(run.N());
      shifted[0] = 1;
      for (int n = 1; n <= run.N(); ++n) shifted[static_cast<size_t>(n)] = open[static_cast<size_t>(n - 1)];
      return first_difference(run.oracle(avoiding({Permutation{1, 2, 3}, descent_then_top(k)})), shifted);
    });
    // Closed walks need every vertex to have exactly one edge back to the root, which fails for k = 3.
    if (k >= 4)
      run.check("transfer.Ak_oracle", kv({{"k", k}}) + " closed walks", Tier::Proved, [&] {
        return first_difference(run.oracle(avoiding({Permutation{1, 2, 3}, descent_then_top(k)})),
                                closed_walk_series(sys, sys.start, run.N()));
      });
  }
}

void scope_cfrac(Runner& run) {
  const int N = run.N();
  for (int k = 2; k <= 4; ++k) {
    const BiSeries cf = cf_biseries(CFSpec{k, N, N, 3});
    for (int r = 0; r <= 3; ++r) {
      const std::string params = kv({{"k", k}, {"r", r}});
      run.check("cfrac.z_rows", params + " oracle", Tier::Proved, [&] {
        return first_difference(run.profile_row(p132(), Permutation::identity(k), r), cf.z_row(r));
      });
      if (r >= 1)
        run.check("cfrac.z_rows", params + " closed form", Tier::Proved, [&] {
          return first_difference(series_of(G_exact(Base::P132, PatternSpec::identity(k), r), N), cf.z_row(r));
        });
    }
  }
  const int M = std::min(N, 10);
  run.check("cfrac.rwz", kv({{"N", M}}) + " y=1 equals continued fraction k=3", Tier::Proved, [&]() -> Outcome {
    const BiSeries joint = rwz_triseries(M).at_y_one();
    const BiSeries cf = cf_biseries(CFSpec{3, M, M, joint.z_order()});
    for (int n = 0; n <= M; ++n)
      for (int r = 0; r <= joint.z_order(); ++r)
        if (joint.at(n, r) != cf.at(n, r))
          return Mismatch{n, "z^" + std::to_string(r) + ": " + to_string(cf.at(n, r)),
                          "z^" + std::to_string(r) + ": " + to_string(joint.at(n, r))};
    return std::nullopt;
  });
  run.check("cfrac.rwz", kv({{"N", M}}) + " y=z=1 Catalan", Tier::Proved, [&] {
    Series want(M);
    for (int n = 0; n <= M; ++n) want[static_cast<size_t>(n)] = Rational(catalan(n));
    return first_difference(want, rwz_triseries(M).at_y_z_one());
  });
}

void scope_bijection(Runner& run) {
  for (int n = 0; n <= run.N(); ++n) {
    const auto avoiders = list_matching(avoiding({p132()}), n, Limits::unlimited_to(std::max(n, 1)));
    run.check("bijection.roundtrip", kv({{"n", n}}), Tier::Proved, [&]() -> Outcome {
      std::set<std::string> images;
      for (const auto& p : avoiders) {
        const DyckPath d = phi(p);
        if (phi_inverse(d) != p) return Mismatch{n, p.to_string(), phi_inverse(d).to_string()};
        images.insert(d.to_string());
      }
      std::set<std::string> all;
      for (const auto& d : all_dyck_paths(n)) all.insert(d.to_string());
      return require(images == all, std::to_string(all.size()) + " paths", std::to_string(images.size()) + " images");
    });
    run.check("bijection.height_law", kv({{"n", n}}), Tier::Proved, [&]() -> Outcome {
      for (const auto& p : avoiders) {
        const int h = max_height(phi(p)), lis = longest_increasing_subsequence(p.values());
        if (h != lis) return Mismatch{n, p.to_string() + " LIS " + std::to_string(lis), "height " + std::to_string(h)};
      }
      return std::nullopt;
    });
  }
  run.check("bijection.example", "534261", Tier::Proved, [&]() -> Outcome {
    const DyckPath d = phi(Permutation::parse("534261"));
    const std::string s = d.to_string();
    return require(max_height(d) == 3 && s.substr(0, 6) == "UUDUUD", "height 3, prefix UUDUUD",
                   "height " + std::to_string(max_height(d)) + ", path " + s);
  });
}

void scope_block(Runner& run) {
  for (int k = 1; k <= 5; ++k)
    for (const auto& tau : list_matching(avoiding({p132()}), k, Limits::unlimited_to(k)))
      run.series_check("block.recursion", tau.to_string(), Tier::Proved, [&] { return run.oracle(avoiding({p132(), tau})); },
                       [&] { return F_recursive(tau); });
  std::vector<Permutation> wedges;
  for (int k = 3; k <= 7; ++k)
    for (const auto& tau : list_matching(avoiding({p132()}), k, Limits::unlimited_to(k)))
      if (is_wedge(tau)) wedges.push_back(tau);
  wedges.push_back(Permutation::parse("645783912"));
  for (const auto& tau : wedges)
    run.check("block.recursion", "wedge " + tau.to_string() + " equals R", Tier::Proved,
              [&] { return compare(R(tau.size()), F_recursive(tau)); });
  for (int n = 1; n <= run.N(); ++n) {
    run.check("block.decomposition", kv({{"n", n}}) + " 132-avoiders", Tier::Proved, [&]() -> Outcome {
      for (const auto& p : list_matching(avoiding({p132()}), n, Limits::unlimited_to(n))) {
        const auto d = decompose_132_avoider(p);
        if (d.reassemble() != std::vector<int>(p.begin(), p.end())) return Mismatch{n, p.to_string(), "reassembly differs"};
      }
      return std::nullopt;
    });
    run.check("block.decomposition", kv({{"n", n}}) + " exactly one 132", Tier::Proved, [&]() -> Outcome {
      ConstraintSet cs;
      cs.exactly(1, p132());
      for (const auto& p : list_matching(cs, n, Limits::unlimited_to(n))) {
        const auto d = classify_exactly_once(p);
        if (d.reassemble() != std::vector<int>(p.begin(), p.end())) return Mismatch{n, p.to_string(), "reassembly differs"};
      }
      return std::nullopt;
    });
    if (n >= 2)
      run.check("block.decomposition", kv({{"n", n}}) + " L_4-avoiders", Tier::Proved, [&]() -> Outcome {
        ConstraintSet cs;
        for (const auto& q : Lp_set(4)) cs.avoid(q);
        for (const auto& p : list_matching(cs, n, Limits::unlimited_to(n))) {
          const auto d = l4_decompose(p);
          if (d.reassemble() != std::vector<int>(p.begin(), p.end())) return Mismatch{n, p.to_string(), "reassembly differs"};
        }
        return std::nullopt;
      });
  }
}

using ScopeFn = void (*)(Runner&);

const std::vector<std::pair<std::string, ScopeFn>>& scope_table() {
  static const std::vector<std::pair<std::string, ScopeFn>> t = {
      {"alt", scope_alt},           {"avoid", scope_avoid},   {"bijection", scope_bijection},
      {"block", scope_block},       {"cfrac", scope_cfrac},   {"cheb", scope_cheb},
      {"conjecture", scope_conjecture}, {"exact", scope_exact}, {"lp", scope_lp},
      {"one132", scope_one132},     {"transfer", scope_transfer}, {"triple", scope_triple},
  };
  return t;
}

}  // namespace

std::vector<std::string> verify_scopes() {
  std::vector<std::string> out{"all"};
  for (const auto& [name, fn] : scope_table()) out.push_back(name);
  return out;
}

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
  if (opts.N < 0) throw InvalidArgument("N must be nonnegative");
  if (opts.N > opts.limits.max_count_n)
    throw ResourceLimit("N = " + std::to_string(opts.N) + " exceeds the oracle cap " +
                        std::to_string(opts.limits.max_count_n));
  bool known = opts.scope == "all";
  Runner run(opts.N, opts.limits);
  for (const auto& [name, fn] : scope_table()) {
    if (opts.scope != "all" && opts.scope != name) continue;
    known = true;
    fn(run);
  }
  if (!known) throw InvalidArgument("unknown verify scope '" + opts.scope + "'");
  auto results = run.take();
  std::erase_if(results, [&](const CheckResult& r) {
    return (opts.tier == TierFilter::Proved && r.tier != Tier::Proved) ||
           (opts.tier == TierFilter::Experimental && r.tier != Tier::Experimental);
  });
  std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.id, a.params) < std::tie(b.id, b.params);
  });
  return results;
}

// ---------------------------------------------------------------- reports

std::string report_json(const std::vector<CheckResult>& results, bool timings) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["theorem"] = r.id;
    j["params"] = r.params;
    j["tier"] = to_string(r.tier);
    j["status"] = r.passed ? "pass" : "fail";
    if (r.first_mismatch)
      j["first_mismatch"] = {{"n", r.first_mismatch->n},
                             {"expected", r.first_mismatch->expected},
                             {"actual", r.first_mismatch->actual}};
    else
      j["first_mismatch"] = nullptr;
    if (timings) j["runtime_ms"] = r.runtime_ms;
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::string report_csv(const std::vector<CheckResult>& results, bool timings) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream os;
  os << "theorem,params,tier,status,n,expected,actual" << (timings ? ",runtime_ms" : "") << '\n';
  for (const auto& r : results) {
    os << r.id << ',' << quote(r.params) << ',' << to_string(r.tier) << ',' << (r.passed ? "pass" : "fail") << ',';
    if (r.first_mismatch)
      os << r.first_mismatch->n << ',' << quote(r.first_mismatch->expected) << ',' << quote(r.first_mismatch->actual);
    else
      os << ",,";
    if (timings) os << ',' << r.runtime_ms;
    os << '\n';
  }
  return os.str();
}

std::string report_text(const std::vector<CheckResult>& results, bool timings) {
  std::ostringstream os;
  size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    os << (r.passed ? "PASS " : "FAIL ") << r.id << " [" << r.params << "]";
    if (r.tier == Tier::Experimental) os << " (experimental)";
    if (timings) os << " " << r.runtime_ms << "ms";
    os << '\n';
    if (r.first_mismatch) {
      os << "     first mismatch";
      if (r.first_mismatch->n >= 0) os << " at n=" << r.first_mismatch->n;
      os << ": expected " << r.first_mismatch->expected << ", got " << r.first_mismatch->actual << '\n';
    }
  }
  os << passed << "/" << results.size() << " checks passed\n";
  return os.str();
}

}  // namespace permcheb
