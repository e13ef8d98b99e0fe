#include "permcheb/catalog.hpp"

#include <algorithm>

#include "json.hpp"
#include "permcheb/blockrec.hpp"
#include "permcheb/chebyshev.hpp"
#include "permcheb/error.hpp"
#include "permcheb/literal.hpp"

namespace permcheb {

namespace {

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> v = {
      {"cheb.R", "R", "R_k = 2t U_{k-1}(t)/U_k(t) with t = 1/(2 sqrt x); R_k = 1/(1 - x R_{k-1})",
       {{"k", "k >= 0"}}, "R -k 4"},
      {"avoid.pair.132", "pair",
       "avoiding 132 and [k], [k,m] or a wedge pattern of length k is counted by R_k",
       {{"pattern", "id:k, tl:k,m or a 132-avoiding wedge"}}, "pair tl:3,1 --base 132"},
      {"avoid.pair.321", "pair", "avoiding 321 and [k,m] is counted by R_k",
       {{"pattern", "tl:k,m with 1 <= m <= k-1"}}, "pair tl:3,1 --base 321"},
      {"avoid.three_layered", "pair",
       "avoiding 132 and [k,m1,m2]: 2t(U_{a+b}U_{a+c-1}U_{b+c} + U_{b-1}U_b)/(U_{a+b}U_{a+c}U_{b+c}), "
       "a = k-m1, b = m1-m2, c = m2",
       {{"pattern", "layered:k,m1,m2 with k > m1 > m2 > 0"}}, "pair layered:4,2,1"},
      {"avoid.triple", "triple",
       "avoiding 132, [k,m] and [l]: R_l for l <= k-m, otherwise R_k - (x R_{k-m} R_m)^{l+m-k}(R_k - R_{k-m})",
       {{"k", "k - m >= m"}, {"m", "m >= 1"}, {"l", "l >= 1"}}, "triple -k 4 -m 1 -l 4"},
      {"exact.identity.single", "G", "exactly one [k] among 132-avoiders: 1/U_k^2",
       {{"pattern", "id:k, k >= 1"}, {"r", "r = 1"}}, "G id:3 -r 1 --route identity.single"},
      {"exact.identity.bounded_r", "G",
       "exactly r occurrences of [k] among 132-avoiders: U_{k-1}^{r-1}/((2t)^{r-1} U_k^{r+1})",
       {{"pattern", "id:k, k >= 1"}, {"r", "1 <= r <= k"}}, "G id:3 -r 2 --route identity.bounded_r"},
      {"exact.identity.extended_r", "G",
       "exactly r occurrences of [k]: the bounded form times sum_j C(r-kj+j-1, j)(2t)^{(k-2)j}(U_k/U_{k-1})^{kj}",
       {{"pattern", "id:k, k >= 1"}, {"r", "1 <= r <= k(k+3)/2"}}, "G id:3 -r 5 --route identity.extended_r"},
      {"exact.identity.any_r", "G",
       "exactly r occurrences of [k]: sum over l with sum_i l_i C(k+i-2, k-1) = r of products of binomials",
       {{"pattern", "id:k, k >= 2"}, {"r", "r >= 1"}}, "G id:3 -r 9 --route identity.any_r"},
      {"exact.k1.single", "G", "exactly one [k,1] among 132-avoiders: 1/(4t^2 U_{k-2} U_k)",
       {{"pattern", "tl:k,1, k >= 2"}, {"r", "r = 1"}}, "G tl:4,1 -r 1 --route k1.single"},
      {"exact.k1.divisor_sum", "G",
       "exactly r occurrences of [k,1]: sum over divisors l of r of c_l (2t)^{1-2l-r/l}(U_{k-3}/U_{k-2})^{r/l}/(U_{k-3}U_k)",
       {{"pattern", "tl:k,1, k >= 3"}, {"r", "1 <= r <= k-1"}}, "G tl:4,1 -r 2 --route k1.divisor_sum"},
      {"exact.two_layered.single", "G", "exactly one [k,m] among 132-avoiders: 1/(2t U_k U_m U_{k-m-1}) for 2m <= k, and the "
       "value for [k,k-m] otherwise",
       {{"pattern", "tl:k,m"}, {"r", "r = 1"}}, "G tl:4,2 -r 1 --route two_layered.single"},
      {"exact.321.k1", "G",
       "exactly r occurrences of [k,1] among 321-avoiders: U_{k-1}^{r-1}/((2t)^{r-1} U_k^{r+1})",
       {{"pattern", "tl:k,1, k >= 3"}, {"r", "1 <= r <= k"}}, "G tl:3,1 -r 1 --base 321 --route 321.k1"},
      {"exact.triple", "Gtriple", "avoiding 132 and [k,m] with exactly one [l]",
       {{"k", "k - m >= m"}, {"m", "m >= 1"}, {"l", "l >= 1"}}, "Gtriple -k 4 -m 1 -l 3"},
      {"one132.H", "H", "exactly one 132 and no [k] or [k,m]",
       {{"pattern", "id:k with k >= 3, or tl:k,m with k >= 3"}}, "H tl:4,2"},
      {"one132.phi", "phi", "exactly one 132 and exactly one [k], [k,1] or [k,k-1]",
       {{"pattern", "id:k, or tl:k,1 / tl:k,k-1 with k >= 4"}}, "phi id:3"},
      {"lp.general", "Lp",
       "avoiding L_p and [k]: sum_{i<=p-3} i! x^i + x^{p-2} R_k R_{k-1} sum_a N(a) prod_j R_{k-1-(a_1+..+a_j)}",
       {{"p", "p >= 4"}, {"k", "k >= p-2"}}, "Lp -p 5 -k 4"},
      {"lp.general_literal", "Lp_literal",
       "the L_p sum with R_{k-j-a_j} taken term by term; agrees with the counts at p = 4",
       {{"p", "p = 4"}, {"k", "k >= 2"}}, "Lp_literal -p 4 -k 4"},
      {"lp.L4.identity", "L4id", "avoiding L_4 and [k]: 1 + x + x^2 R_k R_{k-1}(R_{k-1} + R_{k-2})",
       {{"k", "k >= 2"}}, "L4id -k 4"},
      {"lp.L4.two_layered", "L4tl", "avoiding L_4 and [k,m]; [k,k-1] coincides with [k]",
       {{"k", "k >= 2"}, {"m", "1 <= m <= k-1"}}, "L4tl -k 4 -m 2"},
      {"block.recursion", "recursive",
       "avoiding 132 and tau from the prefix/suffix recursion over right-to-left maxima",
       {{"pattern", "any 132-avoiding tau"}}, "recursive 3412"},
  };
  std::sort(v.begin(), v.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });
  return v;
}

}  // namespace

const std::vector<CatalogEntry>& formula_catalog() {
  static const std::vector<CatalogEntry> c = build();
  return c;
}

std::string catalog_json() {
  nlohmann::ordered_json out;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : formula_catalog()) {
    nlohmann::ordered_json j;
    j["id"] = e.id;
    j["family"] = e.family;
    j["statement"] = e.statement;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& p : e.params) params[p.name] = p.range;
    j["params"] = params;
    j["cli"] = "permcheb formula " + e.cli;
    arr.push_back(j);
  }
  out["formulas"] = arr;
  return out.dump(2);
}

std::string catalog_text() {
  std::string s;
  for (const auto& e : formula_catalog()) {
    s += e.id + "\n  " + e.statement + "\n";
    for (const auto& p : e.params) s += "  " + p.name + ": " + p.range + "\n";
    s += "  permcheb formula " + e.cli + "\n";
  }
  return s;
}

namespace {

int need(const std::optional<int>& v, const std::string& family, const char* flag) {
  if (!v) throw InvalidArgument("family " + family + " needs " + flag);
  return *v;
}

PatternSpec need_pattern(const FormulaRequest& req) {
  if (!req.pattern) throw InvalidArgument("family " + req.family + " needs a pattern");
  return parse_pattern(*req.pattern);
}

}  // namespace

Route evaluate_formula(const FormulaRequest& req) {
  const std::string& f = req.family;
  if (f == "R") return {"cheb.R", R(need(req.k, f, "-k"))};
  if (f == "pair") {
    const PatternSpec tau = need_pattern(req);
    if (req.base == Base::P132 && shape_of(tau.materialize()).kind == PatternShape::Kind::ThreeLayered) {
      const auto s = shape_of(tau.materialize());
      return {"avoid.three_layered", F_three_layered(s.k, s.m, s.m2)};
    }
    return {"avoid.pair." + to_string(req.base), F_pair(req.base, tau)};
  }
  if (f == "G") {
    const PatternSpec tau = need_pattern(req);
    const int r = need(req.r, f, "-r");
    if (r == 0) return {"avoid.pair." + to_string(req.base), F_pair(req.base, tau)};
    if (!req.route) {
      RatFun value = G_exact(req.base, tau, r);
      return {"exact." + G_routes(req.base, tau, r).front().name, std::move(value)};
    }
    for (auto& route : G_routes(req.base, tau, r))
      if (route.name == *req.route) return {"exact." + route.name, route.value};
    throw OutOfStatedRange("route " + *req.route + " does not apply to " + tau.to_literal() + " with r = " +
                           std::to_string(r));
  }
  if (f == "triple") return {"avoid.triple", F_triple(need(req.k, f, "-k"), need(req.m, f, "-m"), need(req.l, f, "-l"))};
  if (f == "Gtriple")
    return {"exact.triple", G_triple(need(req.k, f, "-k"), need(req.m, f, "-m"), need(req.l, f, "-l"))};
  if (f == "H") return {"one132.H", H(need_pattern(req))};
  if (f == "phi") return {"one132.phi", Phi(need_pattern(req))};
  if (f == "Lp") return {"lp.general", F_Lp(need(req.p, f, "-p"), need(req.k, f, "-k"))};
  if (f == "Lp_literal") return {"lp.general_literal", F_Lp_literal(need(req.p, f, "-p"), need(req.k, f, "-k"))};
  if (f == "L4id") return {"lp.L4.identity", F_L4_identity(need(req.k, f, "-k"))};
  if (f == "L4tl") return {"lp.L4.two_layered", F_L4_two_layered(need(req.k, f, "-k"), need(req.m, f, "-m"))};
  if (f == "recursive") {
    const Permutation tau = need_pattern(req).materialize();
    if (contains(tau, base_pattern(Base::P132))) throw UnsupportedPattern("the recursion needs a 132-avoiding pattern");
    return {"block.recursion", F_recursive(tau)};
  }
  throw InvalidArgument("unknown formula family '" + f + "'");
}

}  // namespace permcheb
