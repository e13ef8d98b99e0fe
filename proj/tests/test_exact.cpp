#include "doctest.h"
#include "permcheb/error.hpp"
#include "permcheb/exact.hpp"
#include "permcheb/multiseries.hpp"

using namespace permcheb;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

std::string str(const Series& s) { return s.to_string(); }

}  // namespace

TEST_CASE("binomial conventions") {
  CHECK(binomial(0, 2) == 0);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 2) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-1, 0) == 1);
  CHECK(binomial(-1, 3) == -1);
}

TEST_CASE("catalan and factorial") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(5) == 42);
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
}

TEST_CASE("polynomial arithmetic") {
  const Poly a = P({-1, 0, 1}), b = P({1, -2, 1});
  CHECK(gcd(a, b) == P({-1, 1}));
  CHECK(gcd(Poly(), Poly()).is_zero());
  auto [q, r] = divmod(a, P({-1, 1}));
  CHECK(q == P({1, 1}));
  CHECK(r.is_zero());
  CHECK(exact_div(a, P({1, 1})) == P({-1, 1}));
  CHECK_THROWS(exact_div(a, P({2, 1})));
  CHECK(P({1, -2, 1}).to_string() == "1 - 2*x + x^2");
  CHECK(P({0, 0, 3}).valuation() == 2);
  CHECK(Poly().degree() == -1);
  CHECK(P({1, 2}).eval(Rational(3)) == 7);
}

TEST_CASE("rational functions are canonical") {
  const RatFun f(P({1, -1}), P({1, -2}));
  CHECK(f.to_string() == "(1 - x)/(1 - 2*x)");
  CHECK(series_of(f, 5).to_string() == "1,1,2,4,8,16");
  // common factors cancel and the denominator is normalized
  CHECK(RatFun(P({-1, 0, 1}), P({-2, 2})) == RatFun(P({1, 1}), Poly(2)));
  CHECK(RatFun(P({0, 1}), P({0, 3})).denominator() == Poly(1));
  CHECK(RatFun(P({1}), P({0, 2})).denominator() == P({0, 1}));
  CHECK((f - f).is_zero());
  CHECK(f * f.inverse() == RatFun(1));
  CHECK(f.pow(-2) == (f * f).inverse());
  CHECK_THROWS_AS(RatFun(Poly(), Poly()), DivisionByZero);
  CHECK_THROWS_AS(series_of(RatFun(P({1}), P({0, 1})), 3), DivisionByZero);
}

TEST_CASE("series arithmetic truncates") {
  const Series a = series_of(RatFun(P({1}), P({1, -1})), 4);
  const Series b = series_of(P({1, 1}), 2);
  CHECK(str(a) == "1,1,1,1,1");
  CHECK(str(a * b) == "1,2,2");
  CHECK(str(a.truncated(2) + b) == "2,2,1");
  CHECK(str(series_from_counts({1, 1, 2, 5})) == "1,1,2,5");
}

TEST_CASE("bivariate series") {
  BiSeries f = BiSeries::one(4, 2);
  // 1/(1 - x z) through x^4, z^2
  const BiSeries g = (BiSeries::one(4, 2) - f.times_x_z(1)).inverse();
  CHECK(g.at(0, 0) == 1);
  CHECK(g.at(1, 1) == 1);
  CHECK(g.at(2, 2) == 1);
  CHECK(g.at(3, 2) == 0);
  CHECK(str(g.at_z_one()) == "1,1,1,0,0");
  CHECK(str(g.z_row(1)) == "0,1,0,0,0");
  CHECK(g * g.inverse() == BiSeries::one(4, 2));
  CHECK_THROWS(BiSeries(3, 2) + BiSeries(4, 2));
}

TEST_CASE("trivariate series") {
  TriSeries t = TriSeries::one(3, 3, 3);
  t.add(1, 1, 0, 2);
  CHECK(t.at(1, 1, 0) == 2);
  const TriSeries s = t.substitute_xy_yz();
  // x y becomes (xy)(yz) = x y^2 z
  CHECK(s.at(1, 2, 1) == 2);
  CHECK(t.times_x().at(2, 1, 0) == 2);
  CHECK(str(t.at_y_z_one()) == "1,2,0,0");
}
