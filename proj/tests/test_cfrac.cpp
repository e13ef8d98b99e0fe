#include "doctest.h"
#include "permcheb/cfrac.hpp"
#include "permcheb/closed_forms.hpp"
#include "permcheb/error.hpp"
#include "permcheb/literal.hpp"
#include "permcheb/oracle.hpp"

using namespace permcheb;

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(CFSpec({0, 5, 5, 2}).validate(), InvalidArgument);
  CHECK_THROWS_AS(CFSpec({3, 2, 5, 2}).validate(), InvalidArgument);
  CHECK_NOTHROW(CFSpec({3, 5, 5, 2}).validate());
}

TEST_CASE("z = 1 gives the Catalan numbers") {
  const Series s = cf_biseries(CFSpec{2, 8, 8, 28}).at_z_one();
  for (int n = 0; n <= 8; ++n) CHECK(s[static_cast<size_t>(n)] == Rational(catalan(n)));
}

TEST_CASE("rows match occurrence counts") {
  const auto prof = occurrence_profile(parse_constraints({"132"}), Permutation::parse("123"), 3, 8);
  const BiSeries cf = cf_biseries(CFSpec{3, 8, 8, 3});
  for (int r = 0; r <= 3; ++r) CHECK(cf.z_row(r) == series_from_counts(prof[static_cast<size_t>(r)]));
  CHECK(cf.z_row(1) == series_of(G_exact(Base::P132, PatternSpec::identity(3), 1), 8));
}

TEST_CASE("joint distribution") {
  const TriSeries f = rwz_triseries(6);
  const BiSeries at_y1 = f.at_y_one();
  CHECK(at_y1 == cf_biseries(CFSpec{3, 6, 6, at_y1.z_order()}));
  // (12, 123) occurrences over S_3(132): 123 (3,1), 213 (2,0), 231 (1,0), 312 (1,0), 321 (0,0)
  CHECK(f.at(3, 3, 1) == 1);
  CHECK(f.at(3, 2, 0) == 1);
  CHECK(f.at(3, 1, 0) == 2);
  CHECK(f.at(3, 0, 0) == 1);
  CHECK_THROWS(rwz_triseries(11));
}

TEST_CASE("serialization") {
  const BiSeries cf = cf_biseries(CFSpec{2, 2, 2, 1});
  CHECK(biseries_csv(cf).rfind("n,r,count\n", 0) == 0);
  CHECK(biseries_json(cf).find("\"rows\"") != std::string::npos);
}
