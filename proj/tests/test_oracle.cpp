#include "doctest.h"
#include "permcheb/error.hpp"
#include "permcheb/literal.hpp"
#include "permcheb/oracle.hpp"

using namespace permcheb;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<std::string> strings(const std::vector<Permutation>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}
}  // namespace

TEST_CASE("listing") {
  ConstraintSet cs;
  cs.avoid(P("132"));
  CHECK(strings(list_matching(cs, 3)) == std::vector<std::string>{"123", "213", "231", "312", "321"});
  ConstraintSet twelve;
  twelve.avoid(P("12"));
  CHECK(strings(list_matching(twelve, 4)) == std::vector<std::string>{"4321"});
  CHECK(list_matching(ConstraintSet{}, 0).size() == 1);
}

TEST_CASE("counts of classical classes") {
  ConstraintSet cs;
  cs.avoid(P("132"));
  const auto t = count_upto(cs, 8);
  for (int n = 0; n <= 8; ++n) CHECK(Integer(static_cast<unsigned long>(t.counts[static_cast<size_t>(n)])) == catalan(n));
  CHECK(count_upto(ConstraintSet{}, 6).counts.back() == 720);
  ConstraintSet none;
  none.exactly(1, P("21"));
  // exactly one inversion: n - 1 adjacent transpositions
  CHECK(count_upto(none, 6).counts == std::vector<std::uint64_t>{0, 0, 1, 2, 3, 4, 5});
  ConstraintSet many;
  many.add(P("21"), Quantifier::at_least(1));
  CHECK(count_upto(many, 4).counts == std::vector<std::uint64_t>{0, 0, 1, 5, 23});
}

TEST_CASE("occurrence profile rows partition the class") {
  ConstraintSet cs;
  cs.avoid(P("132"));
  const auto prof = occurrence_profile(cs, P("123"), 30, 6);
  const auto total = count_upto(cs, 6).counts;
  for (int n = 0; n <= 6; ++n) {
    std::uint64_t sum = 0;
    for (const auto& row : prof) sum += row[static_cast<size_t>(n)];
    CHECK(sum == total[static_cast<size_t>(n)]);
  }
  CHECK(prof[0] == count_upto(parse_constraints({"avoid:132", "avoid:123"}), 6).counts);
}

TEST_CASE("resource caps") {
  ConstraintSet cs;
  cs.avoid(P("132"));
  CHECK_THROWS_AS(count_upto(cs, 13, Limits{12, 10}), ResourceLimit);
  CHECK_THROWS_AS(list_matching(cs, 11, Limits{12, 10}), ResourceLimit);
  CHECK_NOTHROW(count_upto(cs, 5, Limits{5, 5}));
}

TEST_CASE("N(a) table") {
  const auto t = count_N_of_a(4);
  CHECK(t.size() == 2);
  CHECK(t.at({0}) == 1);
  CHECK(t.at({1}) == 1);
  std::uint64_t total = 0;
  for (const auto& [a, c] : count_N_of_a(6)) total += c;
  CHECK(total == 24);
  CHECK_THROWS_AS(count_N_of_a(3), InvalidArgument);
}

TEST_CASE("json and csv") {
  ConstraintSet cs;
  cs.avoid(P("12"));
  const auto t = count_upto(cs, 2);
  CHECK(t.to_json() == R"({"constraint":"avoid:12","counts":[1,1,1]})");
  CHECK(t.to_csv() == "n,count\n0,1\n1,1\n2,1\n");
}
