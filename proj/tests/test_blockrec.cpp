#include "doctest.h"
#include "permcheb/blockrec.hpp"
#include "permcheb/chebyshev.hpp"
#include "permcheb/closed_forms.hpp"
#include "permcheb/error.hpp"
#include "permcheb/literal.hpp"
#include "permcheb/oracle.hpp"

using namespace permcheb;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
std::vector<int> V(const Permutation& p) { return {p.begin(), p.end()}; }
}  // namespace

TEST_CASE("avoider split") {
  const auto d = decompose_132_avoider(P("45312"));
  CHECK(d.kind == BlockDecomposition::Kind::AvoiderSplit);
  CHECK(d.parts[0].entries == std::vector<int>{4});
  CHECK(d.parts[1].entries == std::vector<int>{3, 1, 2});
  CHECK(d.reassemble() == V(P("45312")));
  CHECK(decompose_132_avoider(P("4123")).parts[0].entries.empty());
  CHECK_THROWS_AS(decompose_132_avoider(P("132")), InvalidArgument);
}

TEST_CASE("exactly one 132") {
  const auto d = classify_exactly_once(P("132"));
  CHECK(d.kind == BlockDecomposition::Kind::ExactlyOnceIII);
  for (const auto& part : d.parts) CHECK(part.entries.empty());
  CHECK(classify_exactly_once(P("1324")).reassemble() == V(P("1324")));
  CHECK_THROWS_AS(classify_exactly_once(P("123")), InvalidArgument);

  for (int n = 3; n <= 7; ++n) {
    int total = 0;
    for_each_matching(parse_constraints({"exactly:1:132"}), n, [&](const Permutation& p) {
      CHECK(classify_exactly_once(p).reassemble() == V(p));
      ++total;
    });
    CHECK(total > 0);
  }
}

TEST_CASE("L_4 decomposition") {
  CHECK(l4_decompose(P("12")).kind != l4_decompose(P("21")).kind);
  CHECK_THROWS_AS(l4_decompose(P("1324")), InvalidArgument);
  CHECK_THROWS_AS(l4_decompose(P("1")), InvalidArgument);
  for (int n = 2; n <= 7; ++n)
    for_each_matching(parse_constraints({"Lp:4"}), n,
                      [&](const Permutation& p) { CHECK(l4_decompose(p).reassemble() == V(p)); });
}

TEST_CASE("recursion") {
  CHECK(F_recursive(Permutation()) == RatFun(0));
  CHECK(F_recursive(P("1")) == RatFun(1));
  for (int k = 1; k <= 7; ++k) CHECK(F_recursive(Permutation::identity(k)) == R(k));
  for (int k = 2; k <= 6; ++k)
    for (int m = 1; m < k; ++m) CHECK(F_recursive(PatternSpec::two_layered(k, m).materialize()) == R(k));
  CHECK(F_recursive(P("3412")) == R(4));
  CHECK(F_recursive(P("645783912")) == R(9));
  CHECK(F_recursive(P("3421")) == F_three_layered(4, 2, 1));
  CHECK_THROWS_AS(F_recursive(P("132")), InvalidArgument);
}

TEST_CASE("recursion against the oracle for S_4(132)") {
  for (const auto& tau : list_matching(parse_constraints({"132"}), 4)) {
    ConstraintSet cs;
    cs.avoid(P("132")).avoid(tau);
    CHECK(series_of(F_recursive(tau), 8) == count_upto(cs, 8).series());
  }
}
