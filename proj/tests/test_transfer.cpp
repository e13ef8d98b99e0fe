#include "doctest.h"
#include "permcheb/error.hpp"
#include "permcheb/literal.hpp"
#include "permcheb/oracle.hpp"
#include "permcheb/transfer.hpp"

using namespace permcheb;

TEST_CASE("matrices of the built-in trees") {
  CHECK(build_Ak(4).matrix == std::vector<std::vector<long>>{{1, 1}, {1, 2}});
  CHECK(tree_to_system(fibonacci_tree()).matrix == std::vector<std::vector<long>>{{0, 1}, {1, 1}});
  CHECK(tree_to_system(binary_tree()).matrix == std::vector<std::vector<long>>{{2}});
  CHECK_THROWS_AS(Ak_tree(2), InvalidArgument);
}

TEST_CASE("level counts") {
  CHECK(level_counts(fibonacci_tree(), 6).to_string() == "1,1,2,3,5,8,13");
  CHECK(level_counts(binary_tree(), 4).to_string() == "1,2,4,8,16");
}

TEST_CASE("determinant and cofactor ratio") {
  const auto sys = build_Ak(4);
  CHECK(transfer_determinant(sys).to_string() == "1 - 3*x + x^2");
  for (int r = 0; r < sys.size(); ++r)
    for (int s = 0; s < sys.size(); ++s) {
      const auto table = series_of_walks(sys, r, 15);
      const Series gf = series_of(walk_gf(sys, r, s), 15);
      for (int n = 0; n <= 15; ++n)
        CHECK(gf[static_cast<size_t>(n)] == Rational(table[static_cast<size_t>(n)][static_cast<size_t>(s)]));
    }
}

TEST_CASE("Dyck strips") {
  const auto s1 = closed_walk_series(dyck_strip_system(1), 0, 6);
  CHECK(s1[2] == 1);
  CHECK(s1[4] == 1);
  CHECK(s1[6] == 1);
  const auto s2 = closed_walk_series(dyck_strip_system(2), 0, 8);
  CHECK(s2[2] == 1);
  CHECK(s2[4] == 2);
  CHECK(s2[6] == 4);
  CHECK(s2[8] == 8);
}

TEST_CASE("A_k walks count S_n(123, (k-1)...21k)") {
  const auto sys = build_Ak(5);
  const Series closed = closed_walk_series(sys, sys.start, 8);
  CHECK(closed == count_upto(parse_constraints({"123", "43215"}), 8).series());
}

TEST_CASE("rule files") {
  const auto gt = GeneratingTree::parse("# comment\nroot: 1\n\n1 -> 2\n2 -> 1 2\n");
  CHECK(level_counts(gt, 6).to_string() == "1,1,2,3,5,8,13");
  CHECK(GeneratingTree::parse(gt.to_text()).rules == gt.rules);
  CHECK_THROWS_AS(GeneratingTree::parse("root: 1\n1 -> 2\n"), InvalidArgument);
  CHECK_THROWS_AS(GeneratingTree::parse("root: 1\n1 -> 1\n1 -> 1 1\n"), InvalidArgument);
  CHECK_THROWS_AS(GeneratingTree::parse("1 -> 1\n"), InvalidArgument);
  CHECK_THROWS_AS(build_Ak(4).index_of("9"), InvalidArgument);
}
