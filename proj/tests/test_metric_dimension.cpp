#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "treebound/enumerate.hpp"
#include "treebound/metric_dimension.hpp"

using namespace treebound;

TEST_CASE("is_resolving on fixtures") {
  const Tree p4 = Tree::path(4);
  CHECK(is_resolving(p4, std::vector<int>{0}));

  const Tree s4 = parse_edge_list("0 1\n1 2\n1 3");  // center 1
  CHECK_FALSE(is_resolving(s4, std::vector<int>{0}));
  CHECK(is_resolving(s4, std::vector<int>{0, 2}));

  CHECK_THROWS_AS(is_resolving(p4, std::vector<int>{7}), std::out_of_range);
  CHECK_THROWS_AS(is_resolving(p4, std::vector<int>{-1}), std::out_of_range);
}

TEST_CASE("brute force on paths and stars") {
  for (int n = 2; n <= 12; ++n) {
    const ResolvingResult r = metric_dimension_bruteforce(Tree::path(n));
    CHECK(r.eps == 1);
    CHECK(r.witness == std::vector<int>{0});
  }
  for (int n = 4; n <= 12; ++n) {
    const ResolvingResult r = metric_dimension_bruteforce(Tree::star(n));
    CHECK(r.eps == n - 2);
    // lexicographically first n-2 leaves of the star centered at 0
    std::vector<int> expected;
    for (int v = 1; v <= n - 2; ++v) expected.push_back(v);
    CHECK(r.witness == expected);
  }
  CHECK(metric_dimension_bruteforce(testutil::spider_3x2()).eps == 2);
}

TEST_CASE("tree formula on fixtures") {
  for (int n = 2; n <= 14; ++n) {
    CHECK(metric_dimension_tree(Tree::path(n)).eps == 1);
  }
  for (int n = 4; n <= 14; ++n) {
    const ResolvingResult r = metric_dimension_tree(Tree::star(n));
    CHECK(r.eps == n - 2);
    CHECK(static_cast<int>(r.witness.size()) == n - 2);
  }
  CHECK(metric_dimension_tree(testutil::double_star()).eps == 2);
  CHECK(metric_dimension_bruteforce(testutil::double_star()).eps == 2);
  CHECK(metric_dimension_tree(testutil::chair()).eps == 2);
}

TEST_CASE("degenerate and limit cases") {
  CHECK(metric_dimension_bruteforce(Tree(1, {})).eps == 0);
  CHECK(metric_dimension_bruteforce(Tree(1, {})).witness.empty());
  CHECK(metric_dimension_tree(Tree(1, {})).eps == 0);
  CHECK(metric_dimension_bruteforce(Tree::path(2)).eps == 1);
  CHECK_THROWS_AS(metric_dimension_bruteforce(Tree::path(17)),
                  std::domain_error);
  CHECK_NOTHROW(metric_dimension_tree(Tree::path(18)));
}

TEST_CASE("formula agrees with brute force on every class up to n=10") {
  for (int n = 2; n <= 10; ++n) {
    TreeEnumerator gen(n);
    while (auto t = gen.next()) {
      const ResolvingResult brute = metric_dimension_bruteforce(*t);
      const ResolvingResult formula = metric_dimension_tree(*t);
      CHECK(brute.eps == formula.eps);
      CHECK(is_resolving(*t, brute.witness));
      CHECK(is_resolving(*t, formula.witness));
      CHECK(static_cast<int>(formula.witness.size()) == formula.eps);
      CHECK(1 <= brute.eps);
      CHECK(brute.eps <= n - 1);
      // eps == 1 iff the tree is a path
      bool path_shaped = true;
      for (int v = 0; v < n; ++v) {
        if (t->degree(v) > 2) path_shaped = false;
      }
      CHECK((brute.eps == 1) == path_shaped);
    }
  }
}

TEST_CASE("leaf pruning does not change the result") {
  BruteForceOptions full;
  full.leaves_only = false;
  for (int n = 2; n <= 9; ++n) {
    TreeEnumerator gen(n);
    while (auto t = gen.next()) {
      const ResolvingResult pruned = metric_dimension_bruteforce(*t);
      const ResolvingResult unpruned = metric_dimension_bruteforce(*t, full);
      CHECK(pruned.eps == unpruned.eps);
      CHECK(is_resolving(*t, unpruned.witness));
    }
  }
}

TEST_CASE("adding vertices to a witness keeps it resolving") {
  for (int n = 2; n <= 9; ++n) {
    TreeEnumerator gen(n);
    while (auto t = gen.next()) {
      const DistanceMatrix dm(*t);
      const ResolvingResult r = metric_dimension_tree(*t);
      for (int extra = 0; extra < n; ++extra) {
        std::vector<int> bigger = r.witness;
        bigger.push_back(extra);
        std::sort(bigger.begin(), bigger.end());
        CHECK(is_resolving(dm, bigger));
      }
    }
  }
}

TEST_CASE("parallel subset search matches the serial reference") {
  BruteForceOptions parallel;
  parallel.jobs = 4;
  for (int n = 2; n <= 8; ++n) {
    TreeEnumerator gen(n);
    while (auto t = gen.next()) {
      const ResolvingResult serial = metric_dimension_bruteforce(*t);
      const ResolvingResult par = metric_dimension_bruteforce(*t, parallel);
      CHECK(serial.eps == par.eps);
      CHECK(serial.witness == par.witness);
    }
  }
  // larger fixtures where the rank space is actually split
  for (const Tree& t : {Tree::star(12), testutil::spider_3x2()}) {
    BruteForceOptions full_parallel;
    full_parallel.leaves_only = false;
    full_parallel.jobs = 4;
    BruteForceOptions full_serial;
    full_serial.leaves_only = false;
    const ResolvingResult serial = metric_dimension_bruteforce(t, full_serial);
    const ResolvingResult par = metric_dimension_bruteforce(t, full_parallel);
    CHECK(serial.eps == par.eps);
    CHECK(serial.witness == par.witness);
  }
}
