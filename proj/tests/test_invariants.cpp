#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "test_util.hpp"
#include "treebound/enumerate.hpp"
#include "treebound/invariants.hpp"

using namespace treebound;

TEST_CASE("zagreb indices on fixtures") {
  const Tree p4 = Tree::path(4);
  CHECK(first_zagreb(p4) == 10);
  CHECK(second_zagreb(p4) == 8);

  const Tree s4 = Tree::star(4);
  CHECK(first_zagreb(s4) == 12);
  CHECK(second_zagreb(s4) == 9);

  const Tree edge = Tree::path(2);
  CHECK(first_zagreb(edge) == 2);
  CHECK(second_zagreb(edge) == 1);
}

TEST_CASE("abc index on fixtures") {
  CHECK(abc_index(Tree::star(4)) ==
        doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
  CHECK(abc_index(Tree::path(2)) == 0.0);  // radicand (1+1-2)/1 is zero
  for (int n = 3; n <= 20; ++n) {
    // every path edge contributes sqrt(1/2)
    CHECK(abc_index(Tree::path(n)) ==
          doctest::Approx((n - 1) / std::sqrt(2.0)).epsilon(1e-12));
  }
}

TEST_CASE("closed forms match direct computation for n in [3, 50]") {
  for (int n = 3; n <= 50; ++n) {
    const Tree path = Tree::path(n);
    const Tree star = Tree::star(n);
    CHECK(closed_form(Family::Path, TopoIndex::M1, n) ==
          static_cast<double>(first_zagreb(path)));
    CHECK(closed_form(Family::Path, TopoIndex::M2, n) ==
          static_cast<double>(second_zagreb(path)));
    CHECK(closed_form(Family::Star, TopoIndex::M1, n) ==
          static_cast<double>(first_zagreb(star)));
    CHECK(closed_form(Family::Star, TopoIndex::M2, n) ==
          static_cast<double>(second_zagreb(star)));
    CHECK(closed_form(Family::Path, TopoIndex::Abc, n) ==
          doctest::Approx(abc_index(path)).epsilon(1e-12));
    CHECK(closed_form(Family::Star, TopoIndex::Abc, n) ==
          doctest::Approx(abc_index(star)).epsilon(1e-12));
    // the 2n-8 path M2 form is wrong at every order
    CHECK(second_zagreb(path) != 2 * n - 8);
    CHECK(second_zagreb(path) == 4 * n - 8);
  }
}

TEST_CASE("closed form examples") {
  CHECK(closed_form(Family::Star, TopoIndex::M1, 4) == 12.0);
  CHECK(closed_form(Family::Path, TopoIndex::M2, 4) == 8.0);
  CHECK(closed_form(Family::Star, TopoIndex::Abc, 4) ==
        doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
  CHECK_THROWS_AS(closed_form(Family::Path, TopoIndex::M1, 2),
                  std::domain_error);
}

TEST_CASE("handshake identity and degree-multiset consistency") {
  for (int n = 2; n <= 12; ++n) {
    TreeEnumerator gen(n);
    while (auto t = gen.next()) {
      long long m1_from_edges = 0;
      for (const auto& [u, v] : t->edges()) {
        m1_from_edges += t->degree(u) + t->degree(v);
      }
      CHECK(first_zagreb(*t) == m1_from_edges);

      std::map<int, int> multiset;
      for (int d : degrees(*t)) ++multiset[d];
      long long m1_from_multiset = 0;
      for (const auto& [d, count] : multiset) {
        m1_from_multiset += static_cast<long long>(d) * d * count;
      }
      CHECK(first_zagreb(*t) == m1_from_multiset);
    }
  }
}

TEST_CASE("abc vanishes only below three vertices") {
  CHECK(abc_index(Tree(1, {})) == 0.0);
  CHECK(abc_index(Tree::path(2)) == 0.0);
  for (int n = 3; n <= 9; ++n) {
    TreeEnumerator gen(n);
    while (auto t = gen.next()) CHECK(abc_index(*t) > 0.0);
  }
}

TEST_CASE("abc accumulation is deterministic") {
  const Tree t = testutil::spider_3x2();
  const double first = abc_index(t);
  for (int i = 0; i < 10; ++i) CHECK(abc_index(t) == first);
}
