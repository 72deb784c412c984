#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "treebound/bounds.hpp"
#include "treebound/invariants.hpp"
#include "treebound/metric_dimension.hpp"

using namespace treebound;

TEST_CASE("abc_max_bound values") {
  CHECK(abc_max_bound(4, 2) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
  // sqrt(72) + 7 * (4/5 - 2/sqrt(5)), frozen from independent evaluation
  CHECK(abc_max_bound(10, 1) ==
        doctest::Approx(7.824291037239159).epsilon(1e-13));
  // independent route: star term first, as a product under one square root
  const double alt =
      std::sqrt((10.0 - 1.0) * (10.0 - 2.0)) +
      (10.0 - 2.0 - 1.0) * (4.0 / 5.0 - 2.0 / std::sqrt(5.0));
  CHECK(abc_max_bound(10, 1) == doctest::Approx(alt).epsilon(1e-13));
}

TEST_CASE("star equality line for the abc bound, n up to 1000") {
  for (int n = 4; n <= 1000; ++n) {
    const double star = std::sqrt((n - 1.0) * (n - 2.0));
    CHECK(abc_max_bound(n, n - 2) == doctest::Approx(star).epsilon(1e-12));
  }
}

TEST_CASE("integer bound functions") {
  CHECK(m1_lower(4, 1) == 10);
  CHECK(m1_upper(4, 2) == 12);
  CHECK(m2_lower(4, 1) == 8);
  CHECK(m2_upper(4, 2) == 9);
  for (int n = 4; n <= 1000; ++n) {
    CHECK(m1_upper(n, n - 2) == static_cast<long long>(n) * (n - 1));
    CHECK(m2_upper(n, n - 2) ==
          static_cast<long long>(n - 1) * (n - 1));
    CHECK(m1_lower(n, 1) == 4LL * n - 6);
    CHECK(m2_lower(n, 1) == 4LL * n - 8);
    if (n >= 4 && n <= 900) {
      CHECK(static_cast<double>(m1_lower(n, 1)) ==
            closed_form(Family::Path, TopoIndex::M1, n));
      CHECK(static_cast<double>(m2_lower(n, 1)) ==
            closed_form(Family::Path, TopoIndex::M2, n));
      CHECK(static_cast<double>(m1_upper(n, n - 2)) ==
            closed_form(Family::Star, TopoIndex::M1, n));
      CHECK(static_cast<double>(m2_upper(n, n - 2)) ==
            closed_form(Family::Star, TopoIndex::M2, n));
    }
  }
}

TEST_CASE("bound domain checks") {
  CHECK_THROWS_AS(abc_max_bound(3, 1), std::domain_error);
  CHECK_THROWS_AS(abc_max_bound(6, 5), std::domain_error);  // eps > n-2
  CHECK_THROWS_AS(abc_max_bound(6, 0), std::domain_error);
  CHECK_THROWS_AS(m1_lower(2, 1), std::domain_error);
  CHECK_THROWS_AS(m2_upper(10, 9), std::domain_error);
}

TEST_CASE("evaluate_bounds on the order-4 trees") {
  const Tree p4 = Tree::path(4);
  const InvariantRecord path_rec{4, 1, first_zagreb(p4), second_zagreb(p4),
                                 abc_index(p4)};
  const auto path_evals = evaluate_bounds(path_rec);
  // AbcMax, M1Lower, M1Upper, M2Lower, M2Upper
  const bool path_eq[5] = {false, true, false, true, true};
  for (int i = 0; i < 5; ++i) {
    CHECK_FALSE(path_evals[i].violation);
    CHECK(path_evals[i].equality == path_eq[i]);
    CHECK(path_evals[i].slack >= 0.0);
  }

  const Tree s4 = Tree::star(4);
  const InvariantRecord star_rec{4, 2, first_zagreb(s4), second_zagreb(s4),
                                 abc_index(s4)};
  const auto star_evals = evaluate_bounds(star_rec);
  const bool star_eq[5] = {true, false, true, true, true};
  for (int i = 0; i < 5; ++i) {
    CHECK_FALSE(star_evals[i].violation);
    CHECK(star_evals[i].equality == star_eq[i]);
  }
}

TEST_CASE("evaluate_bounds on the order-5 chair") {
  const Tree t = testutil::chair();
  const int eps = metric_dimension_bruteforce(t).eps;
  CHECK(eps == 2);
  const InvariantRecord rec{5, eps, first_zagreb(t), second_zagreb(t),
                            abc_index(t)};
  CHECK(rec.m1 == 16);
  const auto evals = evaluate_bounds(rec);
  CHECK(evals[1].theorem == Theorem::M1Lower);
  CHECK(evals[1].bound_value == 15.0);
  CHECK(evals[1].slack == 1.0);
  CHECK_FALSE(evals[1].equality);
}

TEST_CASE("evaluate_bounds rejects n below 4") {
  CHECK_THROWS_AS(evaluate_bounds(InvariantRecord{3, 1, 8, 4, 1.4}),
                  std::domain_error);
}

TEST_CASE("audit function values") {
  CHECK(lemma_upsilon(3.0) ==
        doctest::Approx(0.9258863806689045).epsilon(1e-14));
  CHECK(lemma_g(3.0, 2.0) == 0.0);
  CHECK(lemma_g(3.0, 1e6) ==
        doctest::Approx(-0.12975622332185943).epsilon(1e-13));
  CHECK(lemma_f(3.0, 300.0) ==
        doctest::Approx(0.79709131857893933).epsilon(1e-13));
  CHECK(lemma_f_floor() ==
        doctest::Approx(0.79056941504209477).epsilon(1e-15));
  CHECK_THROWS_AS(lemma_upsilon(2.5), std::domain_error);
  CHECK_THROWS_AS(lemma_g(3.0, 1.5), std::domain_error);
  CHECK_THROWS_AS(lemma_g(2.0, 3.0), std::domain_error);
}

TEST_CASE("decomposition identity holds bit-exactly") {
  for (int x = 3; x <= 40; ++x) {
    for (int y = 2; y <= 40; ++y) {
      CHECK(lemma_f(x, y) == lemma_upsilon(x) + lemma_g(x, y));
    }
  }
}

TEST_CASE("scan: upsilon positive on [3, 10000]") {
  LemmaGrid grid;
  grid.x_max = 10000.0;
  const LemmaScanReport rep = lemma_scan(Lemma::Upsilon, grid);
  CHECK(rep.points == 9998);
  CHECK(rep.violations == 0);
  CHECK_FALSE(rep.has_violation);
  CHECK(rep.min_x == 3.0);
  CHECK(rep.min_value == lemma_upsilon(3.0));
  CHECK(rep.min_value > 0.0);
}

TEST_CASE("scan: g non-positive with maximum 0 on the y=2 line") {
  LemmaGrid grid;  // [3,300] x [2,300]
  const LemmaScanReport rep = lemma_scan(Lemma::G, grid);
  CHECK(rep.points == 298LL * 299LL);
  CHECK(rep.violations == 0);
  CHECK(rep.max_value == 0.0);
  CHECK(rep.max_x == 3.0);
  CHECK(rep.max_y == 2.0);
  CHECK(rep.min_value < 0.0);
}

TEST_CASE("scan: F stays above its floor with minimum at (3, 300)") {
  LemmaGrid grid;
  const LemmaScanReport rep = lemma_scan(Lemma::F, grid);
  CHECK(rep.violations == 0);
  CHECK(rep.min_x == 3.0);
  CHECK(rep.min_y == 300.0);
  CHECK(rep.min_value == lemma_f(3.0, 300.0));
  CHECK(rep.min_value > lemma_f_floor());
}

TEST_CASE("scan: parallel rows match the serial reference") {
  LemmaGrid grid;
  grid.x_max = 120.0;
  grid.y_max = 120.0;
  for (Lemma which : {Lemma::Upsilon, Lemma::G, Lemma::F}) {
    const LemmaScanReport serial = lemma_scan(which, grid, /*jobs=*/1);
    const LemmaScanReport parallel = lemma_scan(which, grid, /*jobs=*/4);
    CHECK(serial.points == parallel.points);
    CHECK(serial.violations == parallel.violations);
    CHECK(serial.min_value == parallel.min_value);
    CHECK(serial.min_x == parallel.min_x);
    CHECK(serial.min_y == parallel.min_y);
    CHECK(serial.max_value == parallel.max_value);
    CHECK(serial.max_x == parallel.max_x);
    CHECK(serial.max_y == parallel.max_y);
  }
}

TEST_CASE("scan: real-step grids") {
  LemmaGrid grid;
  grid.x_max = 10.0;
  grid.y_max = 10.0;
  grid.step = 0.5;
  const LemmaScanReport rep = lemma_scan(Lemma::F, grid);
  CHECK(rep.points == 15 * 17);
  CHECK(rep.violations == 0);
  CHECK(rep.min_value > lemma_f_floor());
}

TEST_CASE("scan: bad grids are rejected") {
  LemmaGrid empty;
  empty.x_max = 2.0;
  CHECK_THROWS_AS(lemma_scan(Lemma::Upsilon, empty), std::domain_error);
  LemmaGrid bad_step;
  bad_step.step = 0.0;
  CHECK_THROWS_AS(lemma_scan(Lemma::F, bad_step), std::domain_error);
  LemmaGrid no_y;
  no_y.y_max = 1.0;
  CHECK_THROWS_AS(lemma_scan(Lemma::G, no_y), std::domain_error);
}
