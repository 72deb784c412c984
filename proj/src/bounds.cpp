#include "treebound/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "treebound/parallel.hpp"

namespace treebound {

namespace {

void check_bound_domain(int n, int eps) {
  if (n < 4) {
    throw std::domain_error("bounds are stated for n >= 4, got n=" +
                            std::to_string(n));
  }
  if (eps < 1 || eps > n - 2) {
    throw std::domain_error("eps must be in [1, n-2], got eps=" +
                            std::to_string(eps) + " for n=" +
                            std::to_string(n));
  }
}

BoundEvaluation eval_integer(Theorem which, long long bound, long long observed,
                             bool lower) {
  BoundEvaluation e;
  e.theorem = which;
  e.bound_value = static_cast<double>(bound);
  e.observed = static_cast<double>(observed);
  const long long slack = lower ? observed - bound : bound - observed;
  e.slack = static_cast<double>(slack);
  e.equality = slack == 0;
  e.violation = slack < 0;
  return e;
}

}  // namespace

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::AbcMax:
      return "AbcMax";
    case Theorem::M1Lower:
      return "M1Lower";
    case Theorem::M1Upper:
      return "M1Upper";
    case Theorem::M2Lower:
      return "M2Lower";
    case Theorem::M2Upper:
      return "M2Upper";
  }
  return "?";
}

double abc_max_bound(int n, int eps) {
  check_bound_domain(n, eps);
  const double nd = n;
  const double coef = 4.0 / 5.0 - 2.0 / std::sqrt(5.0);
  return std::sqrt(nd * nd - 3.0 * nd + 2.0) + (nd - 2.0 - eps) * coef;
}

long long m1_lower(int n, int eps) {
  check_bound_domain(n, eps);
  return 4LL * n - 7 + eps;
}

long long m1_upper(int n, int eps) {
  check_bound_domain(n, eps);
  return static_cast<long long>(n) +
         static_cast<long long>(n - 1) * (n - 2) + eps;
}

long long m2_lower(int n, int eps) {
  check_bound_domain(n, eps);
  return 4LL * n + eps - 9;
}

long long m2_upper(int n, int eps) {
  check_bound_domain(n, eps);
  return static_cast<long long>(n) * n - 3LL * n + eps + 3;
}

std::array<BoundEvaluation, 5> evaluate_bounds(const InvariantRecord& rec) {
  std::array<BoundEvaluation, 5> out;

  BoundEvaluation& abc = out[0];
  abc.theorem = Theorem::AbcMax;
  abc.bound_value = abc_max_bound(rec.n, rec.eps);
  abc.observed = rec.abc;
  abc.slack = abc.bound_value - abc.observed;
  abc.equality = std::fabs(abc.slack) <= kAbcTolerance;
  abc.violation = abc.slack < -kAbcTolerance;

  out[1] = eval_integer(Theorem::M1Lower, m1_lower(rec.n, rec.eps), rec.m1,
                        /*lower=*/true);
  out[2] = eval_integer(Theorem::M1Upper, m1_upper(rec.n, rec.eps), rec.m1,
                        /*lower=*/false);
  out[3] = eval_integer(Theorem::M2Lower, m2_lower(rec.n, rec.eps), rec.m2,
                        /*lower=*/true);
  out[4] = eval_integer(Theorem::M2Upper, m2_upper(rec.n, rec.eps), rec.m2,
                        /*lower=*/false);
  return out;
}

double lemma_upsilon(double x) {
  if (x < 3.0) throw std::domain_error("upsilon requires x >= 3");
  return (x - 1.0) * std::sqrt((x - 1.0) / x) -
         (x - 2.0) * std::sqrt((x - 2.0) / (x - 1.0));
}

double lemma_g(double x, double y) {
  if (x < 3.0 || y < 2.0) throw std::domain_error("g requires x >= 3, y >= 2");
  return std::sqrt((x + y - 2.0) / (x * y)) -
         std::sqrt((x + y - 3.0) / ((x - 1.0) * y));
}

double lemma_f(double x, double y) { return lemma_upsilon(x) + lemma_g(x, y); }

double lemma_f_floor() { return std::sqrt(5.0) / (2.0 * std::sqrt(2.0)); }

namespace {

struct ScanCell {
  double value = 0.0;
  double x = 0.0;
  double y = 0.0;
};

// Row-level scan state; rows are merged serially in x order, so the result
// is identical for every worker count.
struct RowResult {
  ScanCell min, max;
  long long points = 0;
  long long violations = 0;
  bool has_violation = false;
  ScanCell first_violation;
};

bool violates(Lemma which, double value, double floor) {
  switch (which) {
    case Lemma::Upsilon:
      return !(value > 0.0);
    case Lemma::G:
      return value > 0.0;
    case Lemma::F:
      return !(value > floor);
  }
  return false;
}

RowResult scan_row(Lemma which, double x, const LemmaGrid& grid, double floor) {
  RowResult row;
  const bool univariate = which == Lemma::Upsilon;
  const long long ny =
      univariate ? 1
                 : static_cast<long long>(
                       std::floor((grid.y_max - 2.0) / grid.step)) +
                       1;
  for (long long j = 0; j < ny; ++j) {
    const double y = univariate ? 0.0 : 2.0 + j * grid.step;
    double value = 0.0;
    switch (which) {
      case Lemma::Upsilon:
        value = lemma_upsilon(x);
        break;
      case Lemma::G:
        value = lemma_g(x, y);
        break;
      case Lemma::F:
        value = lemma_f(x, y);
        break;
    }
    const ScanCell cell{value, x, y};
    if (row.points == 0 || value < row.min.value) row.min = cell;
    if (row.points == 0 || value > row.max.value) row.max = cell;
    ++row.points;
    if (violates(which, value, floor)) {
      ++row.violations;
      if (!row.has_violation) {
        row.has_violation = true;
        row.first_violation = cell;
      }
    }
  }
  return row;
}

}  // namespace

LemmaScanReport lemma_scan(Lemma which, const LemmaGrid& grid, int jobs) {
  if (grid.step <= 0.0) throw std::domain_error("grid step must be positive");
  if (grid.x_max < 3.0 || (which != Lemma::Upsilon && grid.y_max < 2.0)) {
    throw std::domain_error("empty grid: need x_max >= 3 and y_max >= 2");
  }
  const long long nx =
      static_cast<long long>(std::floor((grid.x_max - 3.0) / grid.step)) + 1;

  const double floor_value = lemma_f_floor();
  std::vector<RowResult> rows(static_cast<std::size_t>(nx));
  const int workers = resolve_jobs(jobs);
  if (workers == 1) {
    for (long long i = 0; i < nx; ++i) {
      rows[i] = scan_row(which, 3.0 + i * grid.step, grid, floor_value);
    }
  } else {
#pragma omp parallel for num_threads(workers) schedule(static)
    for (long long i = 0; i < nx; ++i) {
      rows[i] = scan_row(which, 3.0 + i * grid.step, grid, floor_value);
    }
  }

  LemmaScanReport rep;
  rep.lemma = which;
  rep.threshold = which == Lemma::F ? floor_value : 0.0;
  for (const RowResult& row : rows) {
    if (rep.points == 0 || row.min.value < rep.min_value) {
      rep.min_value = row.min.value;
      rep.min_x = row.min.x;
      rep.min_y = row.min.y;
    }
    if (rep.points == 0 || row.max.value > rep.max_value) {
      rep.max_value = row.max.value;
      rep.max_x = row.max.x;
      rep.max_y = row.max.y;
    }
    rep.points += row.points;
    rep.violations += row.violations;
    if (row.has_violation && !rep.has_violation) {
      rep.has_violation = true;
      rep.violation_x = row.first_violation.x;
      rep.violation_y = row.first_violation.y;
      rep.violation_value = row.first_violation.value;
    }
  }
  return rep;
}

}  // namespace treebound
