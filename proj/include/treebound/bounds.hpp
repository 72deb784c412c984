#pragma once

#include <array>
#include <string>

#include "treebound/invariants.hpp"

namespace treebound {

/// The five verified inequalities, in canonical reporting order.
enum class Theorem { AbcMax, M1Lower, M1Upper, M2Lower, M2Upper };

inline constexpr std::array<Theorem, 5> kTheorems = {
    Theorem::AbcMax, Theorem::M1Lower, Theorem::M1Upper, Theorem::M2Lower,
    Theorem::M2Upper};

std::string to_string(Theorem t);

/// Equality / violation tolerance for the ABC bound; the integer bounds are
/// compared exactly.
inline constexpr double kAbcTolerance = 1e-9;

/// ABC upper bound sqrt(n^2-3n+2) + (n-2-eps)(4/5 - 2/sqrt(5)).
/// Requires n >= 4 and 1 <= eps <= n-2 (stars attain eps = n-2, the maximum
/// over trees). The coefficient 4/5 - 2/sqrt(5) is negative, so the bound
/// decreases as eps falls below n-2.
double abc_max_bound(int n, int eps);

long long m1_lower(int n, int eps);  // 4n - 7 + eps
long long m1_upper(int n, int eps);  // n + (n-1)(n-2) + eps
long long m2_lower(int n, int eps);  // 4n + eps - 9
long long m2_upper(int n, int eps);  // n^2 - 3n + eps + 3

/// One inequality checked against one tree. slack is bound - observed for
/// upper bounds and observed - bound for lower bounds, so slack >= 0 means
/// the inequality holds.
struct BoundEvaluation {
  Theorem theorem = Theorem::AbcMax;
  double bound_value = 0.0;
  double observed = 0.0;
  double slack = 0.0;
  bool equality = false;
  bool violation = false;
};

/// Evaluates all five inequalities; requires rec.n >= 4.
std::array<BoundEvaluation, 5> evaluate_bounds(const InvariantRecord& rec);

// --- inequality audit functions -------------------------------------------

/// upsilon(x) = (x-1)sqrt((x-1)/x) - (x-2)sqrt((x-2)/(x-1)), x >= 3.
/// Positive on its domain.
double lemma_upsilon(double x);

/// g(x,y) = sqrt((x+y-2)/(xy)) - sqrt((x+y-3)/((x-1)y)), x >= 3, y >= 2.
/// Non-positive on its domain, zero exactly at y = 2.
double lemma_g(double x, double y);

/// F(x,y) = upsilon(x) + g(x,y), computed as that sum so the decomposition
/// identity holds bit-exactly. Exceeds sqrt(5)/(2 sqrt(2)) on its domain.
double lemma_f(double x, double y);

/// Threshold for lemma_f: sqrt(5)/(2 sqrt(2)).
double lemma_f_floor();

enum class Lemma { Upsilon = 1, G = 2, F = 3 };

struct LemmaGrid {
  double x_max = 300.0;  // x runs from 3 to x_max
  double y_max = 300.0;  // y runs from 2 to y_max (ignored for Upsilon)
  double step = 1.0;
};

struct LemmaScanReport {
  Lemma lemma = Lemma::Upsilon;
  long long points = 0;
  long long violations = 0;
  double min_value = 0.0, min_x = 0.0, min_y = 0.0;
  double max_value = 0.0, max_x = 0.0, max_y = 0.0;
  bool has_violation = false;
  double violation_x = 0.0, violation_y = 0.0, violation_value = 0.0;
  double threshold = 0.0;  // Upsilon: value > 0; G: value <= 0; F: value > floor
};

/// Evaluates one audit function over the grid, reporting extrema (ties going
/// to the lexicographically smallest grid point) and threshold violations.
/// jobs: 1 = serial reference path, 0 or >1 = parallel over grid rows.
LemmaScanReport lemma_scan(Lemma which, const LemmaGrid& grid, int jobs = 1);

}  // namespace treebound
