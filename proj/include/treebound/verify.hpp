#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "treebound/bounds.hpp"
#include "treebound/enumerate.hpp"
#include "treebound/metric_dimension.hpp"

namespace treebound {

/// Equality-witness codes stored per theorem per order are capped at this
/// many entries; the counts stay exact.
inline constexpr int kWitnessCap = 100;

/// Everything computed for one isomorphism class during a sweep; maps 1:1 to
/// a CSV row.
struct SweepRow {
  int n = 0;
  std::string code;  // level sequence joined by '-'
  int eps = 0;       // value used for the bounds (brute force when computed)
  int eps_brute = -1;
  int eps_tree = -1;
  bool eps_disagree = false;
  long long m1 = 0;
  long long m2 = 0;
  double abc = 0.0;
  double abc_bound = 0.0;
  long long m1_lo = 0, m1_hi = 0, m2_lo = 0, m2_hi = 0;
  std::array<BoundEvaluation, 5> evals{};
  std::string viol_flags;  // 5 chars over {'.','V'}, theorem order
  std::string eq_flags;    // 5 chars over {'.','E'}
};

struct TheoremTally {
  long long violations = 0;
  long long equalities = 0;
  std::vector<std::string> violation_codes;
  std::vector<std::string> equality_codes;  // capped at kWitnessCap
};

struct Extremal {
  double min_value = 0.0;
  double max_value = 0.0;
  std::vector<std::string> min_codes;
  std::vector<std::string> max_codes;
};

struct VerificationReport {
  int n = 0;
  long long class_count = 0;
  EpsMethod eps_method = EpsMethod::Both;
  std::array<TheoremTally, 5> theorems;  // kTheorems order
  std::array<Extremal, 3> extremal;      // M1, M2, ABC
  long long eps_disagreements = 0;
  std::vector<std::string> disagreement_codes;
  double wall_seconds = 0.0;

  bool clean() const;  // no violations, no method disagreements
};

/// Rows for every isomorphism class of order n, in canonical-code order.
/// jobs: 1 = serial reference kernel, 0 or >1 = OpenMP kernel. Both kernels
/// produce identical rows; results are merged by enumeration index.
std::vector<SweepRow> compute_rows(int n, EpsMethod method, int jobs = 0);

VerificationReport verify_order(int n, EpsMethod method, int jobs = 0);

struct SweepResult {
  std::vector<VerificationReport> reports;
  bool clean() const;
};

/// Verifies every order in [min_n, max_n], appending one CSV row per tree to
/// csv_path (skipped when empty). Violations never abort the sweep; they are
/// tallied with witnesses and surfaced through SweepResult::clean().
SweepResult sweep(int min_n, int max_n, EpsMethod method,
                  const std::string& csv_path, int jobs = 0);

Extremal extremal_search(int n, TopoIndex index, int jobs = 0);

void write_csv_header(std::ostream& os);
void write_csv_rows(std::ostream& os, const std::vector<SweepRow>& rows,
                    EpsMethod method);
/// Per-order aggregate as key=value lines.
void write_summary(std::ostream& os, const VerificationReport& report);

std::string format_double(double v);  // 15 significant digits

}  // namespace treebound
