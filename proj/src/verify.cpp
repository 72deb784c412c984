#include "treebound/verify.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "treebound/parallel.hpp"

namespace treebound {

namespace {

SweepRow compute_row(const CanonicalCode& code, int n, EpsMethod method) {
  const Tree t = Tree::from_level_sequence(code.levels);
  SweepRow row;
  row.n = n;
  row.code = code.to_string();

  if (method == EpsMethod::BruteForce || method == EpsMethod::Both) {
    row.eps_brute = metric_dimension_bruteforce(t).eps;
  }
  if (method == EpsMethod::TreeFormula || method == EpsMethod::Both) {
    row.eps_tree = metric_dimension_tree(t).eps;
  }
  row.eps = row.eps_brute >= 0 ? row.eps_brute : row.eps_tree;
  row.eps_disagree = method == EpsMethod::Both && row.eps_brute != row.eps_tree;

  row.m1 = first_zagreb(t);
  row.m2 = second_zagreb(t);
  row.abc = abc_index(t);

  const InvariantRecord rec{n, row.eps, row.m1, row.m2, row.abc};
  row.evals = evaluate_bounds(rec);
  row.abc_bound = row.evals[0].bound_value;
  row.m1_lo = m1_lower(n, row.eps);
  row.m1_hi = m1_upper(n, row.eps);
  row.m2_lo = m2_lower(n, row.eps);
  row.m2_hi = m2_upper(n, row.eps);

  row.viol_flags.assign(5, '.');
  row.eq_flags.assign(5, '.');
  for (int i = 0; i < 5; ++i) {
    if (row.evals[i].violation) row.viol_flags[i] = 'V';
    if (row.evals[i].equality) row.eq_flags[i] = 'E';
  }
  return row;
}

void check_order_range(int n, EpsMethod method) {
  if (n < 4 || n > kMaxEnumerationOrder) {
    throw std::domain_error("verification order must be in [4, " +
                            std::to_string(kMaxEnumerationOrder) + "]");
  }
  if ((method == EpsMethod::BruteForce || method == EpsMethod::Both) &&
      n > kMaxBruteForceOrder) {
    throw std::domain_error("eps method '" + to_string(method) +
                            "' is limited to n <= " +
                            std::to_string(kMaxBruteForceOrder));
  }
}

VerificationReport aggregate(int n, EpsMethod method,
                             const std::vector<SweepRow>& rows) {
  VerificationReport rep;
  rep.n = n;
  rep.eps_method = method;
  rep.class_count = static_cast<long long>(rows.size());

  for (int i = 0; i < 3; ++i) {
    rep.extremal[i].min_codes.clear();
    rep.extremal[i].max_codes.clear();
  }
  bool first = true;
  for (const SweepRow& row : rows) {
    for (int i = 0; i < 5; ++i) {
      TheoremTally& tally = rep.theorems[i];
      if (row.evals[i].violation) {
        ++tally.violations;
        tally.violation_codes.push_back(row.code);
      }
      if (row.evals[i].equality) {
        ++tally.equalities;
        if (static_cast<int>(tally.equality_codes.size()) < kWitnessCap) {
          tally.equality_codes.push_back(row.code);
        }
      }
    }
    if (row.eps_disagree) {
      ++rep.eps_disagreements;
      rep.disagreement_codes.push_back(row.code);
    }
    const double values[3] = {static_cast<double>(row.m1),
                              static_cast<double>(row.m2), row.abc};
    for (int i = 0; i < 3; ++i) {
      Extremal& ex = rep.extremal[i];
      if (first || values[i] < ex.min_value) {
        ex.min_value = values[i];
        ex.min_codes.clear();
      }
      if (values[i] == ex.min_value) ex.min_codes.push_back(row.code);
      if (first || values[i] > ex.max_value) {
        ex.max_value = values[i];
        ex.max_codes.clear();
      }
      if (values[i] == ex.max_value) ex.max_codes.push_back(row.code);
    }
    first = false;
  }
  return rep;
}

}  // namespace

bool VerificationReport::clean() const {
  if (eps_disagreements > 0) return false;
  for (const TheoremTally& t : theorems) {
    if (t.violations > 0) return false;
  }
  return true;
}

bool SweepResult::clean() const {
  for (const VerificationReport& r : reports) {
    if (!r.clean()) return false;
  }
  return true;
}

std::vector<SweepRow> compute_rows(int n, EpsMethod method, int jobs) {
  check_order_range(n, method);
  const TreeEnumerator gen(n);
  const std::vector<CanonicalCode>& codes = gen.codes();
  std::vector<SweepRow> rows(codes.size());
  const int workers = resolve_jobs(jobs);
  if (workers == 1) {
    for (std::size_t i = 0; i < codes.size(); ++i) {
      rows[i] = compute_row(codes[i], n, method);
    }
  } else {
#pragma omp parallel for num_threads(workers) schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(codes.size()); ++i) {
      rows[i] = compute_row(codes[i], n, method);
    }
  }
  return rows;
}

VerificationReport verify_order(int n, EpsMethod method, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<SweepRow> rows = compute_rows(n, method, jobs);
  VerificationReport rep = aggregate(n, method, rows);
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

SweepResult sweep(int min_n, int max_n, EpsMethod method,
                  const std::string& csv_path, int jobs) {
  if (min_n < 4 || max_n < min_n) {
    throw std::domain_error("need 4 <= min_n <= max_n");
  }
  check_order_range(max_n, method);

  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path, std::ios::trunc);
    if (!csv) throw std::runtime_error("cannot open " + csv_path);
    write_csv_header(csv);
  }

  SweepResult result;
  for (int n = min_n; n <= max_n; ++n) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<SweepRow> rows = compute_rows(n, method, jobs);
    VerificationReport rep = aggregate(n, method, rows);
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (csv.is_open()) {
      write_csv_rows(csv, rows, method);
      if (!csv) throw std::runtime_error("write failure on " + csv_path);
    }
    result.reports.push_back(std::move(rep));
  }
  return result;
}

Extremal extremal_search(int n, TopoIndex index, int jobs) {
  const TreeEnumerator gen(n);
  const std::vector<CanonicalCode>& codes = gen.codes();
  std::vector<double> values(codes.size());
  const int workers = resolve_jobs(jobs);
#pragma omp parallel for num_threads(workers) schedule(static) if (workers > 1)
  for (long long i = 0; i < static_cast<long long>(codes.size()); ++i) {
    const Tree t = Tree::from_level_sequence(codes[i].levels);
    switch (index) {
      case TopoIndex::M1:
        values[i] = static_cast<double>(first_zagreb(t));
        break;
      case TopoIndex::M2:
        values[i] = static_cast<double>(second_zagreb(t));
        break;
      case TopoIndex::Abc:
        values[i] = abc_index(t);
        break;
    }
  }
  Extremal ex;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i == 0 || values[i] < ex.min_value) {
      ex.min_value = values[i];
      ex.min_codes.clear();
    }
    if (values[i] == ex.min_value) ex.min_codes.push_back(codes[i].to_string());
    if (i == 0 || values[i] > ex.max_value) {
      ex.max_value = values[i];
      ex.max_codes.clear();
    }
    if (values[i] == ex.max_value) ex.max_codes.push_back(codes[i].to_string());
  }
  return ex;
}

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

void write_csv_header(std::ostream& os) {
  os << "n,code,eps,eps_method,m1,m2,abc,abc_max_bound,m1_lower,m1_upper,"
        "m2_lower,m2_upper,viol_flags,eq_flags\n";
}

void write_csv_rows(std::ostream& os, const std::vector<SweepRow>& rows,
                    EpsMethod method) {
  const std::string method_name = to_string(method);
  for (const SweepRow& row : rows) {
    os << row.n << ',' << row.code << ',' << row.eps << ',' << method_name
       << ',' << row.m1 << ',' << row.m2 << ',' << format_double(row.abc)
       << ',' << format_double(row.abc_bound) << ',' << row.m1_lo << ','
       << row.m1_hi << ',' << row.m2_lo << ',' << row.m2_hi << ','
       << row.viol_flags << ',' << row.eq_flags << '\n';
  }
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out.push_back(';');
    out += items[i];
  }
  return out;
}

}  // namespace

void write_summary(std::ostream& os, const VerificationReport& rep) {
  os << "order=" << rep.n << '\n';
  os << "classes=" << rep.class_count << '\n';
  os << "eps_method=" << to_string(rep.eps_method) << '\n';
  os << "eps_disagreements=" << rep.eps_disagreements << '\n';
  if (rep.eps_disagreements > 0) {
    os << "eps_disagreement_codes=" << join(rep.disagreement_codes) << '\n';
  }
  for (int i = 0; i < 5; ++i) {
    const std::string name = to_string(kTheorems[i]);
    const TheoremTally& tally = rep.theorems[i];
    os << "violations_" << name << '=' << tally.violations << '\n';
    if (!tally.violation_codes.empty()) {
      os << "violation_codes_" << name << '=' << join(tally.violation_codes)
         << '\n';
    }
    os << "equalities_" << name << '=' << tally.equalities << '\n';
    os << "equality_codes_" << name << '=' << join(tally.equality_codes)
       << '\n';
  }
  static constexpr const char* kIndexNames[3] = {"m1", "m2", "abc"};
  for (int i = 0; i < 3; ++i) {
    const Extremal& ex = rep.extremal[i];
    os << "extremal_" << kIndexNames[i] << "_min=" << format_double(ex.min_value)
       << '\n';
    os << "extremal_" << kIndexNames[i] << "_min_codes=" << join(ex.min_codes)
       << '\n';
    os << "extremal_" << kIndexNames[i] << "_max=" << format_double(ex.max_value)
       << '\n';
    os << "extremal_" << kIndexNames[i] << "_max_codes=" << join(ex.max_codes)
       << '\n';
  }
  os << "wall_seconds=" << format_double(rep.wall_seconds) << '\n';
}

}  // namespace treebound
