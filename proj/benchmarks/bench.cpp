// Compares the serial reference kernels against their OpenMP variants and
// verifies that both produce identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "treebound/bounds.hpp"
#include "treebound/enumerate.hpp"
#include "treebound/metric_dimension.hpp"
#include "treebound/verify.hpp"

using namespace treebound;

namespace {

template <typename F>
double time_once(F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

void report(const char* name, double serial, double parallel, bool match) {
  std::printf("%-34s %9.3f s %9.3f s %6.2fx  %s\n", name, serial, parallel,
              serial / parallel, match ? "outputs match" : "OUTPUTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = omp_get_max_threads();
  const bool quick = argc > 1 && std::string(argv[1]) == "--quick";
  std::printf("threads: %d%s\n\n", threads, quick ? " (quick mode)" : "");
  std::printf("%-34s %11s %11s %7s\n", "kernel", "serial", "parallel",
              "speedup");

  bool all_match = true;

  {
    const int n = quick ? 11 : 13;
    std::vector<SweepRow> rows_serial, rows_parallel;
    const double ts = time_once(
        [&] { rows_serial = compute_rows(n, EpsMethod::TreeFormula, 1); });
    const double tp = time_once(
        [&] { rows_parallel = compute_rows(n, EpsMethod::TreeFormula, 0); });
    bool match = rows_serial.size() == rows_parallel.size();
    for (std::size_t i = 0; match && i < rows_serial.size(); ++i) {
      match = rows_serial[i].code == rows_parallel[i].code &&
              rows_serial[i].abc == rows_parallel[i].abc &&
              rows_serial[i].eq_flags == rows_parallel[i].eq_flags;
    }
    all_match = all_match && match;
    report(("sweep rows, n=" + std::to_string(n)).c_str(), ts, tp, match);
  }

  {
    const int n = quick ? 10 : 12;
    std::vector<SweepRow> rows_serial, rows_parallel;
    const double ts =
        time_once([&] { rows_serial = compute_rows(n, EpsMethod::Both, 1); });
    const double tp =
        time_once([&] { rows_parallel = compute_rows(n, EpsMethod::Both, 0); });
    bool match = rows_serial.size() == rows_parallel.size();
    for (std::size_t i = 0; match && i < rows_serial.size(); ++i) {
      match = rows_serial[i].eps == rows_parallel[i].eps;
    }
    all_match = all_match && match;
    report(("sweep rows + brute eps, n=" + std::to_string(n)).c_str(), ts, tp,
           match);
  }

  {
    LemmaGrid grid;
    grid.x_max = quick ? 400.0 : 1000.0;
    grid.y_max = grid.x_max;
    grid.step = 0.25;
    LemmaScanReport serial, parallel;
    const double ts = time_once([&] { serial = lemma_scan(Lemma::F, grid, 1); });
    const double tp =
        time_once([&] { parallel = lemma_scan(Lemma::F, grid, 0); });
    const bool match = serial.min_value == parallel.min_value &&
                       serial.min_x == parallel.min_x &&
                       serial.min_y == parallel.min_y &&
                       serial.violations == parallel.violations;
    all_match = all_match && match;
    report("lemma F grid scan, step 0.25", ts, tp, match);
  }

  {
    const int n = quick ? 8 : 9;
    OracleResult serial, parallel;
    const double ts =
        time_once([&] { serial = oracle_enumerate_codes(n, 1); });
    const double tp =
        time_once([&] { parallel = oracle_enumerate_codes(n, 0); });
    const bool match = serial.codes == parallel.codes;
    all_match = all_match && match;
    report(("Pruefer oracle, n=" + std::to_string(n)).c_str(), ts, tp, match);
  }

  if (!all_match) {
    std::printf("\nserial and parallel kernels disagreed\n");
    return 1;
  }
  return 0;
}
