#include "treebound/metric_dimension.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "treebound/parallel.hpp"

namespace treebound {

namespace {

void check_landmarks(int n, std::span<const int> landmarks) {
  for (int s : landmarks) {
    if (s < 0 || s >= n) {
      throw std::out_of_range("landmark vertex " + std::to_string(s) +
                              " out of range for n=" + std::to_string(n));
    }
  }
}

// Exact distance-vector distinctness for orders where the vectors fit in a
// base-n integer key (k digits, each < n; n^k < 2^64 holds for n <= 16).
bool resolves_small(const DistanceMatrix& dm, std::span<const int> subset,
                    std::array<std::uint64_t, kMaxBruteForceOrder>& keys) {
  const int n = dm.order();
  for (int v = 0; v < n; ++v) {
    std::uint64_t key = 0;
    for (int s : subset) {
      key = key * static_cast<std::uint64_t>(n) +
            static_cast<std::uint64_t>(dm.at(v, s));
    }
    keys[v] = key;
  }
  std::sort(keys.begin(), keys.begin() + n);
  return std::adjacent_find(keys.begin(), keys.begin() + n) ==
         keys.begin() + n;
}

std::uint64_t binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(m - i) / (i + 1);
  return r;
}

// Lexicographic unranking of a k-combination of {0..m-1}.
void unrank_combination(std::uint64_t rank, int m, int k, int* comb) {
  int cur = 0;
  for (int j = 0; j < k; ++j) {
    for (int c = cur;; ++c) {
      const std::uint64_t cnt = binomial(m - 1 - c, k - 1 - j);
      if (rank < cnt) {
        comb[j] = c;
        cur = c + 1;
        break;
      }
      rank -= cnt;
    }
  }
}

bool next_combination(std::vector<int>& comb, int m) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[i] < m - k + i) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::string to_string(EpsMethod m) {
  switch (m) {
    case EpsMethod::BruteForce:
      return "brute";
    case EpsMethod::TreeFormula:
      return "tree";
    case EpsMethod::Both:
      return "both";
  }
  return "?";
}

bool is_resolving(const DistanceMatrix& dm, std::span<const int> landmarks) {
  const int n = dm.order();
  check_landmarks(n, landmarks);
  std::vector<std::vector<int>> rows(n);
  for (int v = 0; v < n; ++v) {
    rows[v].reserve(landmarks.size());
    for (int s : landmarks) rows[v].push_back(dm.at(v, s));
  }
  std::sort(rows.begin(), rows.end());
  return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

bool is_resolving(const Tree& t, std::span<const int> landmarks) {
  return is_resolving(DistanceMatrix(t), landmarks);
}

ResolvingResult metric_dimension_bruteforce(const Tree& t,
                                            const BruteForceOptions& opts) {
  const int n = t.order();
  if (n > kMaxBruteForceOrder) {
    throw std::domain_error("brute-force metric dimension is limited to n <= " +
                            std::to_string(kMaxBruteForceOrder));
  }
  if (n == 1) return {0, {}, EpsMethod::BruteForce};

  const DistanceMatrix dm(t);
  const std::vector<int> cand =
      opts.leaves_only ? leaves(t) : [&] {
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        return all;
      }();
  const int m = static_cast<int>(cand.size());
  const int workers = resolve_jobs(opts.jobs);

  for (int k = 1; k <= m; ++k) {
    const std::uint64_t total = binomial(m, k);
    std::uint64_t hit = UINT64_MAX;
    if (workers > 1 && total >= 64) {
      std::uint64_t best = UINT64_MAX;
#pragma omp parallel for num_threads(workers) schedule(static) \
    reduction(min : best)
      for (long long r = 0; r < static_cast<long long>(total); ++r) {
        int comb[kMaxBruteForceOrder];
        int subset[kMaxBruteForceOrder];
        unrank_combination(static_cast<std::uint64_t>(r), m, k, comb);
        for (int j = 0; j < k; ++j) subset[j] = cand[comb[j]];
        std::array<std::uint64_t, kMaxBruteForceOrder> keys;
        if (resolves_small(dm, std::span<const int>(subset, k), keys)) {
          best = std::min(best, static_cast<std::uint64_t>(r));
        }
      }
      hit = best;
    } else {
      std::vector<int> comb(k);
      for (int j = 0; j < k; ++j) comb[j] = j;
      std::uint64_t rank = 0;
      std::array<std::uint64_t, kMaxBruteForceOrder> keys;
      int subset[kMaxBruteForceOrder];
      do {
        for (int j = 0; j < k; ++j) subset[j] = cand[comb[j]];
        if (resolves_small(dm, std::span<const int>(subset, k), keys)) {
          hit = rank;
          break;
        }
        ++rank;
      } while (next_combination(comb, m));
    }
    if (hit != UINT64_MAX) {
      int comb[kMaxBruteForceOrder];
      unrank_combination(hit, m, k, comb);
      std::vector<int> witness(k);
      for (int j = 0; j < k; ++j) witness[j] = cand[comb[j]];
      return {k, std::move(witness), EpsMethod::BruteForce};
    }
  }
  throw std::logic_error("no resolving set found; candidate pool exhausted");
}

ResolvingResult metric_dimension_tree(const Tree& t) {
  const int n = t.order();
  if (n == 1) return {0, {}, EpsMethod::TreeFormula};

  bool is_path = true;
  for (int v = 0; v < n; ++v) {
    if (t.degree(v) > 2) {
      is_path = false;
      break;
    }
  }
  const std::vector<int> leaf_ids = leaves(t);
  if (is_path) {
    return {1, {leaf_ids.front()}, EpsMethod::TreeFormula};
  }

  // Group each leaf under its exterior major vertex: the first vertex of
  // degree >= 3 on the path from the leaf into the tree.
  std::map<int, std::vector<int>> legs;
  for (int leaf : leaf_ids) {
    int prev = leaf;
    int cur = t.neighbors(leaf)[0];
    while (t.degree(cur) == 2) {
      const auto nbrs = t.neighbors(cur);
      const int nxt = nbrs[0] == prev ? nbrs[1] : nbrs[0];
      prev = cur;
      cur = nxt;
    }
    legs[cur].push_back(leaf);
  }

  std::vector<int> witness;
  for (const auto& [major, leg_leaves] : legs) {
    for (std::size_t i = 0; i + 1 < leg_leaves.size(); ++i) {
      witness.push_back(leg_leaves[i]);
    }
  }
  std::sort(witness.begin(), witness.end());
  const int eps =
      static_cast<int>(leaf_ids.size()) - static_cast<int>(legs.size());
  return {eps, std::move(witness), EpsMethod::TreeFormula};
}

}  // namespace treebound
