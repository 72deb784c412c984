#include "treebound/enumerate.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "treebound/parallel.hpp"

namespace treebound {

namespace {

// ---------------------------------------------------------------------------
// Canonical codes
// ---------------------------------------------------------------------------

std::vector<int> rooted_code(const Tree& t, int v, int parent, int depth) {
  std::vector<std::vector<int>> kids;
  for (int u : t.neighbors(v)) {
    if (u != parent) kids.push_back(rooted_code(t, u, v, depth + 1));
  }
  std::sort(kids.begin(), kids.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a > b;
            });
  std::vector<int> out;
  out.push_back(depth);
  for (const auto& k : kids) out.insert(out.end(), k.begin(), k.end());
  return out;
}

std::vector<int> tree_centers(const Tree& t) {
  const int n = t.order();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<int> layer, next;
  for (int v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    for (int v : layer) removed[v] = 1;
    remaining -= static_cast<int>(layer.size());
    next.clear();
    for (int v : layer) {
      for (int u : t.neighbors(v)) {
        if (!removed[u] && --deg[u] == 1) next.push_back(u);
      }
    }
    layer.swap(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) centers.push_back(v);
  }
  return centers;
}

// ---------------------------------------------------------------------------
// Free-tree generation by successor steps on canonical level sequences
// (Wright-Richmond-Odlyzko-McKay). The root is at level 0; a sequence
// represents a free tree iff the first principal subtree is no higher than
// the remainder, with size and lexicographic tie-breaks.
// ---------------------------------------------------------------------------

// Beyer-Hedetniemi successor of a canonical rooted level sequence, in place.
// A non-negative p forces the truncation point. Returns false when the
// sequence space is exhausted.
bool next_rooted_level_sequence(std::vector<int>& s, int p) {
  if (p < 0) {
    p = static_cast<int>(s.size()) - 1;
    while (s[p] == 1) --p;
  }
  if (p <= 0) return false;
  int q = p - 1;
  while (s[q] != s[p] - 1) --q;
  for (int i = p; i < static_cast<int>(s.size()); ++i) s[i] = s[i - p + q];
  return true;
}

// Index of the second level-1 vertex (the start of the tree minus its first
// principal subtree), or n if the root has a single child.
int second_principal_start(const std::vector<int>& s) {
  bool seen = false;
  for (int i = 1; i < static_cast<int>(s.size()); ++i) {
    if (s[i] == 1) {
      if (seen) return i;
      seen = true;
    }
  }
  return static_cast<int>(s.size());
}

bool free_layout_valid(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  const int m = second_principal_start(s);
  const int left_size = m - 1;
  const int rest_size = n - m + 1;
  int left_height = 0;
  for (int i = 1; i < m; ++i) left_height = std::max(left_height, s[i] - 1);
  int rest_height = 0;
  for (int i = m; i < n; ++i) rest_height = std::max(rest_height, s[i]);
  if (rest_height != left_height) return rest_height > left_height;
  if (left_size != rest_size) return left_size < rest_size;
  // Equal height and size: valid iff left <= rest lexicographically.
  for (int i = 0; i < left_size; ++i) {
    const int a = s[1 + i] - 1;
    const int b = i == 0 ? 0 : s[m + i - 1];
    if (a != b) return a < b;
  }
  return true;
}

// Calls emit(layout) once per isomorphism class of free trees of order n.
void generate_free_layouts(int n,
                           const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> s;
  s.reserve(n);
  for (int i = 0; i <= n / 2; ++i) s.push_back(i);
  for (int i = 1; i <= (n + 1) / 2 - 1; ++i) s.push_back(i);

  bool alive = true;
  while (alive) {
    if (free_layout_valid(s)) {
      emit(s);
      alive = next_rooted_level_sequence(s, -1);
    } else {
      // Every continuation sharing this prefix is invalid: truncate at the
      // end of the first principal subtree and, when that subtree was deep,
      // reset the tail to the highest valid completion (a path suffix).
      const int p = second_principal_start(s) - 1;
      const bool deep = s[p] > 2;
      alive = next_rooted_level_sequence(s, p);
      if (alive && deep) {
        const int m = second_principal_start(s);
        int left_height = 0;
        for (int i = 1; i < m; ++i) left_height = std::max(left_height, s[i] - 1);
        const int len = left_height + 1;
        for (int i = 0; i < len; ++i) s[n - len + i] = i + 1;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Fixed-size canonical coder for the Pruefer oracle hot loop (n <= 10).
// Produces the same center-rooted code as canonical_code(), packed 4 bits
// per level with the first level in the highest nibble, so unsigned
// comparison of packed values matches lexicographic comparison of codes.
// ---------------------------------------------------------------------------

constexpr int kOracleCap = kMaxOracleOrder;

// A subtree code is packed 4 bits per level, left-aligned: the first level
// sits in the highest nibble. Every level after a code's first entry is
// >= 1, so the zero padding compares below any real nibble and unsigned
// comparison of packed values matches lexicographic comparison of codes
// (including the prefix rule for codes of different lengths).
struct PackedCanon {
  int n = 0;
  std::uint8_t deg[kOracleCap];
  std::uint8_t nbr[kOracleCap][kOracleCap];

  void reset(int order) {
    n = order;
    std::memset(deg, 0, sizeof(deg));
  }

  void add_edge(int u, int v) {
    nbr[u][deg[u]++] = static_cast<std::uint8_t>(v);
    nbr[v][deg[v]++] = static_cast<std::uint8_t>(u);
  }

  // Packed canonical code of the subtree rooted at v; *length gets the
  // vertex count. Children are placed in descending packed order.
  std::uint64_t build(int v, int parent, std::uint64_t depth,
                      int* length) const {
    std::uint64_t kid_code[kOracleCap - 1];
    int kid_len[kOracleCap - 1];
    int nc = 0;
    for (int i = 0; i < deg[v]; ++i) {
      const int u = nbr[v][i];
      if (u == parent) continue;
      if (deg[u] == 1) {  // leaf child: code is just its depth
        kid_code[nc] = (depth + 1) << 60;
        kid_len[nc] = 1;
      } else {
        kid_code[nc] = build(u, v, depth + 1, &kid_len[nc]);
      }
      ++nc;
    }
    // insertion sort, descending
    for (int i = 1; i < nc; ++i) {
      const std::uint64_t code = kid_code[i];
      const int len = kid_len[i];
      int j = i - 1;
      while (j >= 0 && kid_code[j] < code) {
        kid_code[j + 1] = kid_code[j];
        kid_len[j + 1] = kid_len[j];
        --j;
      }
      kid_code[j + 1] = code;
      kid_len[j + 1] = len;
    }
    std::uint64_t acc = depth << 60;
    int pos = 1;
    for (int i = 0; i < nc; ++i) {
      acc |= kid_code[i] >> (4 * pos);
      pos += kid_len[i];
    }
    *length = pos;
    return acc;
  }

  std::uint64_t canonical_packed() const {
    std::uint8_t d2[kOracleCap];
    bool removed[kOracleCap] = {};
    int cur[kOracleCap], nxt[kOracleCap];
    int ncur = 0;
    for (int v = 0; v < n; ++v) {
      d2[v] = deg[v];
      if (deg[v] == 1) cur[ncur++] = v;
    }
    int remaining = n;
    while (remaining > 2) {
      for (int i = 0; i < ncur; ++i) removed[cur[i]] = true;
      remaining -= ncur;
      int nn = 0;
      for (int i = 0; i < ncur; ++i) {
        const int v = cur[i];
        for (int j = 0; j < deg[v]; ++j) {
          const int u = nbr[v][j];
          if (!removed[u] && --d2[u] == 1) nxt[nn++] = u;
        }
      }
      std::memcpy(cur, nxt, static_cast<std::size_t>(nn) * sizeof(int));
      ncur = nn;
    }
    int c0 = -1, c1 = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[v]) {
        if (c0 < 0) {
          c0 = v;
        } else {
          c1 = v;
        }
      }
    }
    int len = 0;
    std::uint64_t code = build(c0, -1, 0, &len);
    if (c1 >= 0) {
      const std::uint64_t alt = build(c1, -1, 0, &len);
      code = std::min(code, alt);
    }
    return code;
  }
};

// Decodes Pruefer sequences [begin, end) of the odometer over n^(n-2) and
// inserts the packed canonical code of each labeled tree into out.
void oracle_scan_range(int n, std::uint64_t begin, std::uint64_t end,
                       std::unordered_set<std::uint64_t>& out) {
  const int m = n - 2;
  int seq[kOracleCap];
  std::uint64_t v = begin;
  for (int i = m - 1; i >= 0; --i) {
    seq[i] = static_cast<int>(v % n);
    v /= n;
  }
  PackedCanon pc;
  int degp[kOracleCap];
  for (std::uint64_t it = begin; it != end; ++it) {
    pc.reset(n);
    for (int i = 0; i < n; ++i) degp[i] = 1;
    for (int i = 0; i < m; ++i) ++degp[seq[i]];
    int ptr = 0;
    while (degp[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int k = 0; k < m; ++k) {
      const int s = seq[k];
      pc.add_edge(leaf, s);
      if (--degp[s] == 1 && s < ptr) {
        leaf = s;
      } else {
        ++ptr;
        while (degp[ptr] != 1) ++ptr;
        leaf = ptr;
      }
    }
    pc.add_edge(leaf, n - 1);
    out.insert(pc.canonical_packed());

    for (int i = m - 1; i >= 0; --i) {
      if (++seq[i] < n) break;
      seq[i] = 0;
    }
  }
}

CanonicalCode unpack_code(std::uint64_t packed, int n) {
  CanonicalCode code;
  code.levels.resize(n);
  for (int i = 0; i < n; ++i) {
    code.levels[i] = static_cast<int>((packed >> (4 * (15 - i))) & 0xF);
  }
  return code;
}

}  // namespace

std::string CanonicalCode::to_string(char sep) const {
  std::string out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(levels[i]);
  }
  return out;
}

CanonicalCode canonical_code(const Tree& t) {
  const std::vector<int> centers = tree_centers(t);
  std::vector<int> code = rooted_code(t, centers[0], -1, 0);
  if (centers.size() == 2) {
    std::vector<int> alt = rooted_code(t, centers[1], -1, 0);
    if (alt < code) code = std::move(alt);
  }
  return CanonicalCode{std::move(code)};
}

TreeEnumerator::TreeEnumerator(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw std::domain_error("enumeration order must be in [1, " +
                            std::to_string(kMaxEnumerationOrder) + "]");
  }
  if (n == 1) {
    codes_.push_back(CanonicalCode{{0}});
    return;
  }
  generate_free_layouts(n, [&](const std::vector<int>& layout) {
    codes_.push_back(canonical_code(Tree::from_level_sequence(layout)));
  });
  std::sort(codes_.begin(), codes_.end());
  if (std::adjacent_find(codes_.begin(), codes_.end()) != codes_.end()) {
    throw std::logic_error("enumerator produced duplicate canonical codes");
  }
}

std::optional<Tree> TreeEnumerator::next() {
  if (pos_ >= codes_.size()) return std::nullopt;
  return Tree::from_level_sequence(codes_[pos_++].levels);
}

std::vector<Tree> enumerate_trees(int n) {
  TreeEnumerator gen(n);
  std::vector<Tree> out;
  out.reserve(static_cast<std::size_t>(gen.count()));
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

OracleResult oracle_enumerate_codes(int n, int jobs) {
  if (n < 1 || n > kMaxOracleOrder) {
    throw std::domain_error("oracle order must be in [1, " +
                            std::to_string(kMaxOracleOrder) + "]");
  }
  OracleResult res;
  if (n == 1) {
    res.codes.push_back(CanonicalCode{{0}});
    res.labeled_trees = 1;
    return res;
  }
  if (n == 2) {
    res.codes.push_back(CanonicalCode{{0, 1}});
    res.labeled_trees = 1;
    return res;
  }
  std::uint64_t total = 1;
  for (int i = 0; i < n - 2; ++i) total *= static_cast<std::uint64_t>(n);
  res.labeled_trees = total;

  const int workers = resolve_jobs(jobs);
  std::vector<std::unordered_set<std::uint64_t>> parts(
      static_cast<std::size_t>(workers));
  if (workers == 1) {
    parts[0].reserve(512);
    oracle_scan_range(n, 0, total, parts[0]);
  } else {
#pragma omp parallel num_threads(workers)
    {
      const int w = omp_get_thread_num();
      const std::uint64_t lo = total * w / workers;
      const std::uint64_t hi = total * (w + 1) / workers;
      parts[w].reserve(512);
      oracle_scan_range(n, lo, hi, parts[w]);
    }
  }
  std::vector<std::uint64_t> packed;
  {
    std::unordered_set<std::uint64_t> merged;
    for (const auto& p : parts) merged.insert(p.begin(), p.end());
    packed.assign(merged.begin(), merged.end());
  }
  std::sort(packed.begin(), packed.end());
  res.codes.reserve(packed.size());
  for (std::uint64_t p : packed) res.codes.push_back(unpack_code(p, n));
  return res;
}

CanonicalCode detail::oracle_canonical_code(const Tree& t) {
  const int n = t.order();
  if (n > kMaxOracleOrder) {
    throw std::domain_error("oracle coder is limited to n <= " +
                            std::to_string(kMaxOracleOrder));
  }
  PackedCanon pc;
  pc.reset(n);
  for (const auto& [u, v] : t.edges()) pc.add_edge(u, v);
  return unpack_code(pc.canonical_packed(), n);
}

std::vector<Tree> oracle_enumerate(int n, int jobs) {
  OracleResult res = oracle_enumerate_codes(n, jobs);
  std::vector<Tree> out;
  out.reserve(res.codes.size());
  for (const auto& c : res.codes) {
    out.push_back(Tree::from_level_sequence(c.levels));
  }
  return out;
}

}  // namespace treebound
