#include "treebound/tree.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <unordered_set>

namespace treebound {

namespace {

// BFS from vertex 0; fills dist (-1 for unreached) and returns reached count.
int bfs(const std::vector<std::vector<int>>& adj, int source,
        std::vector<int>& dist) {
  const int n = static_cast<int>(adj.size());
  dist.assign(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int u : adj[v]) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return static_cast<int>(queue.size());
}

std::vector<std::vector<int>> build_adjacency(
    int order, const std::vector<std::pair<int, int>>& edge_list) {
  if (order < 1) throw std::invalid_argument("tree order must be positive");
  if (static_cast<long long>(edge_list.size()) != order - 1LL) {
    throw std::invalid_argument("edge count " +
                                std::to_string(edge_list.size()) +
                                " != n-1 for n=" + std::to_string(order));
  }
  std::vector<std::vector<int>> adj(order);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edge_list.size() * 2);
  for (const auto& [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    const std::uint64_t key =
        (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
        static_cast<std::uint32_t>(std::max(u, v));
    if (!seen.insert(key).second) {
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> dist;
  if (bfs(adj, 0, dist) != order) {
    throw std::invalid_argument("graph is disconnected");
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

}  // namespace

Tree::Tree(int order, const std::vector<std::pair<int, int>>& edge_list)
    : adj_(build_adjacency(order, edge_list)) {}

Tree Tree::path(int n) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Tree(n, edges);
}

Tree Tree::star(int n) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Tree(n, edges);
}

Tree Tree::from_level_sequence(std::span<const int> levels) {
  const int n = static_cast<int>(levels.size());
  if (n < 1) throw std::invalid_argument("empty level sequence");
  if (levels[0] != 0) {
    throw std::invalid_argument("level sequence must start at depth 0");
  }
  for (int i = 1; i < n; ++i) {
    if (levels[i] < 1 || levels[i] > levels[i - 1] + 1) {
      throw std::invalid_argument("invalid level at position " +
                                  std::to_string(i));
    }
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  std::vector<int> stack;
  stack.push_back(0);
  for (int i = 1; i < n; ++i) {
    while (levels[stack.back()] >= levels[i]) stack.pop_back();
    edges.emplace_back(stack.back(), i);
    stack.push_back(i);
  }
  return Tree(n, edges);
}

std::vector<std::pair<int, int>> Tree::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(order() > 0 ? order() - 1 : 0);
  for (int v = 0; v < order(); ++v) {
    for (int u : adj_[v]) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  return out;
}

DistanceMatrix::DistanceMatrix(const Tree& t) : n_(t.order()) {
  d_.resize(static_cast<std::size_t>(n_) * n_);
  std::vector<std::vector<int>> adj(n_);
  for (int v = 0; v < n_; ++v) {
    adj[v].assign(t.neighbors(v).begin(), t.neighbors(v).end());
  }
  std::vector<int> dist;
  for (int s = 0; s < n_; ++s) {
    bfs(adj, s, dist);
    std::copy(dist.begin(), dist.end(),
              d_.begin() + static_cast<std::size_t>(s) * n_);
  }
}

int DistanceMatrix::max_entry() const {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

Tree parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_line;  // source line of each edge, for diagnostics
  std::unordered_set<std::uint64_t> seen;
  long long max_id = -1;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#') continue;

    long long ids[2];
    const char* cur = line.data() + first;
    const char* end = line.data() + line.size();
    for (int k = 0; k < 2; ++k) {
      while (cur != end && (*cur == ' ' || *cur == '\t' || *cur == '\r')) ++cur;
      auto [next, ec] = std::from_chars(cur, end, ids[k]);
      if (ec != std::errc() || next == cur) {
        throw ParseError("expected two vertex ids \"u v\"", line_no);
      }
      cur = next;
    }
    while (cur != end && (*cur == ' ' || *cur == '\t' || *cur == '\r')) ++cur;
    if (cur != end) {
      throw ParseError("trailing text after edge", line_no);
    }
    if (ids[0] < 0 || ids[1] < 0) {
      throw ParseError("vertex ids must be non-negative", line_no);
    }
    constexpr long long kMaxVertexId = (1LL << 31) - 2;
    if (ids[0] > kMaxVertexId || ids[1] > kMaxVertexId) {
      throw ParseError("vertex id out of supported range", line_no);
    }
    if (ids[0] == ids[1]) {
      throw ParseError("self-loop at vertex " + std::to_string(ids[0]),
                       line_no);
    }
    const std::uint64_t key =
        (static_cast<std::uint64_t>(std::min(ids[0], ids[1])) << 32) |
        static_cast<std::uint64_t>(std::max(ids[0], ids[1]));
    if (!seen.insert(key).second) {
      throw ParseError("duplicate edge " + std::to_string(ids[0]) + " " +
                           std::to_string(ids[1]),
                       line_no);
    }
    edges.emplace_back(static_cast<int>(ids[0]), static_cast<int>(ids[1]));
    edge_line.push_back(line_no);
    max_id = std::max({max_id, ids[0], ids[1]});
  }

  if (edges.empty()) throw ParseError("no edges in input", 0);
  const long long n = max_id + 1;
  if (n != static_cast<long long>(edges.size()) + 1) {
    throw ParseError("edge count " + std::to_string(edges.size()) +
                         " != n-1 for inferred n=" + std::to_string(n),
                     0);
  }
  try {
    return Tree(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::vector<int> degrees(const Tree& t) {
  std::vector<int> out(t.order());
  for (int v = 0; v < t.order(); ++v) out[v] = t.degree(v);
  return out;
}

DistanceMatrix distance_matrix(const Tree& t) { return DistanceMatrix(t); }

int diameter(const Tree& t) { return distance_matrix(t).max_entry(); }

std::vector<int> leaves(const Tree& t) {
  std::vector<int> out;
  for (int v = 0; v < t.order(); ++v) {
    if (t.degree(v) == 1) out.push_back(v);
  }
  return out;
}

}  // namespace treebound
