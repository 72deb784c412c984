#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treebound {

/// Raised by parse_edge_list. line() is 1-based; 0 means the problem concerns
/// the input as a whole rather than a single line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error(line > 0
                               ? "line " + std::to_string(line) + ": " + message
                               : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Connected acyclic graph on vertices 0..n-1.
///
/// Immutable after construction and safe to share across threads. Adjacency
/// lists are kept sorted so every traversal in the library is reproducible.
/// Construction rejects anything that is not a tree: wrong edge count,
/// self-loops, duplicate edges, out-of-range endpoints, disconnected input.
class Tree {
 public:
  Tree(int order, const std::vector<std::pair<int, int>>& edge_list);

  static Tree path(int n);
  static Tree star(int n);  // center is vertex 0
  static Tree from_level_sequence(std::span<const int> levels);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  std::span<const int> neighbors(int v) const { return adj_.at(v); }

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  explicit Tree(std::vector<std::vector<int>> adj) : adj_(std::move(adj)) {}

  std::vector<std::vector<int>> adj_;
};

/// Pairwise hop counts: symmetric, zero diagonal, entries at most n-1.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Tree& t);

  int order() const noexcept { return n_; }
  int at(int u, int v) const {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }
  int max_entry() const;

 private:
  int n_;
  std::vector<int> d_;
};

/// Parses a line-oriented edge list: one "u v" pair per line, '#' comments
/// and blank lines ignored, 0-based contiguous vertex ids. The vertex count
/// is inferred as max id + 1.
Tree parse_edge_list(std::string_view text);

std::vector<int> degrees(const Tree& t);
DistanceMatrix distance_matrix(const Tree& t);
int diameter(const Tree& t);
std::vector<int> leaves(const Tree& t);

}  // namespace treebound
