#pragma once

#include <span>
#include <string>
#include <vector>

#include "treebound/tree.hpp"

namespace treebound {

enum class EpsMethod { BruteForce, TreeFormula, Both };

std::string to_string(EpsMethod m);

struct ResolvingResult {
  int eps = 0;
  std::vector<int> witness;  // sorted resolving set of size eps
  EpsMethod method = EpsMethod::BruteForce;
};

/// Largest order accepted by the subset-search brute force.
inline constexpr int kMaxBruteForceOrder = 16;

/// True iff the distance vectors to landmarks (in the given order) are
/// pairwise distinct over all vertices.
bool is_resolving(const DistanceMatrix& dm, std::span<const int> landmarks);
bool is_resolving(const Tree& t, std::span<const int> landmarks);

struct BruteForceOptions {
  /// Restrict candidate landmarks to leaves. A minimum resolving set of a
  /// tree can always be chosen among its leaves, so this does not change
  /// the computed eps; disable for an assumption-free audit run.
  bool leaves_only = true;
  /// 1 = serial reference path; >1 or 0 = parallel subset search at fixed k.
  int jobs = 1;
};

/// Exact metric dimension by ascending subset search: the minimum k such
/// that some k-subset of candidates resolves the tree, with the witness
/// being the lexicographically first such subset.
ResolvingResult metric_dimension_bruteforce(const Tree& t,
                                            const BruteForceOptions& opts = {});

/// Exact metric dimension via the tree formula: 1 for paths, otherwise
/// leaf count minus the number of exterior major vertices. The witness keeps
/// all but the largest-id leg leaf of every exterior major vertex.
ResolvingResult metric_dimension_tree(const Tree& t);

}  // namespace treebound
