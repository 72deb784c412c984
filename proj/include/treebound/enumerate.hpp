#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treebound/tree.hpp"

namespace treebound {

/// Canonical level sequence of a free tree: the tree is rooted at its center
/// (for bicentral trees, at the center giving the lexicographically smaller
/// code), vertices listed in depth-first order with child subtrees sorted in
/// descending code order. Two trees have equal codes iff they are isomorphic.
struct CanonicalCode {
  std::vector<int> levels;

  bool operator==(const CanonicalCode&) const = default;
  auto operator<=>(const CanonicalCode&) const = default;

  std::string to_string(char sep = '-') const;
};

CanonicalCode canonical_code(const Tree& t);

/// Largest order the level-sequence enumerator accepts (123867 classes).
inline constexpr int kMaxEnumerationOrder = 18;
/// Largest order the Pruefer-sequence oracle accepts (10^8 labeled trees).
inline constexpr int kMaxOracleOrder = 10;

/// Streams one representative per isomorphism class of free trees of order
/// n, in ascending canonical-code order. Generation uses successor steps on
/// canonical level sequences (constant amortized time per tree); the
/// resulting codes are buffered and sorted so the output order is stable.
class TreeEnumerator {
 public:
  explicit TreeEnumerator(int n);

  std::optional<Tree> next();
  /// Code of the tree most recently returned by next().
  const CanonicalCode& current_code() const { return codes_.at(pos_ - 1); }
  long long count() const noexcept {
    return static_cast<long long>(codes_.size());
  }
  const std::vector<CanonicalCode>& codes() const noexcept { return codes_; }

 private:
  std::vector<CanonicalCode> codes_;
  std::size_t pos_ = 0;
};

std::vector<Tree> enumerate_trees(int n);

struct OracleResult {
  std::vector<CanonicalCode> codes;      // ascending
  unsigned long long labeled_trees = 0;  // sequences decoded, n^(n-2)
};

/// Independent enumeration oracle: decodes every (n-2)-digit Pruefer
/// sequence over n symbols into a labeled tree and deduplicates by canonical
/// code. jobs: 0 = all hardware threads, 1 = serial reference path.
OracleResult oracle_enumerate_codes(int n, int jobs = 0);
std::vector<Tree> oracle_enumerate(int n, int jobs = 0);

namespace detail {
/// Canonical code via the fixed-size coder used in the oracle hot loop
/// (n <= kMaxOracleOrder). Exposed so tests can pin the hot path against
/// canonical_code() on every labeled tree of small orders.
CanonicalCode oracle_canonical_code(const Tree& t);
}  // namespace detail

}  // namespace treebound
