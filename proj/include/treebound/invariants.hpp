#pragma once

#include "treebound/tree.hpp"

namespace treebound {

/// One tree's worth of computed invariants: order, metric dimension, first
/// and second Zagreb indices (exact integers), ABC index.
struct InvariantRecord {
  int n = 0;
  int eps = 0;
  long long m1 = 0;
  long long m2 = 0;
  double abc = 0.0;
};

/// Sum of squared vertex degrees.
long long first_zagreb(const Tree& t);

/// Sum over edges of the product of endpoint degrees.
long long second_zagreb(const Tree& t);

/// Sum over edges of sqrt((du + dv - 2) / (du * dv)), accumulated in sorted
/// edge order so results are bit-reproducible.
double abc_index(const Tree& t);

enum class Family { Path, Star };
enum class TopoIndex { M1, M2, Abc };

/// Closed forms for paths and stars, n >= 3:
///   path: M1 = 4n-6, M2 = 4n-8, ABC = (n-1)/sqrt(2)
///   star: M1 = n(n-1), M2 = (n-1)^2, ABC = sqrt(n-2)sqrt(n-1)
/// The path M2 form is 4n-8; the 2n-8 sometimes quoted for it fails direct
/// computation at every n >= 3 (P_3 already gives 4, not -2).
double closed_form(Family family, TopoIndex index, int n);

}  // namespace treebound
