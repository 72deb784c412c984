#include "treebound/invariants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace treebound {

long long first_zagreb(const Tree& t) {
  long long sum = 0;
  for (int v = 0; v < t.order(); ++v) {
    const long long d = t.degree(v);
    sum += d * d;
  }
  return sum;
}

long long second_zagreb(const Tree& t) {
  long long sum = 0;
  for (const auto& [u, v] : t.edges()) {
    sum += static_cast<long long>(t.degree(u)) * t.degree(v);
  }
  return sum;
}

double abc_index(const Tree& t) {
  double sum = 0.0;
  for (const auto& [u, v] : t.edges()) {
    const double du = t.degree(u);
    const double dv = t.degree(v);
    sum += std::sqrt((du + dv - 2.0) / (du * dv));
  }
  return sum;
}

double closed_form(Family family, TopoIndex index, int n) {
  if (n < 3) {
    throw std::domain_error("closed forms require n >= 3, got " +
                            std::to_string(n));
  }
  const double nd = n;
  if (family == Family::Path) {
    switch (index) {
      case TopoIndex::M1:
        return 4.0 * nd - 6.0;
      case TopoIndex::M2:
        return 4.0 * nd - 8.0;
      case TopoIndex::Abc:
        return (nd - 1.0) / std::sqrt(2.0);
    }
  } else {
    switch (index) {
      case TopoIndex::M1:
        return nd * (nd - 1.0);
      case TopoIndex::M2:
        return (nd - 1.0) * (nd - 1.0);
      case TopoIndex::Abc:
        return std::sqrt(nd - 2.0) * std::sqrt(nd - 1.0);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace treebound
