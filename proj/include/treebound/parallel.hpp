#pragma once

#include <omp.h>

namespace treebound {

/// Worker count for a jobs flag: 0 means all hardware threads.
inline int resolve_jobs(int jobs) {
  return jobs <= 0 ? omp_get_max_threads() : jobs;
}

}  // namespace treebound
