#include "acyclic/exec.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace acyclic {

int brute_force_cap(int default_cap) {
  if (const char* env = std::getenv("ACYCLIC_SPECTRA_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return default_cap;
}

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace acyclic
