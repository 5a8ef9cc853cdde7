#include "nfl/parallel.hpp"

namespace nfl {

int hardware_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace nfl
