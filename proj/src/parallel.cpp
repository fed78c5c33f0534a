#include "geoclique/parallel.hpp"

#include <omp.h>

namespace geoclique {

void set_thread_count(int threads) { omp_set_num_threads(threads > 0 ? threads : hardware_threads()); }

int thread_count() { return omp_get_max_threads(); }

int hardware_threads() { return omp_get_num_procs(); }

} // namespace geoclique
