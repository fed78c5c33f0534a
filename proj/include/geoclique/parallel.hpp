#pragma once

#include <cstdint>

namespace geoclique {

/// Selects between the OpenMP kernel and its serial reference. Both produce
/// identical results; the serial path exists for testing and benchmarking.
enum class Exec { serial, parallel };

/// Sets the OpenMP team size used by parallel kernels (<= 0 restores the
/// hardware default).
void set_thread_count(int threads);
int thread_count();
int hardware_threads();

/// splitmix64 finalizer; used to derive independent RNG streams from a base
/// seed and a task index.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index,
                                    std::uint64_t salt = 0) noexcept {
    return seed ^ mix64(index + mix64(salt));
}

} // namespace geoclique
