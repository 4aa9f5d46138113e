#pragma once

#include <cstddef>

namespace scimap::kernels {

// Accumulates spring-embedder repulsive displacement for nodes [i_begin,
// i_end) against all n nodes. Squared distances are clamped below by
// kMinDistSq, which also makes the self pair contribute exactly zero.
// All variants perform the identical operation sequence per node, so their
// results are bitwise equal; the unit tests assert that.
inline constexpr double kMinDistSq = 1e-12;

using RepulsionFn = void (*)(const double* x, const double* y, std::size_t n,
                             std::size_t i_begin, std::size_t i_end,
                             double k_sq, double* dx, double* dy);

void repulsion_scalar(const double* x, const double* y, std::size_t n,
                      std::size_t i_begin, std::size_t i_end, double k_sq,
                      double* dx, double* dy);

#if defined(__x86_64__) || defined(_M_X64)
void repulsion_avx2(const double* x, const double* y, std::size_t n,
                    std::size_t i_begin, std::size_t i_end, double k_sq,
                    double* dx, double* dy);
bool avx2_available();
#endif

#if defined(__aarch64__)
void repulsion_neon(const double* x, const double* y, std::size_t n,
                    std::size_t i_begin, std::size_t i_end, double k_sq,
                    double* dx, double* dy);
#endif

// Best variant for the running CPU, resolved once.
RepulsionFn select_repulsion();
const char* selected_repulsion_name();

} // namespace scimap::kernels
