#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "scimap/kernels.hpp"

namespace scimap::kernels {

// Vectorized over target nodes: four i-lanes march over j sequentially, so
// every lane accumulates in the same order as the scalar kernel. No FMA;
// mul/add/max/div/cmp round exactly like their scalar counterparts.
void repulsion_avx2(const double* x, const double* y, std::size_t n,
                    std::size_t i_begin, std::size_t i_end, double k_sq,
                    double* dx, double* dy) {
  const __m256d vmin = _mm256_set1_pd(kMinDistSq);
  const __m256d vk = _mm256_set1_pd(k_sq);

  std::size_t i = i_begin;
  for (; i + 4 <= i_end; i += 4) {
    const __m256d xi = _mm256_loadu_pd(x + i);
    const __m256d yi = _mm256_loadu_pd(y + i);
    __m256d sum_x = _mm256_setzero_pd();
    __m256d sum_y = _mm256_setzero_pd();
    for (std::size_t j = 0; j < n; ++j) {
      const __m256d xj = _mm256_set1_pd(x[j]);
      const __m256d yj = _mm256_set1_pd(y[j]);
      const __m256d ddx = _mm256_sub_pd(xi, xj);
      const __m256d ddy = _mm256_sub_pd(yi, yj);
      const __m256d dx2 = _mm256_mul_pd(ddx, ddx);
      const __m256d dy2 = _mm256_mul_pd(ddy, ddy);
      const __m256d dist_sq = _mm256_max_pd(_mm256_add_pd(dx2, dy2), vmin);
      const __m256d f = _mm256_div_pd(vk, dist_sq);
      sum_x = _mm256_add_pd(sum_x, _mm256_mul_pd(ddx, f));
      sum_y = _mm256_add_pd(sum_y, _mm256_mul_pd(ddy, f));
    }
    _mm256_storeu_pd(dx + i, sum_x);
    _mm256_storeu_pd(dy + i, sum_y);
  }
  if (i < i_end) repulsion_scalar(x, y, n, i, i_end, k_sq, dx, dy);
}

} // namespace scimap::kernels

#endif
