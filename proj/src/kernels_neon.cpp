#if defined(__aarch64__)

#include <arm_neon.h>

#include "scimap/kernels.hpp"

namespace scimap::kernels {

// Two i-lanes per step, j sequential: accumulation order matches the scalar
// kernel lane for lane. vdivq/vmaxnmq round exactly like scalar ops.
void repulsion_neon(const double* x, const double* y, std::size_t n,
                    std::size_t i_begin, std::size_t i_end, double k_sq,
                    double* dx, double* dy) {
  const float64x2_t vmin = vdupq_n_f64(kMinDistSq);
  const float64x2_t vk = vdupq_n_f64(k_sq);

  std::size_t i = i_begin;
  for (; i + 2 <= i_end; i += 2) {
    const float64x2_t xi = vld1q_f64(x + i);
    const float64x2_t yi = vld1q_f64(y + i);
    float64x2_t sum_x = vdupq_n_f64(0.0);
    float64x2_t sum_y = vdupq_n_f64(0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const float64x2_t xj = vdupq_n_f64(x[j]);
      const float64x2_t yj = vdupq_n_f64(y[j]);
      const float64x2_t ddx = vsubq_f64(xi, xj);
      const float64x2_t ddy = vsubq_f64(yi, yj);
      const float64x2_t dx2 = vmulq_f64(ddx, ddx);
      const float64x2_t dy2 = vmulq_f64(ddy, ddy);
      const float64x2_t dist_sq = vmaxq_f64(vaddq_f64(dx2, dy2), vmin);
      const float64x2_t f = vdivq_f64(vk, dist_sq);
      sum_x = vaddq_f64(sum_x, vmulq_f64(ddx, f));
      sum_y = vaddq_f64(sum_y, vmulq_f64(ddy, f));
    }
    vst1q_f64(dx + i, sum_x);
    vst1q_f64(dy + i, sum_y);
  }
  if (i < i_end) repulsion_scalar(x, y, n, i, i_end, k_sq, dx, dy);
}

} // namespace scimap::kernels

#endif
