#include "scimap/kernels.hpp"

namespace scimap::kernels {

// Reference kernel. The SIMD variants replicate this operation sequence
// per lane, so results are bitwise identical across variants.
void repulsion_scalar(const double* x, const double* y, std::size_t n,
                      std::size_t i_begin, std::size_t i_end, double k_sq,
                      double* dx, double* dy) {
  for (std::size_t i = i_begin; i < i_end; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    double sum_x = 0.0;
    double sum_y = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double ddx = xi - x[j];
      const double ddy = yi - y[j];
      const double dx2 = ddx * ddx;
      const double dy2 = ddy * ddy;
      double dist_sq = dx2 + dy2;
      if (dist_sq < kMinDistSq) dist_sq = kMinDistSq;
      const double f = k_sq / dist_sq;
      sum_x += ddx * f;
      sum_y += ddy * f;
    }
    dx[i] = sum_x;
    dy[i] = sum_y;
  }
}

} // namespace scimap::kernels
