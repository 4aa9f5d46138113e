#include "scimap/kernels.hpp"

namespace scimap::kernels {

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_available() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}
#endif

namespace {

struct Selected {
  RepulsionFn fn;
  const char* name;
};

Selected select() {
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_available()) return {repulsion_avx2, "avx2"};
#elif defined(__aarch64__)
  return {repulsion_neon, "neon"};
#endif
  return {repulsion_scalar, "scalar"};
}

const Selected& selected() {
  static const Selected s = select();
  return s;
}

} // namespace

RepulsionFn select_repulsion() { return selected().fn; }

const char* selected_repulsion_name() { return selected().name; }

} // namespace scimap::kernels
