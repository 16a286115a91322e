#include "mstv/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define MSTV_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace mstv::simd {

#if MSTV_HAVE_AVX2_KERNELS
namespace {

// Only "avx2", not "fma": mul+add must not be contracted, or the reductions
// would stop matching the scalar reference bit for bit.
#define MSTV_AVX2 __attribute__((target("avx2")))

MSTV_AVX2 double finish(__m256d acc, std::span<const double> a, std::size_t i, bool square) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  for (; i < a.size(); ++i) lanes[i % 4] += square ? a[i] * a[i] : a[i];
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

MSTV_AVX2 double sum_avx2(std::span<const double> a) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a.data() + i));
  return finish(acc, a, i, false);
}

MSTV_AVX2 double sum_squares_avx2(std::span<const double> a) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) {
    const __m256d x = _mm256_loadu_pd(a.data() + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(x, x));
  }
  return finish(acc, a, i, true);
}

MSTV_AVX2 double masked_sum_squares_avx2(std::span<const double> a, std::span<const double> sign) {
  const __m256d zero = _mm256_setzero_pd();
  __m256d acc = zero;
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) {
    const __m256d x = _mm256_loadu_pd(a.data() + i);
    const __m256d marked = _mm256_cmp_pd(_mm256_loadu_pd(sign.data() + i), zero, _CMP_LT_OQ);
    acc = _mm256_add_pd(acc, _mm256_and_pd(marked, _mm256_mul_pd(x, x)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  for (; i < a.size(); ++i) lanes[i % 4] += sign[i] < 0.0 ? a[i] * a[i] : 0.0;
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

MSTV_AVX2 void apply_signs_avx2(std::span<double> a, std::span<const double> sign) {
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) {
    const __m256d x = _mm256_loadu_pd(a.data() + i);
    _mm256_storeu_pd(a.data() + i, _mm256_mul_pd(x, _mm256_loadu_pd(sign.data() + i)));
  }
  for (; i < a.size(); ++i) a[i] *= sign[i];
}

MSTV_AVX2 void reflect_avx2(std::span<double> a, double center) {
  const __m256d c = _mm256_set1_pd(center);
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) {
    _mm256_storeu_pd(a.data() + i, _mm256_sub_pd(c, _mm256_loadu_pd(a.data() + i)));
  }
  for (; i < a.size(); ++i) a[i] = center - a[i];
}

#undef MSTV_AVX2

}  // namespace

const KernelTable* avx2_kernels() noexcept {
  static const bool supported = __builtin_cpu_supports("avx2");
  static const KernelTable table{"avx2",          sum_avx2,         sum_squares_avx2,
                                 masked_sum_squares_avx2, apply_signs_avx2, reflect_avx2};
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_kernels() noexcept { return nullptr; }

#endif

}  // namespace mstv::simd
