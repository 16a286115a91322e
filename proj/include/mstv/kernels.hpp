#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Amplitude kernels behind the Grover simulator. Every backend accumulates
// reductions in four interleaved lanes (element i goes to lane i % 4) and
// combines them as (l0 + l1) + (l2 + l3), so all backends are bit-identical
// with the scalar reference.
namespace mstv::simd {

struct KernelTable {
  std::string_view name;
  double (*sum)(std::span<const double> a);
  double (*sum_squares)(std::span<const double> a);
  // Sum of a[i]^2 over entries whose sign[i] is negative.
  double (*masked_sum_squares)(std::span<const double> a, std::span<const double> sign);
  // a[i] *= sign[i]; signs are +1 or -1, so the product is exact.
  void (*apply_signs)(std::span<double> a, std::span<const double> sign);
  // a[i] = center - a[i]
  void (*reflect)(std::span<double> a, double center);
};

const KernelTable& scalar_kernels() noexcept;

// nullptr when the build target or the running CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

// Best table for this CPU. Setting MSTV_SIMD=scalar in the environment forces
// the scalar reference.
const KernelTable& active_kernels() noexcept;

}  // namespace mstv::simd
