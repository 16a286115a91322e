#include "mstv/kernels.hpp"

namespace mstv::simd {
namespace {

double combine(const double (&lanes)[4]) { return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]); }

double sum_scalar(std::span<const double> a) {
  double lanes[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) lanes[i % 4] += a[i];
  return combine(lanes);
}

double sum_squares_scalar(std::span<const double> a) {
  double lanes[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) lanes[i % 4] += a[i] * a[i];
  return combine(lanes);
}

double masked_sum_squares_scalar(std::span<const double> a, std::span<const double> sign) {
  double lanes[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) lanes[i % 4] += sign[i] < 0.0 ? a[i] * a[i] : 0.0;
  return combine(lanes);
}

void apply_signs_scalar(std::span<double> a, std::span<const double> sign) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= sign[i];
}

void reflect_scalar(std::span<double> a, double center) {
  for (double& x : a) x = center - x;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{"scalar",           sum_scalar,         sum_squares_scalar,
                                 masked_sum_squares_scalar, apply_signs_scalar, reflect_scalar};
  return table;
}

}  // namespace mstv::simd
