#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "mstv/kernels.hpp"
#include "mstv/oracle.hpp"

namespace mstv {

/// Search domain of N = max(2, 2^ceil(log2 L)) basis states; indices at or
/// beyond the logical size L are padding and never marked.
class SearchSpace {
 public:
  using Marker = std::function<bool(std::size_t)>;

  // Throws Error{InvalidArgument} when logical_size is 0.
  SearchSpace(std::size_t logical_size, Marker marker);

  std::size_t logical_size() const noexcept { return logical_size_; }
  std::size_t domain_size() const noexcept { return domain_size_; }
  bool is_marked(std::size_t i) const { return i < logical_size_ && marker_(i); }

 private:
  std::size_t logical_size_;
  std::size_t domain_size_;
  Marker marker_;
};

/// Dense real statevector over a search space. The oracle's phase pattern is
/// tabulated once at construction; iterate() then applies one oracle
/// application followed by inversion about the mean.
class GroverSimulator {
 public:
  explicit GroverSimulator(const SearchSpace& space,
                           const simd::KernelTable& kernels = simd::active_kernels());

  void reset_uniform();
  void iterate();

  std::size_t domain_size() const noexcept { return amplitudes_.size(); }
  std::size_t marked_count() const noexcept { return marked_count_; }
  std::span<const double> amplitudes() const noexcept { return amplitudes_; }
  bool is_marked(std::size_t i) const noexcept { return sign_[i] < 0.0; }

  double norm_squared() const { return kernels_->sum_squares(amplitudes_); }
  double marked_probability() const { return kernels_->masked_sum_squares(amplitudes_, sign_); }

  // Samples an index with probability |a_i|^2.
  std::size_t measure(std::mt19937_64& rng) const;

 private:
  const simd::KernelTable* kernels_;
  std::vector<double> amplitudes_;
  std::vector<double> sign_;  // -1 on marked indices, +1 elsewhere
  std::size_t marked_count_ = 0;
};

struct GroverRunStats {
  std::uint64_t iterations = 0;
  std::uint64_t oracle_applications = 0;
  std::size_t measured_index = 0;
  bool success = false;
};

// Uniform superposition, `iterations` Grover iterations, one measurement.
GroverRunStats grover_search(const SearchSpace& space, std::uint64_t iterations,
                             std::uint64_t rng_seed);

// sin^2((2r+1) asin(sqrt(k/N))), and 0 when k = 0.
double success_probability(std::uint64_t domain_size, std::uint64_t marked, std::uint64_t iterations);

// floor(pi/4 * sqrt(N/k)). Throws Error{KZero} when k = 0.
std::uint64_t optimal_iterations(std::uint64_t domain_size, std::uint64_t marked);

struct BbhtConfig {
  double growth = 1.2;         // schedule growth factor
  double cutoff_factor = 9.0;  // Grover iterations per schedule <= factor * ceil(sqrt(N))
  std::size_t schedules = 1;   // independent schedules before giving up
  std::size_t statevector_cap = std::size_t{1} << 22;
};

struct BbhtResult {
  std::optional<std::size_t> found;
  GroverRunStats stats;  // accumulated over every round
  std::uint64_t checks = 0;  // classical checks of measured indices
  std::uint64_t rounds = 0;
  std::size_t schedules_run = 0;
  bool analytic = false;  // domain exceeded the statevector cap
};

// Iterations allowed per schedule: ceil(cutoff_factor * ceil(sqrt(N))).
std::uint64_t bbht_cutoff(std::size_t domain_size, double cutoff_factor);

/// Search with an unknown number of marked indices: rounds of a uniformly
/// random iteration count below a bound that grows by `growth` each round,
/// each ending in a measurement that is checked classically. Iterations and
/// checks are both charged to the oracle's quantum counter. Above the
/// statevector cap the measurement distribution is sampled from its closed
/// form instead of a dense simulation.
BbhtResult bbht_search(const SearchSpace& space, std::uint64_t rng_seed, InstrumentedOracle& o,
                       const BbhtConfig& config = {});

}  // namespace mstv
