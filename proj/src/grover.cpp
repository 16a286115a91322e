#include "mstv/grover.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "mstv/error.hpp"

namespace mstv {

SearchSpace::SearchSpace(std::size_t logical_size, Marker marker)
    : logical_size_(logical_size), marker_(std::move(marker)) {
  if (logical_size == 0) throw Error(ErrorKind::InvalidArgument, "search space must be non-empty");
  domain_size_ = std::max<std::size_t>(2, std::bit_ceil(logical_size));
}

GroverSimulator::GroverSimulator(const SearchSpace& space, const simd::KernelTable& kernels)
    : kernels_(&kernels),
      amplitudes_(space.domain_size()),
      sign_(space.domain_size(), 1.0) {
  for (std::size_t i = 0; i < space.logical_size(); ++i) {
    if (space.is_marked(i)) {
      sign_[i] = -1.0;
      ++marked_count_;
    }
  }
  reset_uniform();
}

void GroverSimulator::reset_uniform() {
  std::fill(amplitudes_.begin(), amplitudes_.end(),
            1.0 / std::sqrt(static_cast<double>(amplitudes_.size())));
}

void GroverSimulator::iterate() {
  kernels_->apply_signs(amplitudes_, sign_);
  const double mean = kernels_->sum(amplitudes_) / static_cast<double>(amplitudes_.size());
  kernels_->reflect(amplitudes_, 2.0 * mean);
}

std::size_t GroverSimulator::measure(std::mt19937_64& rng) const {
  const double total = norm_squared();
  const double target = std::uniform_real_distribution<double>(0.0, 1.0)(rng) * total;
  double cumulative = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    cumulative += amplitudes_[i] * amplitudes_[i];
    if (target < cumulative) return i;
  }
  // Rounding left the target past the last partial sum; take the last index
  // with non-zero mass.
  for (std::size_t i = amplitudes_.size(); i-- > 0;) {
    if (amplitudes_[i] != 0.0) return i;
  }
  return amplitudes_.size() - 1;
}

GroverRunStats grover_search(const SearchSpace& space, std::uint64_t iterations,
                             std::uint64_t rng_seed) {
  GroverSimulator sim(space);
  for (std::uint64_t r = 0; r < iterations; ++r) sim.iterate();
  std::mt19937_64 rng(rng_seed);
  GroverRunStats stats;
  stats.iterations = iterations;
  stats.oracle_applications = iterations;
  stats.measured_index = sim.measure(rng);
  stats.success = space.is_marked(stats.measured_index);
  return stats;
}

double success_probability(std::uint64_t domain_size, std::uint64_t marked, std::uint64_t iterations) {
  if (marked == 0) return 0.0;
  if (marked >= domain_size) return 1.0;
  const double theta =
      std::asin(std::sqrt(static_cast<double>(marked) / static_cast<double>(domain_size)));
  const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
  return s * s;
}

std::uint64_t optimal_iterations(std::uint64_t domain_size, std::uint64_t marked) {
  if (marked == 0) throw Error(ErrorKind::KZero, "optimal iteration count needs k >= 1");
  const double ratio = static_cast<double>(domain_size) / static_cast<double>(marked);
  return static_cast<std::uint64_t>(std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
}

std::uint64_t bbht_cutoff(std::size_t domain_size, double cutoff_factor) {
  const double root = std::ceil(std::sqrt(static_cast<double>(domain_size)));
  return static_cast<std::uint64_t>(std::ceil(cutoff_factor * root));
}

namespace {

// Draws the measurement outcome of `iterations` Grover iterations either from
// the dense simulator or, in analytic mode, from the two-level closed form.
class RoundSampler {
 public:
  RoundSampler(const SearchSpace& space, std::size_t cap) : space_(space) {
    analytic_ = space.domain_size() > cap;
    if (analytic_) {
      for (std::size_t i = 0; i < space.logical_size(); ++i) {
        if (space.is_marked(i)) marked_.push_back(i);
      }
    } else {
      sim_.emplace(space);
    }
  }

  bool analytic() const noexcept { return analytic_; }

  std::size_t sample(std::uint64_t iterations, std::mt19937_64& rng) {
    if (!analytic_) {
      sim_->reset_uniform();
      for (std::uint64_t r = 0; r < iterations; ++r) sim_->iterate();
      return sim_->measure(rng);
    }
    const double p = success_probability(space_.domain_size(), marked_.size(), iterations);
    const bool hit = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    if (hit) {
      return marked_[std::uniform_int_distribution<std::size_t>(0, marked_.size() - 1)(rng)];
    }
    // Unmarked outcome; all unmarked indices share one amplitude.
    const std::size_t unmarked = space_.domain_size() - marked_.size();
    std::size_t rank = std::uniform_int_distribution<std::size_t>(0, unmarked - 1)(rng);
    std::size_t idx = rank;
    for (std::size_t m : marked_) {
      if (m <= idx) ++idx;
      else break;
    }
    return idx;
  }

 private:
  const SearchSpace& space_;
  bool analytic_ = false;
  std::optional<GroverSimulator> sim_;
  std::vector<std::size_t> marked_;  // ascending
};

}  // namespace

BbhtResult bbht_search(const SearchSpace& space, std::uint64_t rng_seed, InstrumentedOracle& o,
                       const BbhtConfig& config) {
  if (!(config.growth > 1.0)) throw Error(ErrorKind::InvalidArgument, "growth factor must exceed 1");
  if (!(config.cutoff_factor > 0.0)) throw Error(ErrorKind::InvalidArgument, "cutoff factor must be positive");

  const std::size_t n = space.domain_size();
  const double root_n = std::sqrt(static_cast<double>(n));
  const std::uint64_t cutoff = bbht_cutoff(n, config.cutoff_factor);

  std::mt19937_64 rng(rng_seed);
  RoundSampler sampler(space, config.statevector_cap);
  BbhtResult result;
  result.analytic = sampler.analytic();

  for (std::size_t s = 0; s < config.schedules && !result.found; ++s) {
    ++result.schedules_run;
    double bound = 1.0;
    std::uint64_t used = 0;
    while (used <= cutoff) {
      const auto ceiling = static_cast<std::uint64_t>(std::ceil(bound));
      std::uint64_t j = std::uniform_int_distribution<std::uint64_t>(0, ceiling - 1)(rng);
      j = std::min(j, cutoff - used);
      const std::size_t index = sampler.sample(j, rng);
      o.charge_quantum(j + 1);  // j iterations plus the classical check
      used += j;
      ++result.rounds;
      ++result.checks;
      result.stats.iterations += j;
      result.stats.oracle_applications += j;
      result.stats.measured_index = index;
      if (space.is_marked(index)) {
        result.found = index;
        result.stats.success = true;
        break;
      }
      if (used == cutoff) break;
      bound = std::min(bound * config.growth, root_n);
    }
  }
  return result;
}

}  // namespace mstv
