#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace qramsey {

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Independent sub-seed for stream `index` of a run seeded with `seed`.
// Restarts and samples use derive_seed(seed, i) so that evaluation order
// never changes the outcome.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

// Counter-based randomness keyed by (seed, i, j) with the pair unordered.
std::uint64_t pair_hash(std::uint64_t seed, std::uint64_t i, std::uint64_t j) noexcept;
double pair_uniform(std::uint64_t seed, std::uint64_t i, std::uint64_t j) noexcept;  // [0, 1)

// Seeded generator with platform-independent bounded draws (the standard
// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform k-subset of [0, n), sorted (Floyd's algorithm).
  std::vector<std::uint32_t> subset(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qramsey
