#include "qramsey/random.hpp"

#include <algorithm>
#include <unordered_set>

#include "qramsey/errors.hpp"

namespace qramsey {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(mix64(seed) ^ mix64(index + 0x632BE59BD9B4E019ULL));
}

std::uint64_t pair_hash(std::uint64_t seed, std::uint64_t i, std::uint64_t j) noexcept {
  if (i > j) std::swap(i, j);
  std::uint64_t h = mix64(seed ^ 0xD1B54A32D192ED03ULL);
  h = mix64(h ^ i);
  return mix64(h ^ (j * 0x9E3779B97F4A7C15ULL));
}

double pair_uniform(std::uint64_t seed, std::uint64_t i, std::uint64_t j) noexcept {
  return static_cast<double>(pair_hash(seed, i, j) >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

std::vector<std::uint32_t> Rng::subset(std::size_t n, std::size_t k) {
  if (k > n) throw DomainError("subset size exceeds population");
  std::vector<std::uint32_t> out;
  out.reserve(k);
  std::unordered_set<std::uint32_t> chosen;
  chosen.reserve(k * 2);
  for (std::size_t j = n - k; j < n; ++j) {
    const auto t = static_cast<std::uint32_t>(below(j + 1));
    const auto pick = chosen.contains(t) ? static_cast<std::uint32_t>(j) : t;
    chosen.insert(pick);
    out.push_back(pick);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qramsey
