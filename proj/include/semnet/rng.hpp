#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace semnet {

// splitmix64 finalizer; the workhorse behind seed derivation.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent stream seed from a master seed and an index path.
// Pure function of its inputs: identical (master, path) give identical seeds
// regardless of platform, thread count, or call order.
std::uint64_t derive_seed(std::uint64_t master, std::span<const std::uint64_t> path);
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

// FNV-1a, used to fold strings (config ids, labels) into seed paths.
std::uint64_t fnv1a(std::string_view text);

// Deterministic random source. Wraps std::mt19937_64 (whose output sequence
// is fixed by the standard) and converts to variates through explicit
// formulas instead of std:: distributions, which are implementation-defined.
// Two builds on different compilers therefore draw identical sequences.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1); never returns an exact endpoint.
  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, bound), bound > 0, rejection-sampled to avoid
  // modulo bias.
  std::uint64_t integer(std::uint64_t bound);

  // Standard normal draw via the inverse-CDF method.
  double normal();

  // Index draw proportional to the given nonnegative weights.
  std::size_t weighted_index(std::span<const double> weights);

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(integer(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace semnet
