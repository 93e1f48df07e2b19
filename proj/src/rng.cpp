#include "semnet/rng.hpp"

#include "semnet/stats.hpp"

namespace semnet {

std::uint64_t derive_seed(std::uint64_t master, std::span<const std::uint64_t> path) {
  std::uint64_t h = mix64(master);
  for (std::uint64_t step : path) {
    h = mix64(h ^ mix64(step + 0x632be59bd9b4e019ULL));
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  return derive_seed(master, std::span<const std::uint64_t>(path.begin(), path.size()));
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t Rng::integer(std::uint64_t bound) {
  // Rejection threshold: smallest residue class that would bias the modulo.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t raw = engine_();
    if (raw >= threshold) return raw % bound;
  }
}

double Rng::normal() { return normal_quantile(uniform_open()); }

std::size_t Rng::weighted_index(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  double target = uniform() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    acc += weights[i];
    if (target < acc) return i;
  }
  return weights.empty() ? 0 : weights.size() - 1;
}

}  // namespace semnet
