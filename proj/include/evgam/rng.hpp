#ifndef EVGAM_RNG_HPP
#define EVGAM_RNG_HPP

#include <cstdint>
#include <random>

namespace evgam {

namespace detail {
// SplitMix64 step; used only to expand/derive seeds, never as the main engine.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

// Seedable, splittable generator. stream(r) yields an independent child whose
// state is a pure function of (root seed, r), so Monte Carlo replicates can
// run in any order or in parallel without stream overlap.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : root_(seed) {
    std::uint64_t s = seed;
    engine_.seed(detail::splitmix64(s));
  }

  Rng stream(std::uint64_t index) const {
    std::uint64_t s = root_ ^ (0xd1b54a32d192ed03ull * (index + 1));
    return Rng(detail::splitmix64(s));
  }

  std::mt19937_64& engine() { return engine_; }

  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }
  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(engine_);
  }
  double normal() {
    return std::normal_distribution<double>(0.0, 1.0)(engine_);
  }
  double gamma(double shape) {
    return std::gamma_distribution<double>(shape, 1.0)(engine_);
  }
  double beta(double a, double b) {
    double x = gamma(a);
    double y = gamma(b);
    return x / (x + y);
  }
  double exponential() {
    return std::exponential_distribution<double>(1.0)(engine_);
  }
  // Unit Frechet by inversion of exp(-1/y).
  double frechet() {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    return -1.0 / std::log(u);
  }
  std::uint64_t root_seed() const { return root_; }

 private:
  std::uint64_t root_;
  std::mt19937_64 engine_;
};

}  // namespace evgam

#endif
