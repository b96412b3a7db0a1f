#ifndef TEAMAI_RNG_HPP
#define TEAMAI_RNG_HPP

#include <cstdint>
#include <vector>

namespace teamai {

/// Counter-based pseudo-random stream built on the splitmix64 mixer. Each
/// (seed, stream) pair yields an independent deterministic sequence, so
/// Monte Carlo trials can be keyed by trial index and replayed bit-for-bit
/// no matter how work is scheduled across threads.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : state_(mix(mix(seed) ^ mix(stream ^ 0x9e3779b97f4a7c15ULL))) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

  /// Draws an index from {0, .., probs.size()}: index k with probability
  /// probs[k], and probs.size() with the remaining mass.
  int categorical_or_rest(const std::vector<double>& probs) {
    double u = next_double();
    double acc = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
      acc += probs[k];
      if (u < acc) return static_cast<int>(k);
    }
    return static_cast<int>(probs.size());
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

}  // namespace teamai

#endif  // TEAMAI_RNG_HPP
