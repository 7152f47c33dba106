#ifndef FIM_RNG_HPP
#define FIM_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace fim {

// Deterministic random source built on std::mt19937_64, whose output
// sequence is fixed by the standard. All derived draws below are defined
// here rather than via std::*_distribution, which is allowed to differ
// between standard libraries; this keeps generated bytes identical across
// platforms for a given seed.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, n), n >= 1. Rejects the low 2^64 mod n raw
  // values so every result is equally likely.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) {
        return x % n;
      }
    }
  }

  // Uniform integer in [lo, hi], inclusive.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  // True with probability p: compares a 53-bit uniform in [0, 1) to p.
  bool bernoulli(double p) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
  }

  // Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace fim

#endif  // FIM_RNG_HPP
