#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mediator::stats {

// Deterministic random source for every resampling and simulation path.
//
// The generator is std::mt19937_64 seeded directly with the 64-bit seed; its
// output sequence is pinned by the C++ standard, so streams are identical
// across platforms and standard libraries. Standard-library distributions
// are NOT pinned, so bounded sampling is implemented here: rejection
// sampling for integers, 53-bit mantissa scaling for reals, Fisher-Yates
// (descending index) for shuffles. Golden values frozen against this class
// survive recompilation anywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, n), unbiased via rejection. n must be > 0.
  std::size_t uniform_index(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
      draw = gen_();
    } while (draw >= limit);
    return static_cast<std::size_t>(draw % bound);
  }

  // Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform_index(static_cast<std::size_t>(hi - lo) + 1));
  }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform_real() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[uniform_index(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mediator::stats
