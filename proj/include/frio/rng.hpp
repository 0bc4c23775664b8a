#pragma once

#include <cstdint>

namespace frio {

// Finalization mix (splitmix64). Bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based generator: the value at (seed, stream, counter) is a pure
// function of its coordinates, so chunked parallel consumers and a serial
// consumer draw identical numbers. Streams are cheap to split by index.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  static std::uint64_t word(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    std::uint64_t z = mix64(seed ^ 0x7c3a9e0f5b1d2468ULL);
    z = mix64(z ^ (stream * 0xd6e8feb86659fd93ULL));
    return mix64(z ^ (counter * 0xa0761d6478bd642fULL));
  }

  // Uniform double in [0, 1) with 53 random bits.
  static double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return static_cast<double>(word(seed, stream, counter) >> 11) * 0x1.0p-53;
  }

  std::uint64_t next_u64() { return word(seed_, stream_, counter_++); }
  double next_u01() { return uniform01(seed_, stream_, counter_++); }

  // Child generator with an independent stream; deterministic in the index.
  CounterRng split(std::uint64_t index) const {
    return CounterRng(seed_, mix64(stream_ ^ (index + 0x9e3779b97f4a7c15ULL)));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace frio
