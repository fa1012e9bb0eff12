#ifndef ASADMM_RNG_HPP_
#define ASADMM_RNG_HPP_

#include <cstdint>
#include <limits>

namespace asadmm {

/// SplitMix64 generator. Satisfies UniformRandomBitGenerator, so it plugs
/// into the <random> distributions. Tiny state makes it cheap to re-derive a
/// fresh stream per (seed, outer, inner) counter.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, n) by rejection; independent of the standard
  /// library's distribution implementation.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = max() - max() % n;
    std::uint64_t r;
    do {
      r = (*this)();
    } while (r >= limit);
    return r % n;
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Mixes a seed with stream counters into an independent generator seed.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b = 0) {
  SplitMix64 g(seed ^ (a * 0xd1b54a32d192ed03ULL));
  g();
  SplitMix64 h(g() ^ (b * 0x8cb92ba72f3d8dd7ULL));
  return h();
}

}  // namespace asadmm

#endif  // ASADMM_RNG_HPP_
