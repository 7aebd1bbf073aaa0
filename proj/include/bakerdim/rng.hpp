#ifndef BAKERDIM_RNG_HPP
#define BAKERDIM_RNG_HPP

#include <cstdint>

namespace bakerdim {

// SplitMix64. Used instead of std::uniform_real_distribution so that sampled
// points (and therefore all CSV output) are identical across platforms and
// standard libraries.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1) with 53 random bits
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

} // namespace bakerdim

#endif
