#ifndef UMC_PRNG_HPP
#define UMC_PRNG_HPP

#include <cstdint>
#include <span>

namespace umc {

// SplitMix64 sequence (Steele, Lea, Flood; constants from Vigna's reference
// implementation). Every seeded behavior in the library goes through this
// generator so identical seeds give identical results on all platforms.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // next() mod bound; bound > 0. The modulo bias is irrelevant here, the
  // requirement is determinism, not statistical quality.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  // uniform double in [0, 1) with 53 random bits
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

// Fisher-Yates: for i = n-1 .. 1, swap a[i] with a[rng mod (i+1)].
template <typename T>
void fisher_yates_shuffle(std::span<T> a, SplitMix64& rng) {
  for (std::size_t i = a.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    T tmp = a[i - 1];
    a[i - 1] = a[j];
    a[j] = tmp;
  }
}

}  // namespace umc

#endif
