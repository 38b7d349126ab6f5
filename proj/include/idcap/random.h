#ifndef IDCAP_RANDOM_H_
#define IDCAP_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace idcap {

std::uint64_t SplitMix64(std::uint64_t x);

// Counter-based stream derivation: the seed of the stream for
// (videoset, kind, sample) is a SplitMix64 chain over the root seed, the
// FNV-1a hash of the videoset id, the kind code and the sample number.
// Corpus order never influences a stream.
std::uint64_t DeriveStreamSeed(std::uint64_t root, std::string_view videoset_id,
                               int kind, int sample);

// std::mt19937_64 is fully specified by the standard; the distributions
// below are implemented here so draws are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n); n must be > 0. Rejection sampling, no modulo bias.
  std::size_t UniformIndex(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace idcap

#endif  // IDCAP_RANDOM_H_
