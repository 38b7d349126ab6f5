#include "idcap/random.h"

#include <limits>

#include "idcap/lexicon.h"

namespace idcap {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveStreamSeed(std::uint64_t root, std::string_view videoset_id,
                               int kind, int sample) {
  std::uint64_t s = SplitMix64(root);
  s = SplitMix64(s ^ Fnv1a64(videoset_id));
  s = SplitMix64(s ^ static_cast<std::uint64_t>(kind));
  s = SplitMix64(s ^ static_cast<std::uint64_t>(sample));
  return s;
}

std::size_t Rng::UniformIndex(std::size_t n) {
  const std::uint64_t range = static_cast<std::uint64_t>(n);
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % range);
}

}  // namespace idcap
