#include "fdepth/rng.hpp"

namespace fdepth::rng {

std::uint64_t derive_stream(std::uint64_t seed,
                            std::initializer_list<std::uint64_t> path) {
  std::uint64_t state = seed;
  std::uint64_t key = splitmix64_next(state);
  for (std::uint64_t tag : path) {
    state = key ^ tag;
    key = splitmix64_next(state);
  }
  return key;
}

}  // namespace fdepth::rng
