#include "gibbs_partition/rng.hpp"

namespace gibbs {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, StageTag tag) {
  const auto t = static_cast<std::uint64_t>(tag);
  return mix64(mix64(master ^ mix64(t)) + mix64(index + 0x9e3779b97f4a7c15ULL));
}

Engine derive_stream(std::uint64_t master, std::uint64_t index, StageTag tag) {
  return Engine(derive_seed(master, index, tag));
}

}  // namespace gibbs
