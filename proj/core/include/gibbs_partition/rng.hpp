#pragma once

#include <cstdint>
#include <random>

namespace gibbs {

/// Engine used for every stream. Streams are never shared between workers.
using Engine = std::mt19937_64;

/// Tags distinguishing the independent stages of one estimate. Values are
/// part of the reproducibility contract and must not be renumbered.
enum class StageTag : std::uint64_t {
  initial_estimate = 1,
  schedule_runs = 2,
  thinning = 3,
  replicates = 4,
  baseline = 5,
  repetition = 6,
  boost = 7,
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Derives the seed of sub-stream (index, tag) from a 64-bit master seed.
///
/// seed = mix64(mix64(master ^ mix64(tag)) + mix64(index + 0x9e3779b97f4a7c15))
///
/// Derivation depends only on (master, index, tag), never on scheduling, so
/// results reproduce bit-for-bit for any worker count.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, StageTag tag);

Engine derive_stream(std::uint64_t master, std::uint64_t index, StageTag tag);

/// Uniform draw on the open interval (0, 1); never returns 0 or 1.
inline double uniform_open(Engine& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace gibbs
