#pragma once

#include <cstdint>

namespace liecoh {

std::uint64_t splitmix64(std::uint64_t x);

/// Counter-based generator: the k-th draw depends only on the key and k, so
/// any trial can be reproduced on any thread without shared state.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t algebra, std::uint64_t stream, std::uint64_t trial);

  std::uint64_t next();
  /// Uniform integer in [lo, lo + size), size > 0.
  std::int64_t uniform(std::int64_t lo, std::uint64_t size);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Stream identifiers, one per sampling consumer.
namespace rng_stream {
inline constexpr std::uint64_t symplectic = 1;
inline constexpr std::uint64_t frobenius = 2;
inline constexpr std::uint64_t cnla = 3;
inline constexpr std::uint64_t affine_derivation = 4;
inline constexpr std::uint64_t affine_coadjoint = 5;
inline constexpr std::uint64_t pfaffian_point = 6;
inline constexpr std::uint64_t report = 7;
}  // namespace rng_stream

}  // namespace liecoh
