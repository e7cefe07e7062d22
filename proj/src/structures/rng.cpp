#include "liecoh/structures/rng.hpp"

namespace liecoh {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t algebra, std::uint64_t stream, std::uint64_t trial)
    : key_(splitmix64(splitmix64(splitmix64(splitmix64(seed) ^ algebra) ^ stream) ^ trial)) {}

std::uint64_t CounterRng::next() { return splitmix64(key_ ^ splitmix64(counter_++)); }

std::int64_t CounterRng::uniform(std::int64_t lo, std::uint64_t size) {
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % size;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % size);
}

}  // namespace liecoh
