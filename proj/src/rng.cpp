#include "pdcchsim/rng.hpp"

namespace pdcch {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ (a + 0x9E3779B97F4A7C15ull));
  h = splitmix64(h ^ (b + 0xC2B2AE3D27D4EB4Full));
  return h;
}

}  // namespace pdcch
