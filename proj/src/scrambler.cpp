#include "pdcchsim/scrambler.hpp"

#include <cmath>

namespace pdcch {
namespace {

constexpr std::size_t kWarmup = 1600;

}  // namespace

BitVec gold_sequence(std::uint32_t c_init, std::size_t len) {
  // x1(n+31) = x1(n+3) + x1(n); x2(n+31) = x2(n+3) + x2(n+2) + x2(n+1) + x2(n)
  std::uint32_t x1 = 1;
  std::uint32_t x2 = c_init & 0x7FFFFFFFu;
  auto step1 = [&]() {
    const std::uint32_t fb = ((x1 >> 3) ^ x1) & 1u;
    x1 = (x1 >> 1) | (fb << 30);
  };
  auto step2 = [&]() {
    const std::uint32_t fb = ((x2 >> 3) ^ (x2 >> 2) ^ (x2 >> 1) ^ x2) & 1u;
    x2 = (x2 >> 1) | (fb << 30);
  };
  for (std::size_t i = 0; i < kWarmup; ++i) {
    step1();
    step2();
  }
  BitVec out(len);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint8_t>((x1 ^ x2) & 1u);
    step1();
    step2();
  }
  return out;
}

BitVec scramble(const BitVec& bits, std::uint32_t c_init) {
  const BitVec seq = gold_sequence(c_init, bits.size());
  return xor_bits(bits, seq);
}

CplxVec gold_qpsk(std::uint32_t c_init, std::size_t n_symbols) {
  const BitVec seq = gold_sequence(c_init, 2 * n_symbols);
  CplxVec out(n_symbols);
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < n_symbols; ++i) {
    out[i] = {s * (1.0 - 2.0 * seq[2 * i]), s * (1.0 - 2.0 * seq[2 * i + 1])};
  }
  return out;
}

}  // namespace pdcch
