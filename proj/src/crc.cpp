#include "pdcchsim/crc.hpp"

namespace pdcch {
namespace {

// Generator coefficients below the leading term, MSB-first.
// CRC16:  x^16 + x^12 + x^5 + 1
// CRC24C: x^24 + x^23 + x^21 + x^20 + x^17 + x^15 + x^13 + x^12 + x^8
//         + x^4 + x^2 + x + 1
constexpr std::uint32_t kCrc16Poly = 0x1021;
constexpr std::uint32_t kCrc24cPoly = 0xB2B117;

std::uint32_t poly_bits(CrcPoly poly) {
  return poly == CrcPoly::Crc16Lte ? kCrc16Poly : kCrc24cPoly;
}

}  // namespace

std::size_t crc_length(CrcPoly poly) {
  return poly == CrcPoly::Crc16Lte ? 16 : 24;
}

BitVec crc_remainder(const BitVec& msg, CrcPoly poly) {
  const std::size_t len = crc_length(poly);
  const std::uint32_t gen = poly_bits(poly);
  const std::uint32_t top = 1u << (len - 1);
  std::uint32_t reg = 0;
  auto shift_in = [&](std::uint8_t bit) {
    const bool feedback = (reg & top) != 0;
    reg = (reg << 1) & ((1u << len) - 1u);
    reg |= bit;
    if (feedback) reg ^= gen;
  };
  for (auto b : msg) shift_in(b);
  for (std::size_t i = 0; i < len; ++i) shift_in(0);
  BitVec out(len);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint8_t>((reg >> (len - 1 - i)) & 1u);
  }
  return out;
}

BitVec crc_attach(const BitVec& msg, const CrcConfig& cfg) {
  if (msg.empty()) throw FormatError("crc_attach: empty message");
  const std::size_t len = crc_length(cfg.polynomial);
  BitVec basis;
  if (cfg.ones_prepend) {
    basis.assign(len, 1);
    basis.insert(basis.end(), msg.begin(), msg.end());
  } else {
    basis = msg;
  }
  BitVec parity = crc_remainder(basis, cfg.polynomial);
  if (cfg.rnti_mask) {
    const std::uint16_t mask = *cfg.rnti_mask;
    const std::size_t offset = len - 16;
    for (std::size_t i = 0; i < 16; ++i) {
      parity[offset + i] ^= static_cast<std::uint8_t>((mask >> (15 - i)) & 1u);
    }
  }
  BitVec out = msg;
  out.insert(out.end(), parity.begin(), parity.end());
  return out;
}

bool crc_check(const BitVec& codeword, const CrcConfig& cfg) {
  const std::size_t len = crc_length(cfg.polynomial);
  if (codeword.size() <= len) {
    throw FormatError("crc_check: codeword not longer than CRC");
  }
  BitVec payload(codeword.begin(), codeword.end() - static_cast<long>(len));
  return crc_attach(payload, cfg) == codeword;
}

}  // namespace pdcch
