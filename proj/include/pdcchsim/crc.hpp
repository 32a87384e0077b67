#pragma once

#include <cstdint>
#include <optional>

#include "pdcchsim/bits.hpp"

namespace pdcch {

enum class CrcPoly { Crc16Lte, Crc24cNr };

std::size_t crc_length(CrcPoly poly);

struct CrcConfig {
  CrcPoly polynomial = CrcPoly::Crc16Lte;
  /// When set, XORed onto the last 16 parity bits (MSB-first).
  std::optional<std::uint16_t> rnti_mask;
  /// NR DCI computes the CRC over L leading one bits prepended to the
  /// message; the ones are not transmitted.
  bool ones_prepend = false;
};

/// Parity bits of msg under the generator polynomial, zero-initialized
/// register, no masking. MSB-first, length == crc_length(poly).
BitVec crc_remainder(const BitVec& msg, CrcPoly poly);

/// msg || parity, with optional ones-prepending and RNTI masking.
BitVec crc_attach(const BitVec& msg, const CrcConfig& cfg);

/// True iff the trailing parity of codeword matches crc_attach of its
/// leading payload. Throws FormatError when codeword is not longer than
/// the CRC itself.
bool crc_check(const BitVec& codeword, const CrcConfig& cfg);

}  // namespace pdcch
