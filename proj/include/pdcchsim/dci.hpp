#pragma once

#include <cstdint>

#include "pdcchsim/bits.hpp"

namespace pdcch {

enum class Standard { Lte, Nr };

enum class DciFormat { Lte1C, Nr10 };

enum class BandwidthMhz { Mhz1_4, Mhz3, Mhz5, Mhz10, Mhz15, Mhz20 };

/// Reserved-field width of LTE format 1C per channel bandwidth.
int reserved_bits(BandwidthMhz bw);

/// Resource blocks available in the given channel bandwidth at 15 kHz.
int rb_budget(BandwidthMhz bw);

struct DciMessage {
  DciFormat format = DciFormat::Nr10;
  BitVec payload_bits;
  std::uint16_t rnti = 0;
  BandwidthMhz bandwidth = BandwidthMhz::Mhz5;
};

/// Assemble a DCI payload.
///
/// LTE 1C takes exactly 8 notification bits and appends zeroed reserved
/// bits sized by the bandwidth. NR 1_0 payloads are treated as opaque and
/// must be at least 12 bits.
DciMessage build_dci(DciFormat format, BandwidthMhz bw, const BitVec& content_bits,
                     std::uint16_t rnti = 0);

}  // namespace pdcch
