#include "pdcchsim/dci.hpp"

namespace pdcch {

int reserved_bits(BandwidthMhz bw) {
  switch (bw) {
    case BandwidthMhz::Mhz1_4: return 0;
    case BandwidthMhz::Mhz3: return 2;
    case BandwidthMhz::Mhz5: return 4;
    case BandwidthMhz::Mhz10: return 5;
    case BandwidthMhz::Mhz15: return 6;
    case BandwidthMhz::Mhz20: return 7;
  }
  throw ConfigError("unknown bandwidth");
}

int rb_budget(BandwidthMhz bw) {
  switch (bw) {
    case BandwidthMhz::Mhz1_4: return 6;
    case BandwidthMhz::Mhz3: return 15;
    case BandwidthMhz::Mhz5: return 25;
    case BandwidthMhz::Mhz10: return 50;
    case BandwidthMhz::Mhz15: return 75;
    case BandwidthMhz::Mhz20: return 100;
  }
  throw ConfigError("unknown bandwidth");
}

DciMessage build_dci(DciFormat format, BandwidthMhz bw, const BitVec& content_bits,
                     std::uint16_t rnti) {
  DciMessage msg;
  msg.format = format;
  msg.bandwidth = bw;
  msg.rnti = rnti;
  if (format == DciFormat::Lte1C) {
    if (content_bits.size() != 8) {
      throw FormatError("LTE 1C expects exactly 8 notification bits, got " +
                        std::to_string(content_bits.size()));
    }
    msg.payload_bits = content_bits;
    msg.payload_bits.resize(8 + static_cast<std::size_t>(reserved_bits(bw)), 0);
  } else {
    if (content_bits.size() < 12) {
      throw FormatError("NR 1_0 payload must be at least 12 bits, got " +
                        std::to_string(content_bits.size()));
    }
    msg.payload_bits = content_bits;
  }
  return msg;
}

}  // namespace pdcch
