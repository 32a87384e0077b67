#pragma once

#include <array>
#include <cstdint>

#include "pdcchsim/bits.hpp"

namespace pdcch {

/// Rate-1/3 tail-biting convolutional code, constraint length 7.
struct TbccConfig {
  int constraint_length = 7;
  std::array<unsigned, 3> generators_octal = {0133, 0171, 0165};
  int wava_iterations = 2;
};

/// Encode with the shift register preloaded from the last 6 info bits so the
/// trellis starts and ends in the same state. Output is per-input-bit
/// interleaved: d0(0), d1(0), d2(0), d0(1), ...
BitVec tbcc_encode(const BitVec& info, const TbccConfig& cfg = {});

struct TbccDecodeResult {
  BitVec bits;
  /// True when the selected survivor begins and ends in the same state.
  bool tail_biting_closed = false;
  double metric = 0.0;
};

/// Wrap-around Viterbi (WAVA): runs cfg.wava_iterations passes, carrying end
/// metrics into the next pass, and returns the best tail-biting survivor
/// (best unclosed survivor if no pass closes).
TbccDecodeResult tbcc_decode(const LlrVec& llr, const TbccConfig& cfg = {});

}  // namespace pdcch
