#pragma once

#include <cstdint>

#include "pdcchsim/bits.hpp"

namespace pdcch {

/// Length-31 Gold sequence, dual LFSR with the usual 1600-step fast-forward.
/// c_init seeds the second register; the first starts at 1.
BitVec gold_sequence(std::uint32_t c_init, std::size_t len);

/// XOR with the Gold sequence; self-inverse for a fixed c_init.
BitVec scramble(const BitVec& bits, std::uint32_t c_init);

/// Unit-power QPSK pilots drawn from the Gold sequence.
CplxVec gold_qpsk(std::uint32_t c_init, std::size_t n_symbols);

}  // namespace pdcch
