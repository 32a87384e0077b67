#pragma once

#include "pdcchsim/bits.hpp"

namespace pdcch {

/// Gray-mapped QPSK: (b0, b1) -> ((1-2*b0) + j(1-2*b1)) / sqrt(2).
CplxVec qpsk_map(const BitVec& bits);

/// Exact LLRs for the mapping above: llr(b0) = 2*sqrt(2)*Re(y)/noise_var,
/// llr(b1) = 2*sqrt(2)*Im(y)/noise_var, with a per-symbol noise variance.
LlrVec qpsk_demap(const CplxVec& symbols, const std::vector<double>& noise_var);
LlrVec qpsk_demap(const CplxVec& symbols, double noise_var);

}  // namespace pdcch
