#pragma once

#include "pdcchsim/bits.hpp"
#include "pdcchsim/polar.hpp"

namespace pdcch {

enum class RmScheme { Lte, Nr };

/// LTE convolutional-code rate matching: per-stream 32-column sub-block
/// interleaving, circular buffer, E bits read with repetition/puncturing.
/// Input is the per-input-bit interleaved TBCC output (3K bits).
BitVec lte_rate_match(const BitVec& coded, int E);

/// NR polar rate matching: length-N sub-block interleaver, then repetition,
/// puncturing or shortening per cfg.rm_mode. Channel interleaving is
/// bypassed (interleaving option 0).
BitVec nr_rate_match(const BitVec& coded, int E, const PolarConfig& cfg);

/// Receiver-side inverse. Positions sent r times get the sum of their r
/// LLRs, punctured positions 0, shortened positions a large known-zero LLR.
/// For LTE, mother_len = 3K and cfg may be null; for NR, mother_len = N and
/// cfg supplies the rate-matching mode.
LlrVec rate_recover(const LlrVec& llr, RmScheme scheme, int mother_len,
                    const PolarConfig* cfg = nullptr);

/// Mother-position index for every transmitted position (shared by the
/// matcher, the recoverer and the tests).
std::vector<int> lte_rate_match_map(int mother_len, int E);
std::vector<int> nr_rate_match_map(int E, const PolarConfig& cfg);

/// LLR magnitude used for shortened (known-zero) coded bits.
inline constexpr double kShortenedLlr = 1e9;

}  // namespace pdcch
