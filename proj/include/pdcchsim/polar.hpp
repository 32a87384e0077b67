#pragma once

#include <optional>
#include <vector>

#include "pdcchsim/bits.hpp"
#include "pdcchsim/crc.hpp"

namespace pdcch {

enum class PolarRmMode { Repetition, Puncturing, Shortening };

struct PolarConfig {
  int n = 0;           ///< log2(N)
  int N = 0;           ///< mother code length
  int K = 0;           ///< information length including CRC
  int E = 0;           ///< transmitted length after rate matching
  PolarRmMode rm_mode = PolarRmMode::Repetition;
  int list_size = 8;
  std::vector<int> info_set;        ///< ascending, |info_set| == K
  std::vector<std::uint8_t> frozen; ///< size N, 1 = frozen
};

/// Mother-code indices sorted by ascending reliability (least reliable
/// first), computed from the beta-expansion polarization weight
/// W(i) = sum_j b_j(i) * 2^(j/4). The ordering is nested across N.
std::vector<int> polar_reliability_order(int N);

/// Output position n of the length-N sub-block interleaver carries mother
/// bit subblock_interleaver_map(N)[n].
std::vector<int> nr_subblock_interleaver_map(int N);

/// Pick N for (K, E) and build the frozen set: the N-K least reliable
/// positions, with shortening-induced pre-frozen indices forced in.
PolarConfig polar_construct(int K, int E, int list_size = 8);

/// x = u * F^(x)n over GF(2) with F = [[1,0],[1,1]]; self-inverse.
BitVec polar_transform(const BitVec& u);

BitVec polar_encode(const BitVec& info, const PolarConfig& cfg);

struct PolarDecodeResult {
  BitVec info_bits;       ///< K bits (payload || CRC when CRC in use)
  bool crc_pass = false;  ///< false when no list path passed the CRC
  double path_metric = 0.0;
};

/// CRC-aided successive-cancellation list decoding. llr has mother length N.
/// Without a CRC config, the lowest-metric path is returned with
/// crc_pass = true.
PolarDecodeResult polar_decode(const LlrVec& llr, const PolarConfig& cfg,
                               const std::optional<CrcConfig>& crc = std::nullopt);

}  // namespace pdcch
