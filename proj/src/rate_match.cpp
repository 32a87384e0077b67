#include "pdcchsim/rate_match.hpp"

#include <algorithm>

namespace pdcch {
namespace {

// Inter-column permutation for the convolutional-code sub-block interleaver.
constexpr int kLteColumnPerm[32] = {1,  17, 9,  25, 5,  21, 13, 29, 3,  19, 11,
                                    27, 7,  23, 15, 31, 0,  16, 8,  24, 4,  20,
                                    12, 28, 2,  18, 10, 26, 6,  22, 14, 30};

// Circular-buffer layout for one LTE stream of length K: returns, in read
// order, the stream indices with -1 for dummy (NULL) padding cells.
std::vector<int> lte_stream_read_order(int k) {
  const int cols = 32;
  const int rows = (k + cols - 1) / cols;
  const int pad = rows * cols - k;
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(rows * cols));
  for (int c = 0; c < cols; ++c) {
    const int col = kLteColumnPerm[c];
    for (int r = 0; r < rows; ++r) {
      const int cell = r * cols + col;
      order.push_back(cell < pad ? -1 : cell - pad);
    }
  }
  return order;
}

}  // namespace

std::vector<int> lte_rate_match_map(int mother_len, int E) {
  if (E <= 0) throw ConfigError("lte_rate_match: E must be positive");
  if (mother_len % 3 != 0) throw FormatError("lte_rate_match: mother length must be 3K");
  const int k = mother_len / 3;
  const auto order = lte_stream_read_order(k);
  // Circular buffer: the three interleaved streams back to back, dummies kept
  // in place but skipped during selection. Stream s bit i sits at interleaved
  // position 3*i + s of the mother word.
  std::vector<int> buffer;
  buffer.reserve(order.size() * 3);
  for (int s = 0; s < 3; ++s) {
    for (int idx : order) {
      buffer.push_back(idx < 0 ? -1 : 3 * idx + s);
    }
  }
  std::vector<int> map;
  map.reserve(static_cast<std::size_t>(E));
  std::size_t j = 0;
  while (map.size() < static_cast<std::size_t>(E)) {
    const int src = buffer[j % buffer.size()];
    if (src >= 0) map.push_back(src);
    ++j;
  }
  return map;
}

BitVec lte_rate_match(const BitVec& coded, int E) {
  const auto map = lte_rate_match_map(static_cast<int>(coded.size()), E);
  BitVec out(static_cast<std::size_t>(E));
  for (int i = 0; i < E; ++i) {
    out[static_cast<std::size_t>(i)] = coded[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])];
  }
  return out;
}

std::vector<int> nr_rate_match_map(int E, const PolarConfig& cfg) {
  if (E <= 0) throw ConfigError("nr_rate_match: E must be positive");
  const int N = cfg.N;
  const auto perm = nr_subblock_interleaver_map(N);
  std::vector<int> map;
  map.reserve(static_cast<std::size_t>(E));
  switch (cfg.rm_mode) {
    case PolarRmMode::Repetition:
      for (int i = 0; i < E; ++i) map.push_back(perm[static_cast<std::size_t>(i % N)]);
      break;
    case PolarRmMode::Puncturing:
      // Skip the first N-E interleaved positions.
      for (int i = 0; i < E; ++i) map.push_back(perm[static_cast<std::size_t>(N - E + i)]);
      break;
    case PolarRmMode::Shortening:
      for (int i = 0; i < E; ++i) map.push_back(perm[static_cast<std::size_t>(i)]);
      break;
  }
  return map;
}

BitVec nr_rate_match(const BitVec& coded, int E, const PolarConfig& cfg) {
  if (coded.size() != static_cast<std::size_t>(cfg.N)) {
    throw FormatError("nr_rate_match: coded length must equal N");
  }
  const auto map = nr_rate_match_map(E, cfg);
  BitVec out(static_cast<std::size_t>(E));
  for (int i = 0; i < E; ++i) {
    out[static_cast<std::size_t>(i)] = coded[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])];
  }
  return out;
}

LlrVec rate_recover(const LlrVec& llr, RmScheme scheme, int mother_len,
                    const PolarConfig* cfg) {
  std::vector<int> map;
  if (scheme == RmScheme::Lte) {
    map = lte_rate_match_map(mother_len, static_cast<int>(llr.size()));
  } else {
    if (cfg == nullptr) throw ConfigError("rate_recover: NR recovery needs a PolarConfig");
    if (mother_len != cfg->N) throw FormatError("rate_recover: mother length must equal N");
    map = nr_rate_match_map(static_cast<int>(llr.size()), *cfg);
  }
  LlrVec out(static_cast<std::size_t>(mother_len), 0.0);
  for (std::size_t i = 0; i < llr.size(); ++i) {
    out[static_cast<std::size_t>(map[i])] += llr[i];
  }
  if (scheme == RmScheme::Nr && cfg->rm_mode == PolarRmMode::Shortening) {
    const auto perm = nr_subblock_interleaver_map(cfg->N);
    for (int pos = static_cast<int>(llr.size()); pos < cfg->N; ++pos) {
      out[static_cast<std::size_t>(perm[static_cast<std::size_t>(pos)])] = kShortenedLlr;
    }
  }
  return out;
}

}  // namespace pdcch
