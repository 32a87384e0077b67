#include "pdcchsim/tbcc.hpp"

#include <algorithm>
#include <limits>

namespace pdcch {
namespace {

constexpr int kMemory = 6;
constexpr int kNumStates = 1 << kMemory;

inline int parity7(unsigned x) {
  x ^= x >> 4;
  x ^= x >> 2;
  x ^= x >> 1;
  return static_cast<int>(x & 1u);
}

struct Trellis {
  // next[state][bit], out[state][bit] packs the three coded bits (d0 as MSB).
  std::array<std::array<std::uint8_t, 2>, kNumStates> next{};
  std::array<std::array<std::uint8_t, 2>, kNumStates> out{};

  explicit Trellis(const TbccConfig& cfg) {
    for (int s = 0; s < kNumStates; ++s) {
      for (int b = 0; b < 2; ++b) {
        const unsigned window = (static_cast<unsigned>(b) << kMemory) | static_cast<unsigned>(s);
        std::uint8_t o = 0;
        for (int g = 0; g < 3; ++g) {
          o = static_cast<std::uint8_t>((o << 1) | parity7(window & cfg.generators_octal[g]));
        }
        next[s][b] = static_cast<std::uint8_t>(window >> 1);
        out[s][b] = o;
      }
    }
  }
};

// State layout: bit (kMemory-1) holds the most recent input bit. Tail-biting
// start state therefore packs info[K-1] in the MSB down to info[K-6] in the LSB.
int tail_biting_state(const BitVec& info) {
  int s = 0;
  const std::size_t k = info.size();
  for (int j = 1; j <= kMemory; ++j) {
    s |= info[k - static_cast<std::size_t>(j)] << (kMemory - j);
  }
  return s;
}

}  // namespace

BitVec tbcc_encode(const BitVec& info, const TbccConfig& cfg) {
  if (info.size() < static_cast<std::size_t>(kMemory)) {
    throw FormatError("tbcc_encode: need at least 6 info bits");
  }
  const Trellis trellis(cfg);
  int state = tail_biting_state(info);
  BitVec out;
  out.reserve(info.size() * 3);
  for (auto bit : info) {
    const std::uint8_t o = trellis.out[state][bit];
    out.push_back((o >> 2) & 1);
    out.push_back((o >> 1) & 1);
    out.push_back(o & 1);
    state = trellis.next[state][bit];
  }
  return out;
}

TbccDecodeResult tbcc_decode(const LlrVec& llr, const TbccConfig& cfg) {
  if (llr.size() % 3 != 0 || llr.size() < 3 * static_cast<std::size_t>(kMemory)) {
    throw FormatError("tbcc_decode: LLR length must be 3*K with K >= 6");
  }
  const std::size_t steps = llr.size() / 3;
  const Trellis trellis(cfg);

  // Correlation metric per step for each of the 8 coded-bit patterns.
  // metric(c) = sum_i (1-2*c_i) * llr_i / 2; larger is better.
  std::vector<std::array<double, 8>> branch(steps);
  for (std::size_t t = 0; t < steps; ++t) {
    for (int pat = 0; pat < 8; ++pat) {
      double m = 0.0;
      for (int j = 0; j < 3; ++j) {
        const double l = llr[3 * t + static_cast<std::size_t>(j)];
        m += ((pat >> (2 - j)) & 1) ? -l : l;
      }
      branch[t][pat] = 0.5 * m;
    }
  }

  std::vector<double> metric(kNumStates, 0.0);
  std::vector<double> next_metric(kNumStates);
  // decisions[pass][t*kNumStates + s] = (predecessor << 1) | input bit
  const int iterations = std::max(1, cfg.wava_iterations);
  std::vector<std::vector<std::uint16_t>> decisions(
      static_cast<std::size_t>(iterations),
      std::vector<std::uint16_t>(steps * kNumStates));

  TbccDecodeResult best;
  bool have_best = false;

  for (int pass = 0; pass < iterations; ++pass) {
    auto& dec = decisions[static_cast<std::size_t>(pass)];
    for (std::size_t t = 0; t < steps; ++t) {
      std::fill(next_metric.begin(), next_metric.end(),
                -std::numeric_limits<double>::infinity());
      for (int s = 0; s < kNumStates; ++s) {
        const double base = metric[s];
        for (int b = 0; b < 2; ++b) {
          const int ns = trellis.next[s][b];
          const double m = base + branch[t][trellis.out[s][b]];
          if (m > next_metric[ns]) {
            next_metric[ns] = m;
            dec[t * kNumStates + static_cast<std::size_t>(ns)] =
                static_cast<std::uint16_t>((s << 1) | b);
          }
        }
      }
      metric.swap(next_metric);
    }

    // Scan all end states for tail-biting closure within this pass.
    int best_closed = -1;
    for (int s = 0; s < kNumStates; ++s) {
      int cur = s;
      for (std::size_t t = steps; t-- > 0;) {
        cur = dec[t * kNumStates + static_cast<std::size_t>(cur)] >> 1;
      }
      if (cur == s &&
          (best_closed < 0 || metric[s] > metric[best_closed])) {
        best_closed = s;
      }
    }
    if (best_closed >= 0) {
      BitVec bits(steps);
      int cur = best_closed;
      for (std::size_t t = steps; t-- > 0;) {
        const std::uint16_t d = dec[t * kNumStates + static_cast<std::size_t>(cur)];
        bits[t] = static_cast<std::uint8_t>(d & 1u);
        cur = d >> 1;
      }
      best.bits = std::move(bits);
      best.tail_biting_closed = true;
      best.metric = metric[best_closed];
      have_best = true;
    }
  }

  if (!have_best) {
    // No pass closed; emit the best survivor of the final pass.
    int end = 0;
    for (int s = 1; s < kNumStates; ++s) {
      if (metric[s] > metric[end]) end = s;
    }
    const auto& dec = decisions.back();
    BitVec bits(steps);
    int cur = end;
    for (std::size_t t = steps; t-- > 0;) {
      const std::uint16_t d = dec[t * kNumStates + static_cast<std::size_t>(cur)];
      bits[t] = static_cast<std::uint8_t>(d & 1u);
      cur = d >> 1;
    }
    best.bits = std::move(bits);
    best.tail_biting_closed = false;
    best.metric = metric[end];
  }
  return best;
}

}  // namespace pdcch
