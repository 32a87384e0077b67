#include "pdcchsim/polar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pdcch {
namespace {

constexpr int kMinN = 32;
constexpr int kMaxN = 512;

int ceil_log2(int x) {
  int n = 0;
  while ((1 << n) < x) ++n;
  return n;
}

// Fixed permutation of the 32 sub-blocks.
constexpr int kSubblockPattern[32] = {0, 1, 2, 4, 3, 5, 6,  7,  8,  16, 9,
                                      17, 10, 18, 11, 19, 12, 20, 13, 21, 14, 22,
                                      15, 23, 24, 25, 26, 28, 27, 29, 30, 31};

struct PathState {
  // Layer lambda in [0, n]: P starts at offset (2N - 2^(n-lambda+1)) ... we
  // keep per-layer vectors for clarity; sizes 2^(n-lambda).
  std::vector<std::vector<double>> p;           // [lambda][beta]
  std::vector<std::vector<std::uint8_t>> c;     // [lambda][2*beta + phase]
  std::vector<std::uint8_t> decided;            // u decisions at info positions
  double pm = 0.0;
  bool active = false;
};

inline double f_minsum(double a, double b) {
  const double s = (a < 0) != (b < 0) ? -1.0 : 1.0;
  return s * std::min(std::abs(a), std::abs(b));
}

inline double g_llr(double a, double b, std::uint8_t u) {
  return u ? b - a : b + a;
}

}  // namespace

std::vector<int> polar_reliability_order(int N) {
  if (N < 2 || (N & (N - 1)) != 0) throw ConfigError("polar: N must be a power of two");
  const double beta = std::pow(2.0, 0.25);
  std::vector<double> w(static_cast<std::size_t>(N), 0.0);
  for (int i = 0; i < N; ++i) {
    double acc = 0.0;
    for (int j = 0; (1 << j) <= i || j == 0; ++j) {
      if ((i >> j) & 1) acc += std::pow(beta, j);
    }
    w[static_cast<std::size_t>(i)] = acc;
  }
  std::vector<int> order(static_cast<std::size_t>(N));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double wa = w[static_cast<std::size_t>(a)];
    const double wb = w[static_cast<std::size_t>(b)];
    if (wa != wb) return wa < wb;
    return a < b;
  });
  return order;
}

std::vector<int> nr_subblock_interleaver_map(int N) {
  if (N % 32 != 0) throw ConfigError("sub-block interleaver needs N divisible by 32");
  const int block = N / 32;
  std::vector<int> map(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) {
    map[static_cast<std::size_t>(n)] = kSubblockPattern[n / block] * block + n % block;
  }
  return map;
}

PolarConfig polar_construct(int K, int E, int list_size) {
  if (K <= 0 || E <= 0) throw ConfigError("polar_construct: K and E must be positive");
  if (K >= E) throw ConfigError("polar_construct: need K < E");
  if (list_size < 1) throw ConfigError("polar_construct: list_size must be >= 1");

  int n1 = ceil_log2(E);
  if (E <= (9 * (1 << (n1 - 1))) / 8 && 16 * K < 9 * E) n1 -= 1;
  const int n2 = ceil_log2(8 * K);
  int n = std::min(n1, n2);
  n = std::min(n, ceil_log2(kMaxN));
  n = std::max(n, ceil_log2(kMinN));
  const int N = 1 << n;
  if (K >= N) throw ConfigError("polar_construct: K exceeds mother code capacity");

  PolarConfig cfg;
  cfg.n = n;
  cfg.N = N;
  cfg.K = K;
  cfg.E = E;
  cfg.list_size = list_size;
  if (E >= N) {
    cfg.rm_mode = PolarRmMode::Repetition;
  } else if (16 * K <= 7 * E) {
    cfg.rm_mode = PolarRmMode::Puncturing;
  } else {
    cfg.rm_mode = PolarRmMode::Shortening;
  }

  cfg.frozen.assign(static_cast<std::size_t>(N), 0);
  int frozen_count = 0;
  if (cfg.rm_mode == PolarRmMode::Shortening) {
    // Shortened coded positions must be known zero, which pins the matching
    // input positions to frozen.
    const auto map = nr_subblock_interleaver_map(N);
    for (int pos = E; pos < N; ++pos) {
      auto& f = cfg.frozen[static_cast<std::size_t>(map[static_cast<std::size_t>(pos)])];
      if (!f) {
        f = 1;
        ++frozen_count;
      }
    }
  }
  const auto order = polar_reliability_order(N);
  for (int idx : order) {
    if (frozen_count >= N - K) break;
    auto& f = cfg.frozen[static_cast<std::size_t>(idx)];
    if (!f) {
      f = 1;
      ++frozen_count;
    }
  }
  if (frozen_count != N - K) {
    throw ConfigError("polar_construct: shortening leaves fewer than K usable positions");
  }
  cfg.info_set.reserve(static_cast<std::size_t>(K));
  for (int i = 0; i < N; ++i) {
    if (!cfg.frozen[static_cast<std::size_t>(i)]) cfg.info_set.push_back(i);
  }
  return cfg;
}

BitVec polar_transform(const BitVec& u) {
  const std::size_t N = u.size();
  if (N == 0 || (N & (N - 1)) != 0) throw FormatError("polar_transform: length must be a power of two");
  BitVec x = u;
  for (std::size_t len = 1; len < N; len <<= 1) {
    for (std::size_t i = 0; i < N; i += 2 * len) {
      for (std::size_t j = 0; j < len; ++j) {
        x[i + j] ^= x[i + j + len];
      }
    }
  }
  return x;
}

BitVec polar_encode(const BitVec& info, const PolarConfig& cfg) {
  if (info.size() != static_cast<std::size_t>(cfg.K)) {
    throw FormatError("polar_encode: info length must equal K");
  }
  BitVec u(static_cast<std::size_t>(cfg.N), 0);
  for (int i = 0; i < cfg.K; ++i) {
    u[static_cast<std::size_t>(cfg.info_set[static_cast<std::size_t>(i)])] = info[static_cast<std::size_t>(i)];
  }
  return polar_transform(u);
}

PolarDecodeResult polar_decode(const LlrVec& llr, const PolarConfig& cfg,
                               const std::optional<CrcConfig>& crc) {
  const int N = cfg.N;
  const int n = cfg.n;
  if (llr.size() != static_cast<std::size_t>(N)) {
    throw FormatError("polar_decode: LLR length must equal N");
  }
  const int L = cfg.list_size;

  std::vector<PathState> paths(static_cast<std::size_t>(2 * L));
  for (auto& p : paths) {
    p.p.resize(static_cast<std::size_t>(n + 1));
    p.c.resize(static_cast<std::size_t>(n + 1));
    for (int lambda = 0; lambda <= n; ++lambda) {
      const std::size_t width = static_cast<std::size_t>(1) << (n - lambda);
      p.p[static_cast<std::size_t>(lambda)].resize(width);
      p.c[static_cast<std::size_t>(lambda)].assign(2 * width, 0);
    }
    p.decided.reserve(static_cast<std::size_t>(cfg.K));
  }
  paths[0].active = true;
  paths[0].p[0].assign(llr.begin(), llr.end());

  // Iterative SC schedule applied per active path.
  auto calc_p = [&](PathState& path, int lambda, int phi, auto&& self) -> void {
    if (lambda == 0) return;
    const int psi = phi >> 1;
    if ((phi & 1) == 0) self(path, lambda - 1, psi, self);
    auto& cur = path.p[static_cast<std::size_t>(lambda)];
    auto& prev = path.p[static_cast<std::size_t>(lambda - 1)];
    auto& cbits = path.c[static_cast<std::size_t>(lambda)];
    const std::size_t width = cur.size();
    for (std::size_t beta = 0; beta < width; ++beta) {
      if ((phi & 1) == 0) {
        cur[beta] = f_minsum(prev[2 * beta], prev[2 * beta + 1]);
      } else {
        cur[beta] = g_llr(prev[2 * beta], prev[2 * beta + 1], cbits[2 * beta]);
      }
    }
  };

  auto update_c = [&](PathState& path, int lambda, int phi, auto&& self) -> void {
    const int psi = phi >> 1;
    auto& cur = path.c[static_cast<std::size_t>(lambda)];
    auto& prev = path.c[static_cast<std::size_t>(lambda - 1)];
    const std::size_t width = static_cast<std::size_t>(1) << (n - lambda);
    for (std::size_t beta = 0; beta < width; ++beta) {
      prev[2 * (2 * beta) + (psi & 1)] =
          static_cast<std::uint8_t>(cur[2 * beta] ^ cur[2 * beta + 1]);
      prev[2 * (2 * beta + 1) + (psi & 1)] = cur[2 * beta + 1];
    }
    if (psi & 1) self(path, lambda - 1, psi, self);
  };

  struct Candidate {
    double pm;
    int path;
    std::uint8_t bit;
  };

  for (int phi = 0; phi < N; ++phi) {
    for (auto& path : paths) {
      if (path.active) calc_p(path, n, phi, calc_p);
    }
    const bool frozen = cfg.frozen[static_cast<std::size_t>(phi)] != 0;
    if (frozen) {
      for (auto& path : paths) {
        if (!path.active) continue;
        const double l = path.p[static_cast<std::size_t>(n)][0];
        if (l < 0) path.pm += -l;
        path.c[static_cast<std::size_t>(n)][phi & 1] = 0;
      }
    } else {
      std::vector<Candidate> cands;
      cands.reserve(static_cast<std::size_t>(2 * L));
      for (int i = 0; i < 2 * L; ++i) {
        auto& path = paths[static_cast<std::size_t>(i)];
        if (!path.active) continue;
        const double l = path.p[static_cast<std::size_t>(n)][0];
        cands.push_back({path.pm + (l < 0 ? -l : 0.0), i, 0});
        cands.push_back({path.pm + (l > 0 ? l : 0.0), i, 1});
      }
      const std::size_t keep = std::min<std::size_t>(static_cast<std::size_t>(L), cands.size());
      std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.pm != b.pm) return a.pm < b.pm;
        if (a.path != b.path) return a.path < b.path;
        return a.bit < b.bit;
      });
      cands.resize(keep);

      // Per surviving parent: one child updates in place, a second goes to
      // a clone made before the parent mutates.
      std::vector<int> kept_count(static_cast<std::size_t>(2 * L), 0);
      for (const auto& c : cands) kept_count[static_cast<std::size_t>(c.path)]++;

      std::vector<int> free_slots;
      for (int i = 0; i < 2 * L; ++i) {
        auto& path = paths[static_cast<std::size_t>(i)];
        if (path.active && kept_count[static_cast<std::size_t>(i)] == 0) {
          path.active = false;
        }
        if (!path.active) free_slots.push_back(i);
      }

      std::vector<int> clone_of(static_cast<std::size_t>(2 * L), -1);
      for (int i = 0; i < 2 * L; ++i) {
        if (kept_count[static_cast<std::size_t>(i)] == 2) {
          const int slot = free_slots.back();
          free_slots.pop_back();
          paths[static_cast<std::size_t>(slot)] = paths[static_cast<std::size_t>(i)];
          paths[static_cast<std::size_t>(slot)].active = true;
          clone_of[static_cast<std::size_t>(i)] = slot;
        }
      }

      std::vector<std::uint8_t> first_seen(static_cast<std::size_t>(2 * L), 1);
      for (const auto& c : cands) {
        int slot = c.path;
        if (!first_seen[static_cast<std::size_t>(c.path)]) {
          slot = clone_of[static_cast<std::size_t>(c.path)];
        }
        first_seen[static_cast<std::size_t>(c.path)] = 0;
        auto& target = paths[static_cast<std::size_t>(slot)];
        target.pm = c.pm;
        target.decided.push_back(c.bit);
        target.c[static_cast<std::size_t>(n)][phi & 1] = c.bit;
      }
    }
    for (auto& path : paths) {
      if (path.active && (phi & 1)) update_c(path, n, phi, update_c);
    }
  }

  std::vector<int> ranked;
  for (int i = 0; i < 2 * L; ++i) {
    if (paths[static_cast<std::size_t>(i)].active) ranked.push_back(i);
  }
  std::stable_sort(ranked.begin(), ranked.end(), [&](int a, int b) {
    const double pa = paths[static_cast<std::size_t>(a)].pm;
    const double pb = paths[static_cast<std::size_t>(b)].pm;
    if (pa != pb) return pa < pb;
    return a < b;
  });

  PolarDecodeResult result;
  if (crc) {
    for (int idx : ranked) {
      BitVec word(paths[static_cast<std::size_t>(idx)].decided.begin(),
                  paths[static_cast<std::size_t>(idx)].decided.end());
      if (word.size() > crc_length(crc->polynomial) && crc_check(word, *crc)) {
        result.info_bits = std::move(word);
        result.crc_pass = true;
        result.path_metric = paths[static_cast<std::size_t>(idx)].pm;
        return result;
      }
    }
  }
  const int best = ranked.front();
  result.info_bits.assign(paths[static_cast<std::size_t>(best)].decided.begin(),
                          paths[static_cast<std::size_t>(best)].decided.end());
  result.crc_pass = !crc.has_value();
  result.path_metric = paths[static_cast<std::size_t>(best)].pm;
  return result;
}

}  // namespace pdcch
