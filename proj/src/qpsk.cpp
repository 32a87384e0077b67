#include "pdcchsim/qpsk.hpp"

#include <cmath>

namespace pdcch {

CplxVec qpsk_map(const BitVec& bits) {
  if (bits.size() % 2 != 0) throw FormatError("qpsk_map: bit count must be even");
  CplxVec out(bits.size() / 2);
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = {s * (1.0 - 2.0 * bits[2 * i]), s * (1.0 - 2.0 * bits[2 * i + 1])};
  }
  return out;
}

LlrVec qpsk_demap(const CplxVec& symbols, const std::vector<double>& noise_var) {
  if (symbols.size() != noise_var.size()) {
    throw FormatError("qpsk_demap: per-symbol noise variance length mismatch");
  }
  LlrVec out(2 * symbols.size());
  const double c = 2.0 * std::sqrt(2.0);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (!(noise_var[i] > 0.0)) throw ConfigError("qpsk_demap: noise variance must be positive");
    out[2 * i] = c * symbols[i].real() / noise_var[i];
    out[2 * i + 1] = c * symbols[i].imag() / noise_var[i];
  }
  return out;
}

LlrVec qpsk_demap(const CplxVec& symbols, double noise_var) {
  return qpsk_demap(symbols, std::vector<double>(symbols.size(), noise_var));
}

}  // namespace pdcch
