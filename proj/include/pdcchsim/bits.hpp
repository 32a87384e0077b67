#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pdcch {

/// Hard bit sequence, one bit per byte (0 or 1), MSB-first ordering in text form.
using BitVec = std::vector<std::uint8_t>;

/// Soft values. Convention: llr = log(P(bit=0)/P(bit=1)), positive favors 0.
using LlrVec = std::vector<double>;

using Cplx = std::complex<double>;
using CplxVec = std::vector<Cplx>;

/// Thrown when an input violates a documented length/shape contract.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a configuration is internally inconsistent or infeasible.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string bits_to_string(const BitVec& bits);
BitVec bits_from_string(std::string_view text);

BitVec xor_bits(const BitVec& a, const BitVec& b);
std::size_t hamming_distance(const BitVec& a, const BitVec& b);

}  // namespace pdcch
