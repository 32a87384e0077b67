#include "pdcchsim/bits.hpp"

namespace pdcch {

std::string bits_to_string(const BitVec& bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

BitVec bits_from_string(std::string_view text) {
  BitVec out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '0') {
      out.push_back(0);
    } else if (c == '1') {
      out.push_back(1);
    } else {
      throw FormatError("bit string may only contain '0' and '1'");
    }
  }
  return out;
}

BitVec xor_bits(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size()) throw FormatError("xor_bits: length mismatch");
  BitVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

std::size_t hamming_distance(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size()) throw FormatError("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

}  // namespace pdcch
