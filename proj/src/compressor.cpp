#include "strrec/compressor.hpp"

#include <bit>

namespace strrec {

namespace {

bool to_bit(Symbol s) {
  if (s != 1 && s != 2) {
    throw Error("binary compressors accept only symbols 1 and 2");
  }
  return s == 2;
}

Symbol from_bit(bool b) { return b ? 2 : 1; }

}  // namespace

void put_gamma(Bits& out, std::size_t x) {
  if (x == 0) throw Error("gamma code needs x >= 1");
  const int width = std::bit_width(x);
  for (int i = 1; i < width; ++i) out.push_back(false);
  for (int i = width - 1; i >= 0; --i) out.push_back(((x >> i) & 1U) != 0);
}

std::size_t get_gamma(const Bits& in, std::size_t& pos) {
  std::size_t zeros = 0;
  while (pos < in.size() && !in[pos]) {
    ++zeros;
    ++pos;
  }
  if (pos + zeros + 1 > in.size() || zeros >= 63) {
    throw Error("truncated gamma code");
  }
  std::size_t x = 0;
  for (std::size_t i = 0; i <= zeros; ++i) x = (x << 1) | (in[pos++] ? 1 : 0);
  return x;
}

Bits IdentityCompressor::compress(TextView s) const {
  Bits out;
  out.reserve(s.size());
  for (Symbol c : s) out.push_back(to_bit(c));
  return out;
}

Text IdentityCompressor::decompress(const Bits& code) const {
  Text out;
  out.reserve(code.size());
  for (bool b : code) out.push_back(from_bit(b));
  return out;
}

Bits RunLengthBitsCompressor::compress(TextView s) const {
  Bits out;
  if (s.empty()) return out;
  out.push_back(to_bit(s[0]));
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    to_bit(s[i]);
    put_gamma(out, j - i);
    i = j;
  }
  return out;
}

Text RunLengthBitsCompressor::decompress(const Bits& code) const {
  Text out;
  if (code.empty()) return out;
  bool bit = code[0];
  std::size_t pos = 1;
  while (pos < code.size()) {
    const std::size_t run = get_gamma(code, pos);
    out.insert(out.end(), run, from_bit(bit));
    bit = !bit;
  }
  return out;
}

std::unique_ptr<Compressor> make_compressor(std::string_view name) {
  if (name == "identity") return std::make_unique<IdentityCompressor>();
  if (name == "rle-bits") return std::make_unique<RunLengthBitsCompressor>();
  throw Error("unknown compressor '" + std::string(name) +
              "' (expected identity or rle-bits)");
}

}  // namespace strrec
