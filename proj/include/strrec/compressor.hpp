#ifndef STRREC_COMPRESSOR_HPP_
#define STRREC_COMPRESSOR_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "strrec/text.hpp"

namespace strrec {

using Bits = std::vector<bool>;

// An injective encoding with its inverse. Binary texts use symbol 1 for bit
// 0 and symbol 2 for bit 1.
class Compressor {
 public:
  virtual ~Compressor() = default;
  virtual std::string name() const = 0;
  virtual Bits compress(TextView s) const = 0;
  virtual Text decompress(const Bits& code) const = 0;
};

// One bit per symbol. The incompressible baseline.
class IdentityCompressor : public Compressor {
 public:
  std::string name() const override { return "identity"; }
  Bits compress(TextView s) const override;
  Text decompress(const Bits& code) const override;
};

// Leading bit for the first symbol, then every run length in Elias gamma.
// Runs alternate, so the symbols after the first are implied.
class RunLengthBitsCompressor : public Compressor {
 public:
  std::string name() const override { return "rle-bits"; }
  Bits compress(TextView s) const override;
  Text decompress(const Bits& code) const override;
};

// Elias gamma: floor(log2 x) zeros, then x in binary. x >= 1.
void put_gamma(Bits& out, std::size_t x);
// Reads one gamma code at `pos`, advancing it. Throws on truncated input.
std::size_t get_gamma(const Bits& in, std::size_t& pos);

// "identity" or "rle-bits".
std::unique_ptr<Compressor> make_compressor(std::string_view name);

}  // namespace strrec

#endif  // STRREC_COMPRESSOR_HPP_
