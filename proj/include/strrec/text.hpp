#ifndef STRREC_TEXT_HPP_
#define STRREC_TEXT_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strrec {

// Symbols live in [1..sigma]. 0 is reserved for the sentinel.
using Symbol = std::uint32_t;
using Text = std::vector<Symbol>;
using TextView = std::span<const Symbol>;

inline constexpr Symbol kSentinel = 0;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 'a'/'A' -> 1, 'b'/'B' -> 2, ... Anything else is rejected.
Text from_letters(std::string_view letters);
std::string to_letters(TextView text);

// Dense remapping by first occurrence: the first distinct byte becomes 1,
// the second 2, and so on.
Text from_bytes_dense(std::string_view bytes);

Symbol max_symbol(TextView text);

// Throws unless every symbol is within [1..sigma].
void check_alphabet(TextView text, Symbol sigma);

Text reversed(TextView text);

}  // namespace strrec

#endif  // STRREC_TEXT_HPP_
