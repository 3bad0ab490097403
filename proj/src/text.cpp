#include "strrec/text.hpp"

#include <algorithm>
#include <array>

namespace strrec {

Text from_letters(std::string_view letters) {
  Text out;
  out.reserve(letters.size());
  for (char ch : letters) {
    if (ch >= 'a' && ch <= 'z') {
      out.push_back(static_cast<Symbol>(ch - 'a' + 1));
    } else if (ch >= 'A' && ch <= 'Z') {
      out.push_back(static_cast<Symbol>(ch - 'A' + 1));
    } else {
      throw Error(std::string("not a letter: '") + ch + "'");
    }
  }
  return out;
}

std::string to_letters(TextView text) {
  std::string out;
  out.reserve(text.size());
  for (Symbol s : text) {
    if (s == kSentinel) {
      out.push_back('$');
    } else if (s <= 26) {
      out.push_back(static_cast<char>('a' + s - 1));
    } else {
      out += "<" + std::to_string(s) + ">";
    }
  }
  return out;
}

Text from_bytes_dense(std::string_view bytes) {
  std::array<Symbol, 256> code{};
  Symbol next = 1;
  Text out;
  out.reserve(bytes.size());
  for (char ch : bytes) {
    auto& slot = code[static_cast<unsigned char>(ch)];
    if (slot == 0) slot = next++;
    out.push_back(slot);
  }
  return out;
}

Symbol max_symbol(TextView text) {
  return text.empty() ? 0 : *std::max_element(text.begin(), text.end());
}

void check_alphabet(TextView text, Symbol sigma) {
  for (Symbol s : text) {
    if (s < 1 || s > sigma) {
      throw Error("symbol " + std::to_string(s) + " outside [1.." +
                  std::to_string(sigma) + "]");
    }
  }
}

Text reversed(TextView text) { return Text(text.rbegin(), text.rend()); }

}  // namespace strrec
