#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace arasent::utf8 {

bool valid(std::string_view s);

// Decoded view of a UTF-8 string: code points plus the byte offset where each
// one starts. offsets has one extra entry holding the total byte length, so
// the bytes of code points [a, b) are s.substr(offsets[a], offsets[b] - offsets[a]).
struct Decoded {
  std::vector<char32_t> cps;
  std::vector<std::size_t> offsets;

  std::size_t size() const { return cps.size(); }
};

// Throws std::invalid_argument on malformed input.
Decoded decode(std::string_view s);

void append(std::string& out, char32_t cp);
std::u32string to_u32(std::string_view s);
std::string from_u32(std::u32string_view cps);

}  // namespace arasent::utf8
