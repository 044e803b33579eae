#include "arasent/utf8.hpp"

#include <stdexcept>

namespace arasent::utf8 {

namespace {

// Decodes one code point starting at s[i]. Returns false on malformed input
// (bad lead byte, truncated sequence, overlong encoding, surrogate, > U+10FFFF).
bool decode_one(std::string_view s, std::size_t i, char32_t& cp, std::size_t& len) {
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    cp = b0;
    len = 1;
    return true;
  }
  int n;
  char32_t v;
  if ((b0 & 0xE0) == 0xC0) {
    n = 2;
    v = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    n = 3;
    v = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    n = 4;
    v = b0 & 0x07;
  } else {
    return false;
  }
  if (i + n > s.size()) return false;
  for (int k = 1; k < n; ++k) {
    unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) return false;
    v = (v << 6) | (b & 0x3F);
  }
  static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (v < kMin[n]) return false;
  if (v > 0x10FFFF || (v >= 0xD800 && v <= 0xDFFF)) return false;
  cp = v;
  len = n;
  return true;
}

}  // namespace

bool valid(std::string_view s) {
  std::size_t i = 0;
  char32_t cp;
  std::size_t len;
  while (i < s.size()) {
    if (!decode_one(s, i, cp, len)) return false;
    i += len;
  }
  return true;
}

Decoded decode(std::string_view s) {
  Decoded d;
  d.cps.reserve(s.size());
  d.offsets.reserve(s.size() + 1);
  std::size_t i = 0;
  while (i < s.size()) {
    char32_t cp;
    std::size_t len;
    if (!decode_one(s, i, cp, len))
      throw std::invalid_argument("malformed UTF-8 at byte " + std::to_string(i));
    d.offsets.push_back(i);
    d.cps.push_back(cp);
    i += len;
  }
  d.offsets.push_back(s.size());
  return d;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::u32string to_u32(std::string_view s) {
  Decoded d = decode(s);
  return std::u32string(d.cps.begin(), d.cps.end());
}

std::string from_u32(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (char32_t cp : cps) append(out, cp);
  return out;
}

}  // namespace arasent::utf8
