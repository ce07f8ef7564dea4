#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wgc {

// A leg color. White is the plain symbol (exponent 1), black the starred one
// (exponent *). Text form: 'o' = white, 'w' = black ('b' and '*' accepted on
// input).
enum class Color : std::uint8_t { White = 0, Black = 1 };

inline Color flip(Color c) { return c == Color::White ? Color::Black : Color::White; }

class ColoredWord {
 public:
  ColoredWord() = default;
  ColoredWord(std::initializer_list<Color> cs) : s_(cs) {}
  explicit ColoredWord(std::vector<Color> cs) : s_(std::move(cs)) {}

  static ColoredWord plain(std::size_t n) { return ColoredWord(std::vector<Color>(n, Color::White)); }
  // The clockwise relabeling word of the half-liberation tests: o,w,o,w,...
  static ColoredWord alternating(std::size_t n);
  static ColoredWord parse(std::string_view s);

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  Color operator[](std::size_t i) const { return s_[i]; }
  void push_back(Color c) { s_.push_back(c); }

  ColoredWord reversed() const;
  ColoredWord flipped() const;
  ColoredWord concat(const ColoredWord& o) const;

  std::string str() const;

  friend bool operator==(const ColoredWord&, const ColoredWord&) = default;
  friend auto operator<=>(const ColoredWord&, const ColoredWord&) = default;

 private:
  std::vector<Color> s_;
};

}  // namespace wgc
