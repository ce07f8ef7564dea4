#include "wgc/words.hpp"

#include <stdexcept>

namespace wgc {

ColoredWord ColoredWord::alternating(std::size_t n) {
  std::vector<Color> cs(n);
  for (std::size_t i = 0; i < n; ++i) cs[i] = (i % 2 == 0) ? Color::White : Color::Black;
  return ColoredWord(std::move(cs));
}

ColoredWord ColoredWord::parse(std::string_view s) {
  std::vector<Color> cs;
  cs.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case 'o': case 'O': cs.push_back(Color::White); break;
      case 'w': case 'W': case 'b': case 'B': case '*': cs.push_back(Color::Black); break;
      default:
        throw std::invalid_argument(std::string("ColoredWord::parse: bad color char '") + c + "'");
    }
  }
  return ColoredWord(std::move(cs));
}

ColoredWord ColoredWord::reversed() const {
  std::vector<Color> cs(s_.rbegin(), s_.rend());
  return ColoredWord(std::move(cs));
}

ColoredWord ColoredWord::flipped() const {
  std::vector<Color> cs(s_);
  for (auto& c : cs) c = flip(c);
  return ColoredWord(std::move(cs));
}

ColoredWord ColoredWord::concat(const ColoredWord& o) const {
  std::vector<Color> cs(s_);
  cs.insert(cs.end(), o.s_.begin(), o.s_.end());
  return ColoredWord(std::move(cs));
}

std::string ColoredWord::str() const {
  std::string out;
  out.reserve(s_.size());
  for (Color c : s_) out.push_back(c == Color::White ? 'o' : 'w');
  return out;
}

}  // namespace wgc
