#include "hsw/expr.hpp"

#include <cctype>

namespace hsw {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  HPoly parse_all() {
    HPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  Word parse_word_only() {
    skip_ws();
    Word w = word();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after word");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool peek_word_start() {
    skip_ws();
    return pos_ + 1 < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 's') && text_[pos_ + 1] == '[';
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  HPoly expr() {
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    HPoly acc = term();
    if (negate) acc = -acc;
    while (peek('+') || peek('-')) {
      const bool minus = text_[pos_++] == '-';
      HPoly t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  HPoly term() {
    HPoly acc = factor();
    while (peek('*')) {
      ++pos_;
      acc = harmonic(acc, factor());
    }
    return acc;
  }

  HPoly factor() {
    skip_ws();
    if (peek('(')) {
      ++pos_;
      HPoly inner = expr();
      expect(')');
      return inner;
    }
    if (peek_word_start()) return HPoly(word());
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) return HPoly(rational());
    fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end of input");
  }

  Rational rational() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == from) fail("expected digits");
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      digits();
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  Word word() {
    std::vector<MonoidElement> letters;
    while (peek_word_start()) {
      const bool is_s = text_[pos_] == 's';
      pos_ += 2;
      const MonoidElement a = element(is_s ? ',' : ']');
      std::size_t k = 1;
      if (is_s) {
        expect(',');
        skip_ws();
        const std::size_t from = pos_;
        k = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          k = k * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
        if (pos_ == from || k == 0) {
          pos_ = from;
          fail("expected a positive block length");
        }
      }
      expect(']');
      const Word block = s_word(a, k);
      letters.insert(letters.end(), block.letters().begin(), block.letters().end());
    }
    if (letters.empty()) fail("expected a word");
    return Word(std::move(letters));
  }

  MonoidElement element(char terminator) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != terminator && text_[pos_] != ']' && text_[pos_] != ',' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    try {
      return parse_element(text_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HPoly parse_poly(std::string_view text) { return Parser(text).parse_all(); }

Word parse_word(std::string_view text) {
  if (text == "1") return Word{};
  return Parser(text).parse_word_only();
}

}  // namespace hsw
