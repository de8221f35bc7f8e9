#include <cctype>
#include <sstream>

#include "quivir/descendent.hpp"

namespace quivir {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Quiver& q) : text_(text), q_(q) {}

  DescPoly parse() {
    DescPoly result;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result += sign * term();
      skip_space();
    }
    return result;
  }

 private:
  DescPoly term() {
    DescPoly t = factor();
    skip_space();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_space();
      t *= factor();
      skip_space();
    }
    return t;
  }

  DescPoly factor() {
    if (at_end()) fail("unexpected end of input");
    if (peek() == 't') return generator_power();
    if (std::isdigit(static_cast<unsigned char>(peek()))) return DescPoly(number());
    fail(std::string("unexpected character '") + peek() + "'");
  }

  DescPoly generator_power() {
    ++pos_;
    expect('[');
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected descendent index");
    Int index = std::stoll(std::string(text_.substr(start, pos_ - start)));
    if (index < 1) fail("descendent index must be positive");
    skip_space();
    expect(',');
    skip_space();
    start = pos_;
    while (!at_end() && peek() != ']') ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    expect(']');
    auto v = q_.index_of(name);
    if (!v) fail("unknown vertex '" + name + "'");
    Int exponent = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected exponent");
      exponent = std::stoll(std::string(text_.substr(start, pos_ - start)));
    }
    Generator g{static_cast<std::uint32_t>(*v), static_cast<std::uint32_t>(index)};
    return DescPoly(Monomial(g, static_cast<std::uint32_t>(exponent)));
  }

  Rational number() {
    std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  const Quiver& q_;
  std::size_t pos_ = 0;
};

}  // namespace

DescPoly parse_desc_poly(std::string_view text, const Quiver& q) { return PolyParser(text, q).parse(); }

std::string format_desc_poly(const DescPoly& p, const Quiver& q) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || m.is_one()) {
      out << to_string(mag);
      need_star = true;
    }
    for (const auto& [g, e] : m.factors()) {
      if (g.slot >= q.vertex_count()) throw Error("generator slot outside the quiver");
      if (need_star) out << '*';
      out << "t[" << g.level << ',' << q.name(g.slot) << ']';
      if (e > 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace quivir
