#include "quivir/rational.hpp"

#include <cctype>

namespace quivir {

Rational factorial(Int n) {
  if (n < 0) throw Error("factorial of negative number");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(Int m, Int i) {
  if (i < 0) return 0;
  Rational result = 1;
  for (Int j = 0; j < i; ++j) {
    result *= Rational(m - j);
    result /= Rational(j + 1);
  }
  return result;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error("empty number");
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') pos = 1;
  bool slash = false;
  bool digit_seen = false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit_seen = true;
    } else if (c == '/' && !slash && digit_seen && i + 1 < text.size()) {
      slash = true;
      digit_seen = false;
    } else {
      throw Error("malformed number '" + std::string(text) + "'");
    }
  }
  if (!digit_seen) throw Error("malformed number '" + std::string(text) + "'");
  std::string s(text.substr(text[0] == '+' ? 1 : 0));
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error("malformed number '" + s + "'");
  if (r.get_den() == 0) throw Error("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace quivir
