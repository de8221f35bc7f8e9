#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace quivir {

using Int = std::int64_t;
using Rational = mpq_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text that could not be parsed; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// a/b in lowest terms; mpq_class(a, b) alone does not canonicalize.
inline Rational ratio(Int a, Int b) {
  Rational r(static_cast<long>(a), static_cast<long>(b));
  r.canonicalize();
  return r;
}

Rational factorial(Int n);

/// Generalized binomial coefficient m(m-1)...(m-i+1)/i!, valid for negative m.
Rational binomial(Int m, Int i);

/// Canonical text: "p/q" in lowest terms, "p" if integral.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q"; throws Error on malformed input.
Rational parse_rational(std::string_view text);

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return result;
}

inline int sign_power(Int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace quivir
