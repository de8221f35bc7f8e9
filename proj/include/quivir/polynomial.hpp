#pragma once

// Sparse commutative polynomials with exact rational coefficients in
// generators g = (slot, level), level >= 1.  The same kernel backs the
// descendent algebra (generators tau_level(slot)) and the Fock space of the
// lattice vertex algebra (generators b_{-level} for basis vector b = slot).
// Each use instantiates its own Tag so the two never mix.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "quivir/rational.hpp"

namespace quivir {

struct Generator {
  std::uint32_t slot = 0;
  std::uint32_t level = 1;

  auto operator<=>(const Generator&) const = default;
};

class Monomial {
 public:
  /// (generator, exponent) with exponent > 0, sorted by generator.
  using Factor = std::pair<Generator, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Generator g, std::uint32_t exponent = 1) {
    if (exponent > 0) {
      factors_.emplace_back(g, exponent);
      degree_ = static_cast<Int>(g.level) * exponent;
    }
  }
  /// Accepts any order and repeated generators.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  /// Grading: sum of level * exponent.
  Int degree() const { return degree_; }
  /// Number of generator occurrences counted with multiplicity.
  std::uint32_t length() const;
  std::uint32_t exponent(Generator g) const;

  Monomial operator*(const Monomial& other) const;
  Monomial times(Generator g, std::uint32_t exponent = 1) const;
  /// Removes one copy of g; g must divide the monomial.
  Monomial divided_by(Generator g) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  /// Graded order: degree first, then lexicographic on factors.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.factors_ < b.factors_;
  }

 private:
  void recompute_degree();

  std::vector<Factor> factors_;
  Int degree_ = 0;
};

template <class Tag>
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant) {  // NOLINT: implicit scalars read naturally
    add_term(Monomial{}, constant);
  }
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(const Monomial& m, const Rational& c = 1) { add_term(m, c); }
  static Polynomial generator(Generator g) { return Polynomial(Monomial(g)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coefficient(Monomial{}); }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(Polynomial a, int s) { return a *= Rational(s); }
  friend Polynomial operator*(int s, Polynomial a) { return a *= Rational(s); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial times(Generator g) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.times(g), c);
    return r;
  }

  /// Partial derivative with respect to one generator.
  Polynomial partial(Generator g) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      std::uint32_t e = m.exponent(g);
      if (e > 0) r.add_term(m.divided_by(g), c * e);
    }
    return r;
  }

  /// Extends a map on generators to the unique derivation (Leibniz rule).
  /// image(g) must return a Polynomial.
  template <class Image>
  Polynomial derivation(Image&& image) const {
    Polynomial r;
    std::map<Generator, Polynomial> cache;
    for (const auto& [m, c] : terms_) {
      for (const auto& [g, e] : m.factors()) {
        auto it = cache.find(g);
        if (it == cache.end()) it = cache.emplace(g, image(g)).first;
        if (it->second.is_zero()) continue;
        Polynomial rest(m.divided_by(g), c * e);
        r += rest * it->second;
      }
    }
    return r;
  }

  /// Homogeneous component of the given degree.
  Polynomial part_of_degree(Int degree) const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
      if (m.degree() == degree) r.terms_.emplace(m, c);
    return r;
  }

  /// Largest monomial degree; -1 for the zero polynomial.
  Int max_degree() const {
    Int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  /// Substitutes a rational value for every generator.
  template <class Value>
  Rational evaluate(Value&& value) const {
    std::map<Generator, Rational> cache;
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (const auto& [g, e] : m.factors()) {
        auto it = cache.find(g);
        if (it == cache.end()) it = cache.emplace(g, value(g)).first;
        t *= pow(it->second, e);
        if (t == 0) break;
      }
      total += t;
    }
    return total;
  }

  /// Applies a monomial-to-polynomial map term by term (linear extension).
  template <class Fn>
  Polynomial transform(Fn&& fn) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      auto image = fn(m);
      image *= c;
      r += image;
    }
    return r;
  }

 private:
  TermMap terms_;
};

/// All monomials of exactly the given degree in generators with slot < slots.
std::vector<Monomial> monomials_of_degree(std::uint32_t slots, Int degree);

/// All monomials of degree 0..max_degree, in graded order.
std::vector<Monomial> monomials_up_to_degree(std::uint32_t slots, Int max_degree);

}  // namespace quivir
