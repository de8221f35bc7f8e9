#include "quivir/polynomial.hpp"

namespace quivir {

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [g, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == g) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(g, e);
    }
  }
  m.recompute_degree();
  return m;
}

void Monomial::recompute_degree() {
  degree_ = 0;
  for (const auto& [g, e] : factors_) degree_ += static_cast<Int>(g.level) * e;
}

std::uint32_t Monomial::length() const {
  std::uint32_t n = 0;
  for (const auto& f : factors_) n += f.second;
  return n;
}

std::uint32_t Monomial::exponent(Generator g) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), g,
                             [](const Factor& f, const Generator& x) { return f.first < x; });
  return (it != factors_.end() && it->first == g) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), ae = factors_.end();
  auto b = other.factors_.begin(), be = other.factors_.end();
  while (a != ae && b != be) {
    if (a->first < b->first) {
      r.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, ae);
  r.factors_.insert(r.factors_.end(), b, be);
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::times(Generator g, std::uint32_t exponent) const {
  return *this * Monomial(g, exponent);
}

Monomial Monomial::divided_by(Generator g) const {
  Monomial r = *this;
  auto it = std::lower_bound(r.factors_.begin(), r.factors_.end(), g,
                             [](const Factor& f, const Generator& x) { return f.first < x; });
  if (it == r.factors_.end() || it->first != g) throw Error("monomial not divisible");
  if (--it->second == 0) r.factors_.erase(it);
  r.degree_ -= g.level;
  return r;
}

namespace {

// Generators are visited in increasing (slot, level) order so every monomial
// is produced exactly once.
void enumerate(std::uint32_t slots, Int remaining, Generator next, std::vector<Monomial::Factor>& acc,
               std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(Monomial::from_factors(acc));
    return;
  }
  for (std::uint32_t slot = next.slot; slot < slots; ++slot) {
    std::uint32_t first_level = (slot == next.slot) ? next.level : 1;
    for (std::uint32_t level = first_level; level <= remaining; ++level) {
      Generator g{slot, level};
      for (std::uint32_t e = 1; static_cast<Int>(e * level) <= remaining; ++e) {
        acc.emplace_back(g, e);
        enumerate(slots, remaining - static_cast<Int>(e * level), Generator{slot, level + 1}, acc, out);
        acc.pop_back();
      }
    }
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::uint32_t slots, Int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<Monomial::Factor> acc;
  enumerate(slots, degree, Generator{0, 1}, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> monomials_up_to_degree(std::uint32_t slots, Int max_degree) {
  std::vector<Monomial> out;
  for (Int d = 0; d <= max_degree; ++d) {
    auto part = monomials_of_degree(slots, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace quivir
