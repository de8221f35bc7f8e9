#include "quivir/coset.hpp"

namespace quivir {

const CosetReducer::Block& CosetReducer::block(const DimVector& alpha, Int degree) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto key = std::make_pair(alpha, degree);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  Block b;
  b.columns = monomials_of_degree(static_cast<std::uint32_t>(L_.rank()), degree);
  for (std::size_t i = 0; i < b.columns.size(); ++i) b.column_of.emplace(b.columns[i], i);
  if (degree >= 1) {
    auto sources = monomials_of_degree(static_cast<std::uint32_t>(L_.rank()), degree - 1);
    RationalMatrix m(sources.size(), b.columns.size());
    for (std::size_t r = 0; r < sources.size(); ++r) {
      const FockPoly img = translate(VAState::exp(alpha, FockPoly(sources[r]))).component(alpha);
      for (const auto& [mono, c] : img.terms()) m(r, b.column_of.at(mono)) = c;
    }
    RationalMatrix red = row_reduce(m, b.pivots);
    for (std::size_t r = 0; r < b.pivots.size(); ++r) {
      std::vector<Rational> row(b.columns.size());
      for (std::size_t c = 0; c < b.columns.size(); ++c) row[c] = red(r, c);
      b.rows.push_back(std::move(row));
    }
  }
  return cache_.emplace(key, std::move(b)).first->second;
}

VAState CosetReducer::normal_form(const VAState& s) const {
  VAState out;
  for (const auto& [alpha, p] : s.sectors()) {
    std::map<Int, FockPoly> by_degree;
    for (const auto& [m, c] : p.terms()) by_degree[m.degree()].add_term(m, c);
    for (const auto& [degree, part] : by_degree) {
      const Block& b = block(alpha, degree);
      std::vector<Rational> v(b.columns.size());
      for (const auto& [m, c] : part.terms()) v[b.column_of.at(m)] = c;
      for (std::size_t r = 0; r < b.pivots.size(); ++r) {
        const Rational f = v[b.pivots[r]];
        if (f == 0) continue;
        for (std::size_t c = 0; c < v.size(); ++c)
          if (b.rows[r][c] != 0) v[c] -= f * b.rows[r][c];
      }
      FockPoly reduced;
      for (std::size_t c = 0; c < v.size(); ++c) reduced.add_term(b.columns[c], v[c]);
      out.add(alpha, reduced);
    }
  }
  return out;
}

VAState lie_bracket(const VAState& a, const VAState& b, const CosetReducer& reducer, const Lattice& L) {
  return reducer.normal_form(vertex_mode(a, 0, b, L));
}

VAState k0_residual(const VAState& a, const Lattice& L) {
  VAState out;
  const Int depth = a.depth();
  for (Int j = -1; j <= depth; ++j) {
    VAState t = virasoro_mode(j, a, L);
    for (Int i = 0; i <= j; ++i) t = translate(t);
    t *= Rational(sign_power(j)) / factorial(j + 1);
    out += t;
  }
  return out;
}

bool is_physical(const VAState& s, const Rational& weight, const Lattice& L) {
  VAState scaled = s;
  scaled *= weight;
  if (!(virasoro_mode(0, s, L) == scaled)) return false;
  for (Int k = 1; k <= s.depth(); ++k)
    if (!virasoro_mode(k, s, L).is_zero()) return false;
  return true;
}

std::vector<VAState> residual_kernel(const DimVector& alpha, Int degree, const Lattice& L) {
  auto sources = monomials_of_degree(static_cast<std::uint32_t>(L.rank()), degree);
  std::vector<VAState> images;
  std::map<std::pair<DimVector, Monomial>, std::size_t> column_of;
  for (const auto& m : sources) {
    images.push_back(k0_residual(VAState::exp(alpha, FockPoly(m)), L));
    for (const auto& [beta, p] : images.back().sectors())
      for (const auto& [mono, c] : p.terms()) column_of.try_emplace({beta, mono}, column_of.size());
  }
  RationalMatrix mat(column_of.size(), sources.size());
  for (std::size_t j = 0; j < sources.size(); ++j)
    for (const auto& [beta, p] : images[j].sectors())
      for (const auto& [mono, c] : p.terms()) mat(column_of.at({beta, mono}), j) = c;
  std::vector<VAState> basis;
  for (const auto& v : kernel(mat)) {
    FockPoly p;
    for (std::size_t j = 0; j < sources.size(); ++j) p.add_term(sources[j], v[j]);
    basis.push_back(VAState::exp(alpha, p));
  }
  return basis;
}

}  // namespace quivir
