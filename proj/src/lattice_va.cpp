#include "quivir/lattice_va.hpp"

#include <sstream>

namespace quivir {

Lattice::Lattice(std::vector<std::string> basis, IntMatrix q)
    : basis_(std::move(basis)), q_(std::move(q)) {
  if (q_.size() != basis_.size()) throw Error("lattice form does not match the basis");
  Q_ = q_ + q_.transpose();
  RationalMatrix m(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) m(i, j) = Rational(Q_(i, j));
  Q_inverse_ = inverse(m);
}

Lattice Lattice::from_quiver(const Quiver& quiver) { return Lattice(quiver.names(), todd_matrix(quiver)); }

Int Lattice::q_form(const DimVector& a, const DimVector& b) const {
  Int s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) s += a[i] * q_(i, j) * b[j];
  }
  return s;
}

Int Lattice::Q_form(const DimVector& a, const DimVector& b) const { return q_form(a, b) + q_form(b, a); }

LatticeVector Lattice::Q_row(const LatticeVector& x) const {
  LatticeVector r(rank());
  for (std::size_t a = 0; a < rank(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t c = 0; c < rank(); ++c) r[c] += x[a] * Q_(a, c);
  }
  return r;
}

LatticeVector Lattice::Q_row(const DimVector& x) const {
  LatticeVector v(rank());
  for (std::size_t i = 0; i < rank(); ++i) v[i] = x[i];
  return Q_row(v);
}

const RationalMatrix& Lattice::Q_inverse() const {
  if (!Q_inverse_) throw Error("the symmetrized form is degenerate");
  return *Q_inverse_;
}

LatticeVector Lattice::basis_vector(std::size_t c) const {
  LatticeVector v(rank());
  v[c] = 1;
  return v;
}

// ---------------------------------------------------------------------------

VAState VAState::vacuum(std::size_t rank) { return exp(DimVector::zeros(rank)); }

VAState VAState::exp(const DimVector& alpha, const FockPoly& p) {
  VAState s;
  s.add(alpha, p);
  return s;
}

FockPoly VAState::component(const DimVector& alpha) const {
  auto it = sectors_.find(alpha);
  return it == sectors_.end() ? FockPoly() : it->second;
}

void VAState::add(const DimVector& alpha, const FockPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = sectors_.try_emplace(alpha, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) sectors_.erase(it);
  }
}

VAState& VAState::operator+=(const VAState& o) {
  for (const auto& [a, p] : o.sectors_) add(a, p);
  return *this;
}

VAState& VAState::operator-=(const VAState& o) {
  for (const auto& [a, p] : o.sectors_) add(a, -p);
  return *this;
}

VAState& VAState::operator*=(const Rational& s) {
  if (s == 0) {
    sectors_.clear();
  } else {
    for (auto& [a, p] : sectors_) p *= s;
  }
  return *this;
}

Int VAState::depth() const {
  Int d = -1;
  for (const auto& [a, p] : sectors_) d = std::max(d, p.max_degree());
  return d;
}

// ---------------------------------------------------------------------------

FockPoly oscillator(const LatticeVector& x, std::uint32_t k) {
  FockPoly r;
  for (std::size_t c = 0; c < x.size(); ++c)
    if (x[c] != 0) r.add_term(Monomial(Generator{static_cast<std::uint32_t>(c), k}), x[c]);
  return r;
}

namespace {

LatticeVector to_vector(const DimVector& a) {
  LatticeVector v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i];
  return v;
}

Rational dot(const LatticeVector& x, const DimVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (b[i] != 0) s += x[i] * b[i];
  return s;
}

// x_(r) for r >= 0 on a polynomial in sector beta, with Qx = Q(x, -).
FockPoly annihilate(const LatticeVector& Qx, Int r, const FockPoly& p, const DimVector& beta) {
  if (r == 0) return dot(Qx, beta) * p;
  FockPoly out;
  for (std::size_t c = 0; c < Qx.size(); ++c) {
    if (Qx[c] == 0) continue;
    out += (Qx[c] * r) * p.partial(Generator{static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(r)});
  }
  return out;
}

FockPoly translate_poly(const FockPoly& p) {
  return p.derivation([](Generator g) {
    return FockPoly(Monomial(Generator{g.slot, g.level + 1}), Rational(g.level));
  });
}

}  // namespace

VAState translate(const VAState& s) {
  VAState out;
  for (const auto& [alpha, p] : s.sectors()) {
    FockPoly t = translate_poly(p);
    t += p * oscillator(to_vector(alpha), 1);
    out.add(alpha, t);
  }
  return out;
}

VAState heisenberg_mode(const LatticeVector& x, Int n, const VAState& s, const Lattice& L) {
  VAState out;
  if (n < 0) {
    FockPoly m = oscillator(x, static_cast<std::uint32_t>(-n));
    for (const auto& [beta, p] : s.sectors()) out.add(beta, p * m);
    return out;
  }
  LatticeVector Qx = L.Q_row(x);
  for (const auto& [beta, p] : s.sectors()) out.add(beta, annihilate(Qx, n, p, beta));
  return out;
}

namespace {

using Series = std::map<Int, FockPoly>;  // z-power -> coefficient

void add_to(Series& s, Int power, const FockPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = s.try_emplace(power, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) s.erase(it);
  }
}

struct Occurrence {
  std::size_t slot;
  Int k;  // oscillator level; the field is the (k-1)-th divided derivative
};

std::vector<Occurrence> occurrences(const Monomial& m) {
  std::vector<Occurrence> out;
  for (const auto& [g, e] : m.factors())
    for (std::uint32_t i = 0; i < e; ++i) out.push_back({g.slot, static_cast<Int>(g.level)});
  return out;
}

// Coefficients 0..J of [prod over `creation` of the creation part of
// d^{(k-1)} c(z)] * exp(Sum_m alpha_m z^m / m).
std::vector<FockPoly> creation_series(const DimVector& alpha, const std::vector<Occurrence>& creation, Int J) {
  std::vector<FockPoly> series(J + 1);
  series[0] = FockPoly(1);
  const LatticeVector av = to_vector(alpha);
  if (std::any_of(av.begin(), av.end(), [](const Rational& x) { return x != 0; })) {
    std::vector<FockPoly> osc(J + 1);
    for (Int m = 1; m <= J; ++m) osc[m] = oscillator(av, static_cast<std::uint32_t>(m));
    for (Int j = 1; j <= J; ++j) {
      FockPoly e;
      for (Int m = 1; m <= j; ++m) e += osc[m] * series[j - m];
      series[j] = e * (Rational(1) / j);
    }
  }
  for (const auto& occ : creation) {
    const Int m = occ.k - 1;
    std::vector<FockPoly> next(J + 1);
    for (Int j = 0; j <= J; ++j) {
      FockPoly h(Monomial(Generator{static_cast<std::uint32_t>(occ.slot), static_cast<std::uint32_t>(j + m + 1)}),
                 binomial(j + m, m));
      for (Int i = 0; i + j <= J; ++i)
        if (!series[i].is_zero()) next[i + j] += h * series[i];
    }
    series = std::move(next);
  }
  return series;
}

// Coefficient of z^{-n-1} in Y(e^alpha (x) prod occ, z) applied to e^beta (x) p,
// landing in sector alpha + beta.
FockPoly mode_term(const DimVector& alpha, const std::vector<Occurrence>& occ, Int n, const DimVector& beta,
                   const FockPoly& p, const Lattice& L) {
  const Int shift = L.Q_form(alpha, beta);
  const Rational sign = sign_power(L.q_form(alpha, beta));
  const LatticeVector Qalpha = L.Q_row(alpha);
  const bool alpha_zero = alpha.is_zero();
  std::vector<LatticeVector> Qocc;
  for (const auto& o : occ) Qocc.push_back(L.Q_row(L.basis_vector(o.slot)));

  FockPoly result;
  const std::size_t subsets = std::size_t{1} << occ.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    Series s{{0, p}};
    std::vector<Occurrence> creation;
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (!(mask & (std::size_t{1} << i))) {
        creation.push_back(occ[i]);
        continue;
      }
      const Int m = occ[i].k - 1;
      Series next;
      for (const auto& [power, poly] : s) {
        const Int depth = poly.max_degree();
        for (Int r = 0; r <= depth; ++r) {
          FockPoly img = annihilate(Qocc[i], r, poly, beta);
          if (img.is_zero()) continue;
          img *= Rational(sign_power(m)) * binomial(r + m, m);
          add_to(next, power - r - 1 - m, img);
        }
      }
      s = std::move(next);
      if (s.empty()) break;
    }
    if (s.empty()) continue;

    if (!alpha_zero) {
      // exp(-Sum_{k>0} alpha_(k) z^{-k} / k)
      Series next;
      for (const auto& [power, poly] : s) {
        const Int depth = poly.max_degree();
        std::vector<FockPoly> E{poly};
        add_to(next, power, poly);
        for (Int N = 1; N <= depth; ++N) {
          FockPoly e;
          for (Int k = 1; k <= N; ++k) {
            if (E[N - k].is_zero()) continue;
            e -= annihilate(Qalpha, k, E[N - k], beta);
          }
          e *= Rational(1) / N;
          add_to(next, power - N, e);
          E.push_back(std::move(e));
        }
      }
      s = std::move(next);
    }

    Int J = -1;
    for (const auto& [power, poly] : s) J = std::max(J, -n - 1 - shift - power);
    if (J < 0) continue;
    std::vector<FockPoly> creation_coefs = creation_series(alpha, creation, J);
    for (const auto& [power, poly] : s) {
      const Int j = -n - 1 - shift - power;
      if (j < 0 || creation_coefs[j].is_zero()) continue;
      result += creation_coefs[j] * poly;
    }
  }
  result *= sign;
  return result;
}

}  // namespace

VAState vertex_mode(const VAState& a, Int n, const VAState& b, const Lattice& L) {
  VAState out;
  for (const auto& [alpha, pa] : a.sectors()) {
    for (const auto& [mono, ca] : pa.terms()) {
      const auto occ = occurrences(mono);
      for (const auto& [beta, pb] : b.sectors()) {
        FockPoly r = mode_term(alpha, occ, n, beta, pb, L);
        if (r.is_zero()) continue;
        r *= ca;
        out.add(alpha + beta, r);
      }
    }
  }
  return out;
}

VAState exp_field_mode(const DimVector& alpha, Int n, const VAState& s, const Lattice& L) {
  return vertex_mode(VAState::exp(alpha), n, s, L);
}

std::optional<Int> max_nonzero_mode(const VAState& a, const VAState& b, const Lattice& L) {
  std::optional<Int> best;
  for (const auto& [alpha, pa] : a.sectors()) {
    const Int levels = pa.max_degree();
    for (const auto& [beta, pb] : b.sectors()) {
      const Int bound = pb.max_degree() + levels - L.Q_form(alpha, beta) - 1;
      if (!best || bound > *best) best = bound;
    }
  }
  return best;
}

VAState conformal_element(const Lattice& L) {
  const RationalMatrix& inv = L.Q_inverse();
  FockPoly w;
  for (std::size_t a = 0; a < L.rank(); ++a)
    for (std::size_t b = 0; b < L.rank(); ++b) {
      if (inv(a, b) == 0) continue;
      Monomial m = Monomial(Generator{static_cast<std::uint32_t>(a), 1}).times(Generator{static_cast<std::uint32_t>(b), 1});
      w.add_term(m, inv(a, b) / 2);
    }
  return VAState::exp(DimVector::zeros(L.rank()), w);
}

VAState conformal_element_dual_form(const Lattice& L) {
  const RationalMatrix& inv = L.Q_inverse();
  const std::size_t r = L.rank();
  VAState w;
  const VAState vac = VAState::vacuum(r);
  for (std::size_t v = 0; v < r; ++v) {
    // (2Q)^{-1} = Q^{-1}/2
    LatticeVector dual(r);
    for (std::size_t b = 0; b < r; ++b) dual[b] = inv(v, b) / 2;
    w += heisenberg_mode(dual, -1, heisenberg_mode(L.basis_vector(v), -1, vac, L), L);
  }
  return w;
}

VAState virasoro_mode(Int k, const VAState& s, const Lattice& L) {
  const RationalMatrix& inv = L.Q_inverse();
  const std::size_t r = L.rank();
  VAState out;
  for (const auto& [beta, p] : s.sectors()) {
    const Int D = p.max_degree();
    FockPoly acc;
    for (std::size_t a = 0; a < r; ++a) {
      LatticeVector ea = L.basis_vector(a);
      LatticeVector dual(r);
      bool any = false;
      for (std::size_t b = 0; b < r; ++b) {
        dual[b] = inv(a, b);
        any = any || dual[b] != 0;
      }
      if (!any) continue;
      const LatticeVector Qa = L.Q_row(ea);
      const LatticeVector Qdual = L.Q_row(dual);
      auto apply = [&](const LatticeVector& x, const LatticeVector& Qx, Int mode, const FockPoly& q) {
        if (mode < 0) return q * oscillator(x, static_cast<std::uint32_t>(-mode));
        return annihilate(Qx, mode, q, beta);
      };
      for (Int m = std::min(k - D, k + 1); m <= std::max<Int>(D, -1); ++m) {
        const Int n = k - m;
        if (m >= 0 && m > D) continue;
        if (n >= 0 && n > D) continue;
        // annihilators act first
        FockPoly t;
        if (m >= 0 && n < 0) {
          t = apply(dual, Qdual, n, apply(ea, Qa, m, p));
        } else {
          t = apply(ea, Qa, m, apply(dual, Qdual, n, p));
        }
        acc += t;
      }
    }
    acc *= ratio(1, 2);
    out.add(beta, acc);
  }
  return out;
}

VAState virasoro_mode_generic(Int k, const VAState& s, const Lattice& L) {
  return vertex_mode(conformal_element(L), k + 1, s, L);
}

// ---------------------------------------------------------------------------

Rational pairing(const DescPoly& tau, const VAState& s, const DimVector& alpha) {
  const FockPoly p = s.component(alpha);
  Rational total = 0;
  for (const auto& [m, c] : tau.terms()) {
    Rational d = p.coefficient(m);
    if (d == 0) continue;
    Rational w = c * d;
    for (const auto& [g, e] : m.factors()) w *= factorial(e) / pow(factorial(g.level - 1), e);
    total += w;
  }
  return total;
}

DualCheck dual_check(Int k, const DescPoly& tau, const VAState& s, const DimVector& alpha, const Quiver& quiver,
                     const Lattice& L) {
  const VirContext ctx = VirContext::with_class(quiver, alpha);
  DualCheck r;
  r.lhs = pairing(apply_L(k, tau, ctx), s, alpha);
  VAState rhs = virasoro_mode(k, s, L);
  if (k == 0) rhs += s;
  r.rhs = pairing(tau, rhs, alpha);
  return r;
}

DualCheck embedded_dual_check(Int k, const DescPoly& tau_over_q, const VAState& s, const DimVector& alpha,
                              const Quiver& q, const Lattice& framed_lattice) {
  const std::size_t n = q.vertex_count();
  if (framed_lattice.rank() != 2 * n) throw Error("lattice is not the framed lattice of the quiver");
  std::vector<std::size_t> slots(n);
  for (std::size_t v = 0; v < n; ++v) slots[v] = n + v;
  std::vector<Int> big(2 * n, 0);
  for (std::size_t v = 0; v < n; ++v) big[n + v] = alpha[v];
  const DimVector sector(big);
  const VirContext ctx = VirContext::with_class(q, alpha);
  DualCheck r;
  r.lhs = pairing(reindex(apply_L(k, tau_over_q, ctx), slots), s, sector);
  r.rhs = pairing(reindex(tau_over_q, slots), virasoro_mode(k, s, framed_lattice), sector);
  return r;
}

std::string format_state(const VAState& s, const Lattice& L) {
  if (s.is_zero()) return "0";
  std::ostringstream out;
  bool first_sector = true;
  for (const auto& [alpha, p] : s.sectors()) {
    if (!first_sector) out << " + ";
    first_sector = false;
    out << "e^(";
    for (std::size_t i = 0; i < alpha.size(); ++i) out << (i ? "," : "") << alpha[i];
    out << ")*(";
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
      if (!first) out << " + ";
      first = false;
      out << to_string(c);
      for (const auto& [g, e] : m.factors()) {
        out << '*' << L.basis()[g.slot] << "_{-" << g.level << '}';
        if (e > 1) out << '^' << e;
      }
    }
    out << ')';
  }
  return out.str();
}

}  // namespace quivir
