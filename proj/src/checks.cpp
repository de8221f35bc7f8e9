#include "quivir/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "quivir/coset.hpp"
#include "quivir/lattice_va.hpp"

namespace quivir {
namespace {

using Rng = std::mt19937_64;

std::string join_dims(const DimVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

std::string poly_residual(const DescPoly& p, const Quiver& q) { return p.is_zero() ? "0" : format_desc_poly(p, q); }

std::string state_residual(const VAState& s, const Lattice& L) { return s.is_zero() ? "0" : format_state(s, L); }

const Quiver& require_quiver(const CheckSpec& spec) {
  if (!spec.quiver) throw Error("suite '" + spec.suite + "' needs --quiver or --preset");
  return *spec.quiver;
}

// ---------------------------------------------------------------------------
// descendent commutators

std::vector<CheckCase> commutator_cases(const CheckSpec& spec) {
  const Quiver& q = require_quiver(spec);
  if (!spec.dim) throw Error("suite 'commutators' needs --dim");
  auto ctx = std::make_shared<VirContext>(q, *spec.dim, spec.framing);
  const bool framed = spec.framing.has_value();
  const FramedConvention conv = spec.convention;
  auto monomials = std::make_shared<std::vector<Monomial>>(
      monomials_up_to_degree(static_cast<std::uint32_t>(q.vertex_count()), spec.degmax.value_or(6)));

  // The framed operators are defined for k >= 0 only.
  const Int kmin = framed ? 0 : -1;
  std::vector<CheckCase> cases;
  for (Int n = kmin; n <= spec.kmax; ++n) {
    for (Int m = kmin; m <= spec.kmax; ++m) {
      std::ostringstream id;
      id << "n=" << n << " m=" << m;
      cases.push_back({id.str(), [=]() {
                         auto L = [&](Int k, const DescPoly& p) {
                           return framed ? apply_framed_L(k, p, *ctx, conv) : apply_L(k, p, *ctx);
                         };
                         for (const auto& mono : *monomials) {
                           DescPoly p(mono);
                           DescPoly r = L(n, L(m, p)) - L(m, L(n, p));
                           if (m != n) r -= Rational(m - n) * L(n + m, p);
                           if (!r.is_zero())
                             return format_desc_poly(p, ctx->quiver()) + " -> " + poly_residual(r, ctx->quiver());
                         }
                         return std::string("0");
                       }});
    }
  }
  return cases;
}

// ---------------------------------------------------------------------------
// flag suites

Int flag_degree_bound(const CheckSpec& spec, const FlagShape& shape) {
  return spec.degmax.value_or(dimension(shape) + 3);
}

std::vector<CheckCase> framed_cases(const CheckSpec& spec) {
  if (spec.flags.empty()) throw Error("suite 'framed' needs --flag");
  std::vector<CheckCase> cases;
  for (const auto& shape : spec.flags) {
    const Quiver q = flag_quiver(shape);
    auto monomials = monomials_up_to_degree(static_cast<std::uint32_t>(shape.steps()), flag_degree_bound(spec, shape));
    for (Int k = 0; k <= spec.kmax; ++k) {
      for (const auto& m : monomials) {
        DescPoly tau(m);
        std::string id = "flag=" + shape.to_string() + " k=" + std::to_string(k) + " tau=" + format_desc_poly(tau, q);
        const FramedConvention conv = spec.convention;
        cases.push_back({id, [=]() { return to_string(framed_virasoro_residual(shape, k, tau, conv)); }});
      }
    }
  }
  return cases;
}

std::vector<CheckCase> wt0_cases(const CheckSpec& spec) {
  if (spec.flags.empty()) throw Error("suite 'wt0' needs --flag");
  std::vector<CheckCase> cases;
  for (const auto& shape : spec.flags) {
    const Quiver q = flag_quiver(shape);
    for (const auto& m :
         monomials_up_to_degree(static_cast<std::uint32_t>(shape.steps()), flag_degree_bound(spec, shape))) {
      DescPoly tau(m);
      std::string id = "flag=" + shape.to_string() + " tau=" + format_desc_poly(tau, q);
      cases.push_back({id, [=]() { return to_string(weight_zero_residual(shape, tau)); }});
    }
  }
  return cases;
}

// ---------------------------------------------------------------------------
// lattice suites

struct LatticeSetup {
  Quiver quiver;                    // quiver whose Euler form gives q
  std::optional<Quiver> unframed;   // set when quiver = framify(unframed)
  Lattice lattice;
};

std::shared_ptr<const LatticeSetup> lattice_setup(const CheckSpec& spec) {
  const Quiver& q = require_quiver(spec);
  if (q.has_frozen()) {
    return std::make_shared<LatticeSetup>(LatticeSetup{q, std::nullopt, Lattice::from_quiver(q)});
  }
  Quiver fr = framify(q);
  return std::make_shared<LatticeSetup>(LatticeSetup{fr, q, Lattice::from_quiver(fr)});
}

FockPoly random_monomial(Rng& rng, std::size_t rank, Int degree) {
  std::vector<Monomial::Factor> f;
  Int left = degree;
  while (left > 0) {
    std::uniform_int_distribution<Int> level(1, left);
    std::uniform_int_distribution<std::size_t> slot(0, rank - 1);
    Int l = level(rng);
    f.emplace_back(Generator{static_cast<std::uint32_t>(slot(rng)), static_cast<std::uint32_t>(l)}, 1);
    left -= l;
  }
  return FockPoly(Monomial::from_factors(std::move(f)));
}

DimVector random_sector(Rng& rng, std::size_t rank, Int range) {
  std::uniform_int_distribution<Int> entry(-range, range);
  std::vector<Int> v(rank);
  for (auto& x : v) x = entry(rng);
  return DimVector(v);
}

VAState random_state(Rng& rng, const Lattice& L, Int max_depth, Int range) {
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<Int> depth(0, max_depth);
  std::uniform_int_distribution<int> coef(1, 6);
  const DimVector alpha = random_sector(rng, L.rank(), range);
  FockPoly p;
  for (int t = terms(rng); t > 0; --t) {
    int c = coef(rng);
    p += Rational(c <= 3 ? c : 3 - c) * random_monomial(rng, L.rank(), depth(rng));
  }
  if (p.is_zero()) p = FockPoly(1);
  return VAState::exp(alpha, p);
}

Int growth(const std::optional<Int>& bound, Int n) { return bound ? *bound - n : -1; }

// Sum_i (-1)^{i+n+1} T^{(i)} b_(n+i) a - a_(n) b
VAState skew_residual(const VAState& a, const VAState& b, Int n, const Lattice& L) {
  VAState rhs;
  const auto bound = max_nonzero_mode(b, a, L);
  if (bound) {
    for (Int i = 0; n + i <= *bound; ++i) {
      VAState t = vertex_mode(b, n + i, a, L);
      for (Int j = 0; j < i; ++j) t = translate(t);
      t *= Rational(sign_power(i + n + 1)) / factorial(i);
      rhs += t;
    }
  }
  return rhs - vertex_mode(a, n, b, L);
}

VAState iterate_residual(const VAState& a, const VAState& b, const VAState& c, Int m, Int n, const Lattice& L) {
  VAState lhs = vertex_mode(vertex_mode(a, m, b, L), n, c, L);
  const auto bc = max_nonzero_mode(b, c, L);
  const auto ac = max_nonzero_mode(a, c, L);
  Int top = -1;
  if (bc) top = std::max(top, *bc - n);
  if (ac) top = std::max(top, *ac);
  if (m >= 0) top = std::min(top, m);
  VAState rhs;
  for (Int i = 0; i <= top; ++i) {
    const Rational coef = sign_power(i) * binomial(m, i);
    if (coef == 0) continue;
    VAState t;
    if (bc && n + i <= *bc) t += vertex_mode(a, m - i, vertex_mode(b, n + i, c, L), L);
    if (ac && i <= *ac) {
      VAState u = vertex_mode(b, m + n - i, vertex_mode(a, i, c, L), L);
      u *= Rational(sign_power(m));
      t -= u;
    }
    t *= coef;
    rhs += t;
  }
  return lhs - rhs;
}

VAState heisenberg_residual(const VAState& s, const Lattice& L) {
  VAState total;
  for (std::size_t x = 0; x < L.rank(); ++x)
    for (std::size_t y = 0; y < L.rank(); ++y)
      for (Int m = -3; m <= 3; ++m)
        for (Int n = -3; n <= 3; ++n) {
          const auto ex = L.basis_vector(x), ey = L.basis_vector(y);
          VAState r = heisenberg_mode(ex, m, heisenberg_mode(ey, n, s, L), L) -
                      heisenberg_mode(ey, n, heisenberg_mode(ex, m, s, L), L);
          if (m + n == 0) {
            VAState expected = s;
            expected *= Rational(m * L.Q()(x, y));
            r -= expected;
          }
          if (!r.is_zero()) return r;
        }
  return total;
}

VAState virasoro_residual(const VAState& s, const Lattice& L) {
  const Rational C = static_cast<Int>(L.rank());
  std::map<Int, VAState> once;
  for (Int k = -3; k <= 3; ++k) once[k] = virasoro_mode(k, s, L);
  for (Int n = -3; n <= 3; ++n)
    for (Int m = -3; m <= 3; ++m) {
      VAState r = virasoro_mode(n, once[m], L) - virasoro_mode(m, once[n], L);
      VAState expected = virasoro_mode(n + m, s, L);
      expected *= Rational(n - m);
      if (n + m == 0) {
        VAState central = s;
        central *= C * ratio(n * n * n - n, 12);
        expected += central;
      }
      r -= expected;
      if (!r.is_zero()) return r;
    }
  return VAState();
}

bool modest(const std::optional<Int>& bound, Int n, Int limit) { return growth(bound, n) <= limit; }

// Oscillator degree of an iterated product of single-sector states whose
// L_0-weights add up to Sum wt - shift.
Int output_degree(const Lattice& L, std::initializer_list<const VAState*> states, Int shift) {
  DimVector total = DimVector::zeros(L.rank());
  Int weight = -shift;
  for (const VAState* s : states) {
    const DimVector& alpha = s->sectors().begin()->first;
    weight += s->depth() + L.q_form(alpha, alpha);
    total = total + alpha;
  }
  return weight - L.q_form(total, total);
}

std::vector<CheckCase> va_axiom_cases(const CheckSpec& spec) {
  auto setup = lattice_setup(spec);
  const Lattice& L = setup->lattice;
  if (!L.is_nondegenerate()) throw Error("the lattice form is degenerate");
  Rng rng(spec.seed);
  std::vector<CheckCase> cases;
  auto keep = setup;  // keeps L alive inside the closures

  cases.push_back({"omega-forms", [keep]() {
                     const Lattice& L = keep->lattice;
                     return state_residual(conformal_element(L) - conformal_element_dual_form(L), L);
                   }});
  cases.push_back({"vacuum-central", [keep]() {
                     const Lattice& L = keep->lattice;
                     const VAState vac = VAState::vacuum(L.rank());
                     VAState r = virasoro_mode(2, virasoro_mode(-2, vac, L), L);
                     VAState expected = vac;
                     expected *= ratio(static_cast<Int>(L.rank()), 2);
                     return state_residual(r - expected, L);
                   }});

  const std::size_t triples = spec.samples;
  for (std::size_t i = 0; i < triples; ++i) {
    VAState s = random_state(rng, L, 3, 1);
    cases.push_back({"heisenberg/" + std::to_string(i), [keep, s]() {
                       return state_residual(heisenberg_residual(s, keep->lattice), keep->lattice);
                     }});
  }

  // e^alpha, e^beta with Q(alpha, beta) = -1
  for (std::size_t a = 0; a < L.rank(); ++a)
    for (std::size_t b = 0; b < L.rank(); ++b) {
      DimVector ea = DimVector::zeros(L.rank()), eb = DimVector::zeros(L.rank());
      ea[a] = 1;
      eb[b] = 1;
      if (L.Q_form(ea, eb) != -1) continue;
      cases.push_back({"skew/basis " + join_dims(ea) + " " + join_dims(eb), [keep, ea, eb]() {
                         const Lattice& L = keep->lattice;
                         return state_residual(skew_residual(VAState::exp(ea), VAState::exp(eb), 0, L), L);
                       }});
    }

  std::uniform_int_distribution<Int> mode(-2, 2);
  for (std::size_t i = 0; i < triples;) {
    VAState a = random_state(rng, L, 3, 1), b = random_state(rng, L, 3, 1);
    Int n = mode(rng);
    if (output_degree(L, {&a, &b}, n + 1) > 6 || !modest(max_nonzero_mode(b, a, L), n, 6)) continue;
    cases.push_back({"skew/" + std::to_string(i), [keep, a, b, n]() {
                       return state_residual(skew_residual(a, b, n, keep->lattice), keep->lattice);
                     }});
    ++i;
  }
  for (std::size_t i = 0; i < triples;) {
    VAState a = random_state(rng, L, 3, 1), b = random_state(rng, L, 3, 1), c = random_state(rng, L, 3, 1);
    Int m = mode(rng), n = mode(rng);
    if (output_degree(L, {&a, &b, &c}, m + n + 2) > 5 || output_degree(L, {&a, &b}, m + 1) > 4 ||
        !modest(max_nonzero_mode(b, c, L), n, 4) ||
        !modest(max_nonzero_mode(a, c, L), 0, 4))
      continue;
    cases.push_back({"iterate/" + std::to_string(i), [keep, a, b, c, m, n]() {
                       return state_residual(iterate_residual(a, b, c, m, n, keep->lattice), keep->lattice);
                     }});
    ++i;
  }

  const std::size_t vir_states = std::max<std::size_t>(4, spec.samples / 20);
  for (std::size_t i = 0; i < vir_states; ++i) {
    VAState s = random_state(rng, L, 4, 1);
    cases.push_back({"virasoro/" + std::to_string(i), [keep, s]() {
                       return state_residual(virasoro_residual(s, keep->lattice), keep->lattice);
                     }});
    cases.push_back({"generic-vs-closed/" + std::to_string(i), [keep, s]() {
                       const Lattice& L = keep->lattice;
                       for (Int k = -3; k <= 3; ++k) {
                         VAState r = virasoro_mode(k, s, L) - virasoro_mode_generic(k, s, L);
                         if (!r.is_zero()) return "k=" + std::to_string(k) + ": " + state_residual(r, L);
                       }
                       return std::string("0");
                     }});
    cases.push_back({"translation/" + std::to_string(i), [keep, s]() {
                       const Lattice& L = keep->lattice;
                       return state_residual(virasoro_mode(-1, s, L) - translate(s), L);
                     }});
  }
  for (std::size_t i = 0; i < vir_states; ++i) {
    const DimVector alpha = random_sector(rng, L.rank(), 1);
    std::uniform_int_distribution<std::uint32_t> level(1, 4);
    std::uniform_int_distribution<std::uint32_t> slot(0, static_cast<std::uint32_t>(L.rank() - 1));
    const Generator g{slot(rng), level(rng)};
    cases.push_back({"weight/" + join_dims(alpha), [keep, alpha, g]() {
                       const Lattice& L = keep->lattice;
                       VAState s = VAState::exp(alpha, FockPoly(Monomial(g)));
                       VAState expected = s;
                       expected *= Rational(static_cast<Int>(g.level) + L.q_form(alpha, alpha));
                       return state_residual(virasoro_mode(0, s, L) - expected, L);
                     }});
  }
  return cases;
}

std::vector<DimVector> duality_sectors(const CheckSpec& spec, const Lattice& L, bool embedded, std::size_t n) {
  std::vector<DimVector> out;
  auto push = [&](DimVector v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  };
  const std::size_t rank = embedded ? n : L.rank();
  push(DimVector::zeros(rank));
  for (std::size_t v = 0; v < rank; ++v) {
    DimVector e = DimVector::zeros(rank);
    e[v] = 1;
    push(e);
  }
  DimVector ones(std::vector<Int>(rank, 1));
  push(ones);
  if (spec.dim) {
    if (embedded && spec.dim->size() == rank) push(*spec.dim);
    if (!embedded && spec.dim->size() * 2 == rank) {
      std::vector<Int> big(rank, 0);
      for (std::size_t v = 0; v < spec.dim->size(); ++v) {
        big[spec.dim->size() + v] = (*spec.dim)[v];
        big[v] = spec.framing ? (*spec.framing)[v] : 0;
      }
      push(DimVector(big));
    }
  }
  if (!embedded) {
    DimVector mixed = DimVector::zeros(rank);
    mixed[0] = -1;
    mixed[rank - 1] = 2;
    push(mixed);
  }
  return out;
}

std::vector<CheckCase> duality_cases(const CheckSpec& spec) {
  auto setup = lattice_setup(spec);
  const Lattice& L = setup->lattice;
  if (!L.is_nondegenerate()) throw Error("the lattice form is degenerate");
  const Int degmax = spec.degmax.value_or(5);
  std::vector<CheckCase> cases;
  auto fock = std::make_shared<std::vector<Monomial>>(monomials_up_to_degree(static_cast<std::uint32_t>(L.rank()), degmax));

  for (const auto& alpha : duality_sectors(spec, L, false, 0)) {
    for (Int k = -1; k <= spec.kmax; ++k) {
      std::string id = "framed alpha=" + join_dims(alpha) + " k=" + std::to_string(k);
      cases.push_back({id, [setup, fock, alpha, k, degmax]() {
                         const Lattice& L = setup->lattice;
                         const VirContext ctx = VirContext::with_class(setup->quiver, alpha);
                         std::map<Monomial, DescPoly> moved;
                         for (const auto& sm : *fock) {
                           if (sm.degree() - k < 0 || sm.degree() - k > degmax) continue;
                           const VAState s = VAState::exp(alpha, FockPoly(sm));
                           VAState Ls = virasoro_mode(k, s, L);
                           if (k == 0) Ls += s;
                           for (const auto& tm : monomials_of_degree(static_cast<std::uint32_t>(L.rank()), sm.degree() - k)) {
                             auto it = moved.find(tm);
                             if (it == moved.end()) it = moved.emplace(tm, apply_L(k, DescPoly(tm), ctx)).first;
                             const Rational r = pairing(it->second, s, alpha) - pairing(DescPoly(tm), Ls, alpha);
                             if (r != 0) return to_string(r);
                           }
                         }
                         return std::string("0");
                       }});
    }
  }
  if (setup->unframed) {
    const Quiver& q = *setup->unframed;
    const std::size_t n = q.vertex_count();
    auto inner = std::make_shared<std::vector<Monomial>>(monomials_up_to_degree(static_cast<std::uint32_t>(n), degmax));
    for (const auto& alpha : duality_sectors(spec, L, true, n)) {
      std::vector<Int> big(2 * n, 0);
      for (std::size_t v = 0; v < n; ++v) big[n + v] = alpha[v];
      const DimVector sector(big);
      for (Int k = -1; k <= spec.kmax; ++k) {
        std::string id = "embedded alpha=" + join_dims(alpha) + " k=" + std::to_string(k);
        cases.push_back({id, [setup, fock, inner, alpha, sector, k, degmax, n]() {
                           const Lattice& L = setup->lattice;
                           const VirContext ctx = VirContext::with_class(*setup->unframed, alpha);
                           std::vector<std::size_t> slots(n);
                           for (std::size_t v = 0; v < n; ++v) slots[v] = n + v;
                           std::map<Monomial, DescPoly> moved;
                           for (const auto& sm : *fock) {
                             if (sm.degree() - k < 0 || sm.degree() - k > degmax) continue;
                             // states of the unframed Fock space only
                             if (std::any_of(sm.factors().begin(), sm.factors().end(),
                                             [n](const Monomial::Factor& f) { return f.first.slot < n; }))
                               continue;
                             const VAState s = VAState::exp(sector, FockPoly(sm));
                             const VAState Ls = virasoro_mode(k, s, L);
                             for (const auto& tm : monomials_of_degree(static_cast<std::uint32_t>(n), sm.degree() - k)) {
                               auto it = moved.find(tm);
                               if (it == moved.end())
                                 it = moved.emplace(tm, reindex(apply_L(k, DescPoly(tm), ctx), slots)).first;
                               const Rational r =
                                   pairing(it->second, s, sector) - pairing(reindex(DescPoly(tm), slots), Ls, sector);
                               if (r != 0) return to_string(r);
                             }
                           }
                           return std::string("0");
                         }});
      }
    }
  }
  return cases;
}

std::vector<CheckCase> bracket_cases(const CheckSpec& spec) {
  auto setup = lattice_setup(spec);
  const Lattice& L = setup->lattice;
  if (!L.is_nondegenerate()) throw Error("the lattice form is degenerate");
  std::vector<CheckCase> cases;
  const std::size_t rank = L.rank();

  // base states e^v for the unfrozen vertices
  for (std::size_t v = 0; v < rank; ++v) {
    if (setup->quiver.is_frozen(v)) continue;
    DimVector e = DimVector::zeros(rank);
    e[v] = 1;
    cases.push_back({"base e^" + L.basis()[v], [setup, e]() {
                       const Lattice& L = setup->lattice;
                       VAState s = VAState::exp(e);
                       VAState expected = translate(s);
                       expected *= Rational(L.q_form(e, e) - 1);
                       if (L.q_form(e, e) != 1) return "q(v,v) = " + std::to_string(L.q_form(e, e));
                       return state_residual(k0_residual(s, L) - expected, L);
                     }});
  }
  // k0_residual(e^alpha) = (q(alpha,alpha) - 1) T e^alpha
  Rng rng(spec.seed + 1);
  for (int i = 0; i < 8; ++i) {
    DimVector alpha = random_sector(rng, rank, 2);
    cases.push_back({"exp-residual " + join_dims(alpha), [setup, alpha]() {
                       const Lattice& L = setup->lattice;
                       VAState s = VAState::exp(alpha);
                       VAState expected = translate(s);
                       expected *= Rational(L.q_form(alpha, alpha) - 1);
                       VAState r = k0_residual(s, L) - expected;
                       VAState cross = vertex_mode(s, 0, conformal_element(L), L) - k0_residual(s, L);
                       if (!cross.is_zero()) return "a_(0) omega mismatch: " + state_residual(cross, L);
                       return state_residual(r, L);
                     }});
  }

  // residual-free states of L_0-weight 1
  std::vector<VAState> kernel_states;
  const Int range = rank <= 2 ? 2 : 1;
  std::vector<Int> digits(rank, -range);
  while (true) {
    DimVector alpha(digits);
    if (!alpha.is_zero()) {
      const Int D = 1 - L.q_form(alpha, alpha);
      if (D >= 0 && D <= 3)
        for (auto& s : residual_kernel(alpha, D, L)) kernel_states.push_back(std::move(s));
    }
    std::size_t i = 0;
    while (i < rank && digits[i] == range) digits[i++] = -range;
    if (i == rank) break;
    ++digits[i];
  }
  cases.push_back({"kernel-size", [count = kernel_states.size()]() {
                     return count >= 2 ? std::string("0") : "only " + std::to_string(count) + " states";
                   }});

  auto reducer = std::make_shared<CosetReducer>(setup->lattice);
  const std::size_t pairs = std::max<std::size_t>(60, spec.samples / 3);
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  if (kernel_states.size() >= 1) {
    std::uniform_int_distribution<std::size_t> pick(0, kernel_states.size() - 1);
    for (std::size_t attempt = 0; chosen.size() < pairs && attempt < 50 * pairs; ++attempt) {
      std::size_t i = pick(rng), j = pick(rng);
      const DimVector& a = kernel_states[i].sectors().begin()->first;
      const DimVector& b = kernel_states[j].sectors().begin()->first;
      if ((a + b).is_zero()) continue;
      auto bound = max_nonzero_mode(kernel_states[i], kernel_states[j], L);
      if (!bound || *bound > 6) continue;
      chosen.emplace_back(i, j);
    }
  }
  auto states = std::make_shared<std::vector<VAState>>(std::move(kernel_states));
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    auto [i, j] = chosen[c];
    cases.push_back({"bracket/" + std::to_string(c), [setup, states, reducer, i = i, j = j]() {
                       const Lattice& L = setup->lattice;
                       const VAState& a = (*states)[i];
                       const VAState& b = (*states)[j];
                       VAState ab = vertex_mode(a, 0, b, L);
                       VAState r = k0_residual(ab, L);
                       if (!r.is_zero()) return "residual " + state_residual(r, L);
                       VAState anti = reducer->normal_form(ab + vertex_mode(b, 0, a, L));
                       if (!anti.is_zero()) return "antisymmetry " + state_residual(anti, L);
                       return std::string("0");
                     }});
  }
  return cases;
}

}  // namespace

std::vector<std::string> suite_names() { return {"commutators", "framed", "duality", "va-axioms", "bracket", "wt0"}; }

std::vector<CheckCase> build_cases(const CheckSpec& spec) {
  if (spec.kmax < 0) throw Error("--kmax must be nonnegative");
  if (spec.degmax && *spec.degmax < 0) throw Error("--degmax must be nonnegative");
  if (spec.suite == "commutators") return commutator_cases(spec);
  if (spec.suite == "framed") return framed_cases(spec);
  if (spec.suite == "wt0") return wt0_cases(spec);
  if (spec.suite == "va-axioms") return va_axiom_cases(spec);
  if (spec.suite == "duality") return duality_cases(spec);
  if (spec.suite == "bracket") return bracket_cases(spec);
  throw Error("unknown suite '" + spec.suite + "'");
}

std::vector<CheckReport> run_cases(const std::string& suite, const std::vector<CheckCase>& cases, unsigned jobs,
                                   bool timing) {
  std::vector<CheckReport> reports(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      auto start = std::chrono::steady_clock::now();
      CheckReport& r = reports[i];
      r.suite = suite;
      r.case_id = cases[i].id;
      try {
        r.residual = cases[i].run();
        r.pass = r.residual == "0";
      } catch (const std::exception& e) {
        r.residual = std::string("error: ") + e.what();
        r.pass = false;
      }
      if (timing)
        r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned n = std::max(1u, jobs);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return reports;
}

std::vector<CheckReport> run(const CheckSpec& spec) {
  return run_cases(spec.suite, build_cases(spec), spec.jobs, spec.timing);
}

std::string to_json_line(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["case"] = r.case_id;
  j["status"] = r.pass ? "pass" : "fail";
  j["residual"] = r.residual;
  j["ms"] = std::round(r.ms * 1000) / 1000;
  return j.dump();
}

}  // namespace quivir
