#include "quivir/flag.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace quivir {

FlagShape::FlagShape(std::vector<Int> dims, Int ambient) : dims_(std::move(dims)), ambient_(ambient) {
  if (dims_.empty()) throw Error("flag shape needs at least one step");
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 1) throw Error("flag dimensions must be positive");
    if (i > 0 && dims_[i] <= dims_[i - 1]) throw Error("flag dimensions must strictly increase");
  }
  if (dims_.back() >= ambient_) throw Error("flag dimensions must stay below the ambient dimension");
}

FlagShape FlagShape::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error("flag shape must look like DIMS:N");
  auto number = [&](std::string_view s) {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw Error("bad number '" + std::string(s) + "' in flag shape");
    return v;
  };
  std::vector<Int> dims;
  std::string_view head = text.substr(0, colon);
  std::size_t pos = 0;
  while (pos <= head.size()) {
    auto comma = head.find(',', pos);
    if (comma == std::string_view::npos) comma = head.size();
    dims.push_back(number(head.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return FlagShape(std::move(dims), number(text.substr(colon + 1)));
}

std::string FlagShape::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < dims_.size(); ++i) out << (i ? "," : "") << dims_[i];
  out << ':' << ambient_;
  return out.str();
}

Int dimension(const FlagShape& shape) {
  Int total = 0;
  const auto& d = shape.dims();
  for (std::size_t i = 0; i < d.size(); ++i) {
    Int next = i + 1 < d.size() ? d[i + 1] : shape.ambient();
    total += d[i] * (next - d[i]);
  }
  return total;
}

Quiver flag_quiver(const FlagShape& shape) {
  QuiverBuilder b;
  const std::size_t l1 = shape.steps();
  for (std::size_t i = 1; i <= l1; ++i) b.vertex(std::to_string(i));
  for (std::size_t i = 1; i < l1; ++i) b.edge(std::to_string(i + 1), std::to_string(i));
  return b.build();
}

DimVector flag_framing(const FlagShape& shape) {
  DimVector n = DimVector::zeros(shape.steps());
  n[shape.steps() - 1] = shape.ambient();
  return n;
}

DimVector flag_dims(const FlagShape& shape) { return DimVector(shape.dims()); }

VirContext flag_context(const FlagShape& shape) {
  return VirContext(flag_quiver(shape), flag_dims(shape), flag_framing(shape));
}

namespace {

void choose(std::size_t start, std::size_t remaining, const std::vector<std::size_t>& pool,
            std::vector<std::size_t>& acc, std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i + remaining <= pool.size(); ++i) {
    acc.push_back(pool[i]);
    choose(i + 1, remaining - 1, pool, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<FixedPoint> enumerate_fixed_points(const FlagShape& shape) {
  // Choose S_{l-1} from all coordinates, then S_{l-2} inside it, and so on.
  std::vector<FixedPoint> points{FixedPoint{}};
  std::vector<std::size_t> all(shape.ambient());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (std::size_t step = shape.steps(); step-- > 0;) {
    std::vector<FixedPoint> next;
    for (const auto& fp : points) {
      const auto& pool = fp.chain.empty() ? all : fp.chain.front();
      std::vector<std::vector<std::size_t>> subsets;
      std::vector<std::size_t> acc;
      choose(0, static_cast<std::size_t>(shape.dims()[step]), pool, acc, subsets);
      for (auto& s : subsets) {
        FixedPoint f = fp;
        f.chain.insert(f.chain.begin(), std::move(s));
        next.push_back(std::move(f));
      }
    }
    points = std::move(next);
  }
  std::sort(points.begin(), points.end(), [](const FixedPoint& a, const FixedPoint& b) { return a.chain < b.chain; });
  return points;
}

std::vector<Int> tangent_weights(const FixedPoint& fp, const FlagShape& shape, const WeightVector& w) {
  if (w.size() != static_cast<std::size_t>(shape.ambient())) throw Error("weight vector has the wrong length");
  std::vector<Int> out;
  for (std::size_t i = 0; i < fp.chain.size(); ++i) {
    const auto& S = fp.chain[i];
    std::vector<std::size_t> next;
    if (i + 1 < fp.chain.size()) {
      next = fp.chain[i + 1];
    } else {
      for (std::size_t c = 0; c < w.size(); ++c) next.push_back(c);
    }
    for (auto b : next) {
      if (std::binary_search(S.begin(), S.end(), b)) continue;
      for (auto a : S) out.push_back(w[b] - w[a]);
    }
  }
  return out;
}

WeightVector default_weights(Int n) {
  WeightVector w(n);
  for (Int i = 0; i < n; ++i) w[i] = i;
  return w;
}

WeightVector alternate_weights(Int n) {
  static const Int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  WeightVector w(n);
  for (Int i = 0; i < n; ++i) w[i] = i < 15 ? primes[i] * (i % 2 ? -1 : 1) : 100 + i;
  return w;
}

Rational realize_and_integrate(const DescPoly& p, const FlagShape& shape, const WeightVector& w) {
  {
    WeightVector sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("localization weights must be pairwise distinct");
  }
  const Int dim = dimension(shape);
  const DescPoly top = p.part_of_degree(dim);
  if (top.is_zero()) return 0;
  for (const auto& [m, c] : top.terms())
    for (const auto& [g, e] : m.factors())
      if (g.slot >= shape.steps()) throw Error("polynomial uses a vertex outside the flag quiver");

  Rational total = 0;
  for (const auto& fp : enumerate_fixed_points(shape)) {
    Rational euler = 1;
    for (Int t : tangent_weights(fp, shape, w)) euler *= t;
    Rational value = top.evaluate([&](Generator g) -> Rational {
      Rational s = 0;
      for (auto c : fp.chain[g.slot]) s += pow(Rational(-w[c]), g.level);
      return s / factorial(g.level);
    });
    total += value / euler;
  }
  return total;
}

Rational realize_and_integrate(const DescPoly& p, const FlagShape& shape) {
  return realize_and_integrate(p, shape, default_weights(shape.ambient()));
}

Rational projective_space_oracle(Int n, const DescPoly& p) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != n - 1) continue;
    Rational t = c;
    for (const auto& [g, e] : m.factors()) {
      if (g.slot != 0) throw Error("projective space has a single vertex");
      t /= pow(factorial(g.level), e);
    }
    total += t;
  }
  return total;
}

Rational framed_virasoro_residual(const FlagShape& shape, Int k, const DescPoly& tau, FramedConvention c) {
  return realize_and_integrate(apply_framed_L(k, tau, flag_context(shape), c), shape);
}

Rational weight_zero_residual(const FlagShape& shape, const DescPoly& tau) {
  const Quiver infinity = frame_at_infinity(flag_quiver(shape), flag_framing(shape));
  std::vector<Int> d{1};
  for (Int x : shape.dims()) d.push_back(x);
  const VirContext ctx(infinity, DimVector(d));
  std::vector<std::size_t> shift(shape.steps());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;
  return realize_and_integrate(zeta(apply_Lwt0(reindex(tau, shift), ctx), infinity), shape);
}

}  // namespace quivir
