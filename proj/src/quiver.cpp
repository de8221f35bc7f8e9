#include "quivir/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "quivir/linalg.hpp"

namespace quivir {

bool DimVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Int x) { return x == 0; });
}

bool DimVector::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Int x) { return x >= 0; });
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw Error("vector size mismatch");
  DimVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

DimVector operator-(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw Error("vector size mismatch");
  DimVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error("IntMatrix rows must form a square");
    std::size_t j = 0;
    for (Int x : row) (*this)(i, j++) = x;
    ++i;
  }
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw Error("matrix size mismatch");
  IntMatrix r(a.n_);
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw Error("matrix size mismatch");
  IntMatrix r(a.n_);
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
  return r;
}

Rational determinant(const IntMatrix& m) {
  RationalMatrix r(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = Rational(m(i, j));
  return determinant(std::move(r));
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> Quiver::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t Quiver::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw Error("unknown vertex '" + std::string(name) + "'");
  return *i;
}

std::size_t Quiver::frozen_count() const {
  return static_cast<std::size_t>(std::count(frozen_.begin(), frozen_.end(), true));
}

bool Quiver::is_acyclic() const {
  const std::size_t n = vertex_count();
  std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& e : edges_) out[e.tail].push_back(e.head);
  std::function<bool(std::size_t)> visit = [&](std::size_t v) {
    state[v] = 1;
    for (auto w : out[v]) {
      if (state[w] == 1) return false;
      if (state[w] == 0 && !visit(w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (std::size_t v = 0; v < n; ++v)
    if (state[v] == 0 && !visit(v)) return false;
  return true;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.names_ != b.names_ || a.frozen_ != b.frozen_) return false;
  auto ma = adjacency_and_relation_matrices(a);
  auto mb = adjacency_and_relation_matrices(b);
  return ma.adjacency == mb.adjacency && ma.relation == mb.relation;
}

QuiverBuilder& QuiverBuilder::vertex(std::string name, bool frozen) {
  if (name.empty()) throw Error("empty vertex name");
  for (char c : name)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#')
      throw Error("vertex name '" + name + "' contains whitespace or '#'");
  if (q_.index_of(name)) throw Error("duplicate vertex '" + name + "'");
  q_.names_.push_back(std::move(name));
  q_.frozen_.push_back(frozen);
  return *this;
}

QuiverBuilder& QuiverBuilder::edge(std::string_view tail, std::string_view head, Int count) {
  if (count < 1) throw Error("edge multiplicity must be positive");
  Arrow a{q_.require_index(tail), q_.require_index(head)};
  for (Int i = 0; i < count; ++i) q_.edges_.push_back(a);
  return *this;
}

QuiverBuilder& QuiverBuilder::relation(std::string_view tail, std::string_view head, Int count) {
  if (count < 1) throw Error("relation multiplicity must be positive");
  Arrow a{q_.require_index(tail), q_.require_index(head)};
  if (q_.frozen_[a.tail]) throw Error("relation with frozen tail '" + std::string(tail) + "'");
  for (Int i = 0; i < count; ++i) q_.relations_.push_back(a);
  return *this;
}

Quiver QuiverBuilder::build() const { return q_; }

// ---------------------------------------------------------------------------

ArrowMatrices adjacency_and_relation_matrices(const Quiver& q) {
  ArrowMatrices m{IntMatrix(q.vertex_count()), IntMatrix(q.vertex_count())};
  for (const auto& e : q.edges()) ++m.adjacency(e.tail, e.head);
  for (const auto& r : q.relations()) ++m.relation(r.tail, r.head);
  return m;
}

IntMatrix todd_matrix(const Quiver& q) {
  auto [a, s] = adjacency_and_relation_matrices(q);
  IntMatrix td = s - a;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (!q.is_frozen(v)) td(v, v) += 1;
  return td;
}

IntMatrix symmetrized_todd(const Quiver& q) {
  IntMatrix td = todd_matrix(q);
  return td + td.transpose();
}

namespace {

void check_indexed(const Quiver& q, const DimVector& v) {
  if (v.size() != q.vertex_count())
    throw Error("vector has " + std::to_string(v.size()) + " entries, quiver has " +
                std::to_string(q.vertex_count()) + " vertices");
}

}  // namespace

Int euler_form(const Quiver& q, const DimVector& c, const DimVector& d) {
  check_indexed(q, c);
  check_indexed(q, d);
  Int chi = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (!q.is_frozen(v)) chi += c[v] * d[v];
  for (const auto& e : q.edges()) chi -= c[e.tail] * d[e.head];
  for (const auto& r : q.relations()) chi += c[r.tail] * d[r.head];
  return chi;
}

Int chi_sym(const Quiver& q, const DimVector& c, const DimVector& d) {
  return euler_form(q, c, d) + euler_form(q, d, c);
}

bool is_nondegenerate(const Quiver& q) { return determinant(symmetrized_todd(q)) != 0; }

Quiver frame_at_infinity(const Quiver& q, const DimVector& framing) {
  if (q.has_frozen()) throw Error("frame_at_infinity requires a quiver without frozen vertices");
  check_indexed(q, framing);
  if (!framing.is_nonnegative()) throw Error("framing vector must be nonnegative");
  if (framing.is_zero()) throw Error("framing vector must be nonzero");
  if (q.index_of(kInfinityVertex)) throw Error("vertex name ∞ is reserved");
  QuiverBuilder b;
  b.vertex(std::string(kInfinityVertex), true);
  for (const auto& name : q.names()) b.vertex(name);
  for (const auto& e : q.edges()) b.edge(q.name(e.tail), q.name(e.head));
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (framing[v] > 0) b.edge(kInfinityVertex, q.name(v), framing[v]);
  for (const auto& r : q.relations()) b.relation(q.name(r.tail), q.name(r.head));
  return b.build();
}

CollapsedQuiver freeze_collapse(const Quiver& q, const DimVector& frozen_dims) {
  CollapsedQuiver out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) (q.is_frozen(v) ? out.frozen : out.kept).push_back(v);
  if (out.frozen.empty()) throw Error("freeze_collapse requires at least one frozen vertex");
  if (frozen_dims.size() != out.frozen.size())
    throw Error("expected " + std::to_string(out.frozen.size()) + " frozen dimensions");
  if (!frozen_dims.is_nonnegative()) throw Error("frozen dimensions must be nonnegative");
  if (frozen_dims.is_zero()) throw Error("frozen dimensions must not all vanish");
  if (q.index_of(kInfinityVertex) && !q.is_frozen(*q.index_of(kInfinityVertex)))
    throw Error("vertex name ∞ is reserved");
  out.frozen_dims = frozen_dims;
  for (std::size_t i = 0; i < out.frozen.size(); ++i) out.infinity_dim += frozen_dims[i];

  std::vector<Int> dim_at(q.vertex_count(), 0);
  for (std::size_t i = 0; i < out.frozen.size(); ++i) dim_at[out.frozen[i]] = frozen_dims[i];

  QuiverBuilder b;
  b.vertex(std::string(kInfinityVertex), true);
  for (auto v : out.kept) b.vertex(q.name(v));
  for (const auto& e : q.edges()) {
    if (q.is_frozen(e.head)) throw Error("freeze_collapse: edge into frozen vertex '" + q.name(e.head) + "'");
    if (q.is_frozen(e.tail)) {
      if (dim_at[e.tail] > 0) b.edge(kInfinityVertex, q.name(e.head), dim_at[e.tail]);
    } else {
      b.edge(q.name(e.tail), q.name(e.head));
    }
  }
  for (const auto& r : q.relations()) {
    if (q.is_frozen(r.head)) throw Error("freeze_collapse: relation ending at a frozen vertex");
    b.relation(q.name(r.tail), q.name(r.head));
  }
  out.quiver = b.build();
  return out;
}

DimVector CollapsedQuiver::translate(const DimVector& d) const {
  if (d.size() != kept.size() + frozen.size()) throw Error("dimension vector size mismatch");
  for (std::size_t i = 0; i < frozen.size(); ++i)
    if (d[frozen[i]] != frozen_dims[i]) throw Error("dimension vector disagrees with the frozen dimensions");
  std::vector<Int> e{infinity_dim};
  for (auto v : kept) e.push_back(d[v]);
  return DimVector(std::move(e));
}

DimVector CollapsedQuiver::moduli_class(const DimVector& d) const {
  DimVector t = translate(d);
  t[0] = 1;
  return t;
}

Quiver framify(const Quiver& q) {
  if (q.has_frozen()) throw Error("framify requires a quiver without frozen vertices");
  QuiverBuilder b;
  for (const auto& name : q.names()) b.vertex("(" + name + ")", true);
  for (const auto& name : q.names()) b.vertex(name);
  for (const auto& e : q.edges()) b.edge(q.name(e.tail), q.name(e.head));
  for (const auto& name : q.names()) b.edge("(" + name + ")", name);
  for (const auto& r : q.relations()) b.relation(q.name(r.tail), q.name(r.head));
  return b.build();
}

// ---------------------------------------------------------------------------

namespace {

std::string normalize_preset(std::string_view name) {
  std::string s;
  for (char c : name) {
    if (c == '_' || c == '-' || c == ' ') continue;
    s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return s;
}

}  // namespace

std::vector<std::string> preset_names() { return {"A1", "A2", "A3", "Kronecker-2", "P2", "P1xP1"}; }

Quiver preset(std::string_view name) {
  const std::string key = normalize_preset(name);
  QuiverBuilder b;
  if (key == "a1") {
    b.vertex("1");
  } else if (key == "a2") {
    b.vertex("1").vertex("2").edge("1", "2");
  } else if (key == "a3") {
    b.vertex("1").vertex("2").vertex("3").edge("1", "2").edge("2", "3");
  } else if (key == "kronecker2" || key == "kronecker") {
    b.vertex("1").vertex("2").edge("1", "2", 2);
  } else if (key == "p2") {
    // b_j a_i = b_i a_j for i < j: three generators 1 -> 3.
    b.vertex("1").vertex("2").vertex("3").edge("1", "2", 3).edge("2", "3", 3).relation("1", "3", 3);
  } else if (key == "p1xp1") {
    b.vertex("1").vertex("2").vertex("3").vertex("4");
    b.edge("1", "3", 2).edge("2", "3", 2).edge("3", "4", 4);
    b.relation("1", "4", 2).relation("2", "4", 2);
  } else {
    throw Error("unknown preset '" + std::string(name) + "'");
  }
  return b.build();
}

}  // namespace quivir
