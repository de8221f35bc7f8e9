#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quivir/rational.hpp"

namespace quivir {

/// Name of the frozen vertex added by frame_at_infinity and freeze_collapse.
inline constexpr std::string_view kInfinityVertex = "∞";

/// Integer vector indexed by the vertices of a quiver, in declaration order.
/// Elements of the lattice Z^V; dimension and framing vectors are the
/// nonnegative ones.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<Int> entries) : entries_(std::move(entries)) {}
  static DimVector zeros(std::size_t n) { return DimVector(std::vector<Int>(n, 0)); }

  std::size_t size() const { return entries_.size(); }
  Int operator[](std::size_t i) const { return entries_[i]; }
  Int& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Int>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_nonnegative() const;

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend bool operator<(const DimVector& a, const DimVector& b) { return a.entries_ < b.entries_; }
  friend DimVector operator+(const DimVector& a, const DimVector& b);
  friend DimVector operator-(const DimVector& a, const DimVector& b);

 private:
  std::vector<Int> entries_;
};

/// Square integer matrix indexed by vertices.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  std::size_t size() const { return n_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  IntMatrix transpose() const;
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Int> data_;
};

Rational determinant(const IntMatrix& m);

/// A directed pair of vertex indices: an edge, or one homogeneous relation
/// generator recorded only through its endpoints.
struct Arrow {
  std::size_t tail = 0;
  std::size_t head = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class QuiverBuilder;

/// Quiver with frozen vertices and relation-generator counts.  Immutable;
/// construct through QuiverBuilder.
class Quiver {
 public:
  std::size_t vertex_count() const { return names_.size(); }
  const std::string& name(std::size_t v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws for unknown names.
  std::size_t require_index(std::string_view name) const;

  bool is_frozen(std::size_t v) const { return frozen_[v]; }
  std::size_t frozen_count() const;
  bool has_frozen() const { return frozen_count() > 0; }

  const std::vector<Arrow>& edges() const { return edges_; }
  const std::vector<Arrow>& relations() const { return relations_; }

  /// Diagnostic only; relations are not consulted.
  bool is_acyclic() const;

  /// Same vertices and frozen flags, same edge and relation multisets.
  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  friend class QuiverBuilder;
  std::vector<std::string> names_;
  std::vector<bool> frozen_;
  std::vector<Arrow> edges_;
  std::vector<Arrow> relations_;
};

class QuiverBuilder {
 public:
  QuiverBuilder& vertex(std::string name, bool frozen = false);
  QuiverBuilder& edge(std::string_view tail, std::string_view head, Int count = 1);
  QuiverBuilder& relation(std::string_view tail, std::string_view head, Int count = 1);
  /// Validates the invariants and returns the finished quiver.
  Quiver build() const;

 private:
  Quiver q_;
};

/// A and S: A(v,w) counts edges v->w, S(v,w) relation generators v->w.
struct ArrowMatrices {
  IntMatrix adjacency;
  IntMatrix relation;
};
ArrowMatrices adjacency_and_relation_matrices(const Quiver& q);

/// td(Q) = pi_{V\F} - A + S, so that chi(c, d) = <c, td d>.
IntMatrix todd_matrix(const Quiver& q);

/// td + td^T, the Gram matrix of chi_sym.
IntMatrix symmetrized_todd(const Quiver& q);

Int euler_form(const Quiver& q, const DimVector& c, const DimVector& d);
Int chi_sym(const Quiver& q, const DimVector& c, const DimVector& d);

/// True iff det(td + td^T) != 0.
bool is_nondegenerate(const Quiver& q);

/// Adds a frozen vertex ∞ (first in vertex order) with n_v edges ∞ -> v.
Quiver frame_at_infinity(const Quiver& q, const DimVector& framing);

/// Result of collapsing all frozen vertices into a single frozen ∞.
struct CollapsedQuiver {
  Quiver quiver;                     ///< ∞ first, then the unfrozen vertices
  std::vector<std::size_t> kept;     ///< original index of each unfrozen vertex
  std::vector<std::size_t> frozen;   ///< original indices of the frozen vertices
  DimVector frozen_dims;             ///< dimensions fixed at the frozen vertices
  Int infinity_dim = 0;              ///< sum of frozen_dims

  /// (d_∞, d^m) with d_∞ = sum of frozen dimensions; d must agree with frozen_dims.
  DimVector translate(const DimVector& d) const;
  /// (1, d^m): the class used for moduli of the collapsed quiver.
  DimVector moduli_class(const DimVector& d) const;
};

/// frozen_dims lists d_v for the frozen vertices of q in vertex order.
CollapsedQuiver freeze_collapse(const Quiver& q, const DimVector& frozen_dims);

/// Q^fr: frozen copies "(v)" of every vertex (listed first) and one edge (v) -> v each.
Quiver framify(const Quiver& q);

/// Built-in quivers: A1, A2, A3, Kronecker-2, P2, P1xP1.
Quiver preset(std::string_view name);
std::vector<std::string> preset_names();

/// Parsed contents of a quiver text file.
struct QuiverFile {
  Quiver quiver;
  std::optional<DimVector> dim;
  std::optional<DimVector> frame;
};

/// Line-oriented format: `vertex NAME [frozen]`, `edge TAIL HEAD [xCOUNT]`,
/// `relation TAIL HEAD [xCOUNT]`, `dim NAME INT`, `frame NAME INT`; `#` starts
/// a comment.  Throws ParseError with the offending line.
QuiverFile parse_quiver_file(std::string_view text);
std::string serialize_quiver_file(const QuiverFile& file);

}  // namespace quivir
